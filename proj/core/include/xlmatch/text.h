#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace xlmatch {

// Lowercases ASCII plus the Latin-1, Latin Extended-A/B (partial), Latin
// Extended Additional, Greek and Cyrillic capital letters. Invalid UTF-8
// bytes are copied through untouched.
std::string to_lower_utf8(std::string_view text);

// Trims and collapses runs of whitespace (ASCII whitespace and U+00A0) into a
// single ASCII space.
std::string collapse_whitespace(std::string_view text);

// to_lower_utf8 followed by collapse_whitespace. Used for titles and value
// components.
std::string normalize_text(std::string_view text);

// normalize_text plus removal of trailing colons ("Born:" -> "born").
std::string normalize_attribute_name(std::string_view name);

struct MarkupText {
  std::string text;
  // Normalized targets of [[target|anchor]] links, in order of appearance.
  std::vector<std::string> link_targets;
};

// Removes the wiki markup we understand: [[target|anchor]] keeps the anchor,
// {{name|a|b}} keeps "a b", <br> becomes a newline, other tags vanish and
// runs of two or more apostrophes are dropped. Applied until a fixpoint so
// nested constructs are handled.
MarkupText strip_markup(std::string_view raw);

// Splits on any of the delimiters; empty pieces are kept (callers filter).
std::vector<std::string> split_any(std::string_view text,
                                   const std::vector<std::string>& delimiters);

}  // namespace xlmatch
