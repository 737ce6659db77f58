#include "xlmatch/text.h"

#include <cctype>
#include <cstdint>

namespace xlmatch {
namespace {

// Decodes one code point starting at text[pos]. Returns the number of bytes
// consumed, or 0 when the sequence is not valid UTF-8.
std::size_t decode(std::string_view text, std::size_t pos, char32_t* out) {
  const auto b0 = static_cast<unsigned char>(text[pos]);
  if (b0 < 0x80) {
    *out = b0;
    return 1;
  }
  std::size_t len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return 0;
  }
  if (pos + len > text.size()) return 0;
  for (std::size_t i = 1; i < len; ++i) {
    const auto b = static_cast<unsigned char>(text[pos + i]);
    if ((b & 0xC0) != 0x80) return 0;
    cp = (cp << 6) | (b & 0x3F);
  }
  *out = cp;
  return len;
}

void encode(char32_t cp, std::string* out) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

char32_t lower(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 32;
  if (cp < 0xC0) return cp;
  if (cp <= 0xDE) return cp == 0xD7 ? cp : cp + 0x20;
  if (cp == 0x130) return 'i';
  if (cp >= 0x100 && cp <= 0x137) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp >= 0x139 && cp <= 0x148) return (cp % 2 == 1) ? cp + 1 : cp;
  if (cp >= 0x14A && cp <= 0x177) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp == 0x178) return 0xFF;
  if (cp >= 0x179 && cp <= 0x17E) return (cp % 2 == 1) ? cp + 1 : cp;
  // Vietnamese horn letters.
  if (cp == 0x1A0 || cp == 0x1AF) return cp + 1;
  if (cp >= 0x391 && cp <= 0x3AB && cp != 0x3A2) return cp + 0x20;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
  if (cp >= 0x1E00 && cp <= 0x1EFF && cp != 0x1E9E &&
      !(cp >= 0x1E96 && cp <= 0x1E9F)) {
    return (cp % 2 == 0) ? cp + 1 : cp;
  }
  return cp;
}

bool is_space_byte(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// One innermost-construct pass. Returns true when something changed.
bool strip_once(std::string_view in, std::string* out,
                std::vector<std::string>* links) {
  bool changed = false;
  out->clear();
  out->reserve(in.size());
  std::size_t i = 0;
  while (i < in.size()) {
    const char c = in[i];
    if (c == '[' && i + 1 < in.size() && in[i + 1] == '[') {
      const auto close = in.find("]]", i + 2);
      if (close != std::string_view::npos) {
        const auto body = in.substr(i + 2, close - i - 2);
        if (body.find_first_of("[]") == std::string_view::npos) {
          const auto bar = body.find('|');
          const auto target = body.substr(0, bar);
          const auto anchor =
              bar == std::string_view::npos ? body : body.substr(bar + 1);
          auto norm = normalize_text(target);
          if (!norm.empty()) links->push_back(std::move(norm));
          out->append(anchor);
          i = close + 2;
          changed = true;
          continue;
        }
      }
    } else if (c == '{' && i + 1 < in.size() && in[i + 1] == '{') {
      const auto close = in.find("}}", i + 2);
      if (close != std::string_view::npos) {
        const auto body = in.substr(i + 2, close - i - 2);
        // Links inside a template resolve first so their pipes survive.
        if (body.find_first_of("{}") == std::string_view::npos &&
            body.find("[[") == std::string_view::npos) {
          const auto bar = body.find('|');
          if (bar != std::string_view::npos) {
            std::string args(body.substr(bar + 1));
            for (auto& ch : args) {
              if (ch == '|') ch = ' ';
            }
            out->append(args);
          }
          i = close + 2;
          changed = true;
          continue;
        }
      }
    } else if (c == '<' && i + 1 < in.size()) {
      const auto next = static_cast<unsigned char>(in[i + 1]);
      const bool tag_start = next == '/' || next == '!' ||
                             (next < 0x80 && std::isalpha(next) != 0);
      if (tag_start) {
        const auto close = in.find('>', i + 1);
        if (close != std::string_view::npos) {
          const auto body = in.substr(i + 1, close - i - 1);
          if (body.find('<') == std::string_view::npos) {
            const auto name = to_lower_utf8(body.substr(0, 3));
            if (name.starts_with("br")) out->push_back('\n');
            i = close + 1;
            changed = true;
            continue;
          }
        }
      }
    } else if (c == '\'' && i + 1 < in.size() && in[i + 1] == '\'') {
      while (i < in.size() && in[i] == '\'') ++i;
      changed = true;
      continue;
    }
    out->push_back(c);
    ++i;
  }
  return changed;
}

}  // namespace

std::string to_lower_utf8(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    char32_t cp = 0;
    const auto len = decode(text, pos, &cp);
    if (len == 0) {
      out.push_back(text[pos]);
      ++pos;
      continue;
    }
    if (len == 1) {
      out.push_back(static_cast<char>(lower(cp)));
    } else {
      encode(lower(cp), &out);
    }
    pos += len;
  }
  return out;
}

std::string collapse_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto c = static_cast<unsigned char>(text[i]);
    std::size_t width = 0;
    if (is_space_byte(c)) {
      width = 1;
    } else if (c == 0xC2 && i + 1 < text.size() &&
               static_cast<unsigned char>(text[i + 1]) == 0xA0) {
      width = 2;
    }
    if (width > 0) {
      pending_space = !out.empty();
      i += width;
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(static_cast<char>(c));
    ++i;
  }
  return out;
}

std::string normalize_text(std::string_view text) {
  return collapse_whitespace(to_lower_utf8(text));
}

std::string normalize_attribute_name(std::string_view name) {
  auto out = normalize_text(name);
  while (!out.empty() && (out.back() == ':' || out.back() == ' ')) {
    out.pop_back();
  }
  return out;
}

MarkupText strip_markup(std::string_view raw) {
  MarkupText result;
  std::string current(raw);
  std::string next;
  // Each pass removes at least two bytes when it reports a change, so the
  // loop terminates.
  while (strip_once(current, &next, &result.link_targets)) {
    current.swap(next);
  }
  result.text = std::move(current);
  return result;
}

std::vector<std::string> split_any(std::string_view text,
                                   const std::vector<std::string>& delimiters) {
  std::vector<std::string> pieces;
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t matched = 0;
    for (const auto& d : delimiters) {
      if (!d.empty() && text.substr(i, d.size()) == d) {
        matched = d.size();
        break;
      }
    }
    if (matched > 0) {
      pieces.emplace_back(text.substr(start, i - start));
      i += matched;
      start = i;
    } else {
      ++i;
    }
  }
  pieces.emplace_back(text.substr(start));
  return pieces;
}

}  // namespace xlmatch
