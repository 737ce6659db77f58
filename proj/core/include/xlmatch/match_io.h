#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "xlmatch/alignment.h"
#include "xlmatch/signals.h"
#include "xlmatch/typemap.h"

namespace xlmatch {

// Match file: a JSON array, one object per match:
//   {"members": [{"lang": ..., "attribute": ...}, ...],
//    "provenance": [{"phase": "certain", "pair": [...], "vsim": ..., ...}]}
// Members are sorted by (side, name) and matches by their member lists.
std::string matches_to_json(const MatchSet& matches, const SignalProvider& signals,
                            const std::string& left_language,
                            const std::string& right_language);

// Member lists of a match file. Members in any other language are rejected
// with ParseError.
std::vector<std::vector<AttributeKey>> read_matches_json(
    std::istream& in, const std::string& left_language,
    const std::string& right_language);

struct ManifestEntry {
  TypePair types;
  std::string file;  // relative to the manifest
  std::size_t matches = 0;
};

struct Manifest {
  std::string left_language;
  std::string right_language;
  std::vector<ManifestEntry> entries;
};

std::string manifest_to_json(const Manifest& manifest);
Manifest read_manifest(std::istream& in);

// File-system safe name for the match file of a type pair.
std::string match_file_name(const TypePair& types);

}  // namespace xlmatch
