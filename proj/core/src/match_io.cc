#include "xlmatch/match_io.h"

#include <algorithm>
#include <istream>

#include <nlohmann/json.hpp>

#include "xlmatch/errors.h"
#include "xlmatch/text.h"

namespace xlmatch {
namespace {

using json = nlohmann::ordered_json;

json member_json(const AttributeKey& key, const std::string& left,
                 const std::string& right) {
  return {{"lang", key.side == Side::kLeft ? left : right}, {"attribute", key.name}};
}

const json& require(const json& obj, const char* key, const char* what) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ParseError(std::string(what) + ": missing \"" + key + "\"");
  }
  return obj.at(key);
}

std::string require_string(const json& obj, const char* key, const char* what) {
  const auto& v = require(obj, key, what);
  if (!v.is_string()) throw ParseError(std::string(what) + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

json parse(std::istream& in, const char* what) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

std::string matches_to_json(const MatchSet& matches, const SignalProvider& signals,
                            const std::string& left_language,
                            const std::string& right_language) {
  std::vector<const Match*> order;
  for (const auto& m : matches.matches()) order.push_back(&m);
  auto keys = [&](const Match* m) {
    std::vector<AttributeKey> out;
    for (const auto i : m->members) out.push_back(signals.attribute(i));
    std::sort(out.begin(), out.end());
    return out;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](const Match* a, const Match* b) { return keys(a) < keys(b); });

  auto doc = json::array();
  for (const auto* m : order) {
    json entry;
    auto& members = entry["members"] = json::array();
    for (const auto& key : keys(m)) {
      members.push_back(member_json(key, left_language, right_language));
    }
    auto& provenance = entry["provenance"] = json::array();
    for (const auto& e : m->provenance) {
      json event;
      event["phase"] = phase_name(e.phase);
      event["pair"] = json::array(
          {member_json(signals.attribute(e.p), left_language, right_language),
           member_json(signals.attribute(e.q), left_language, right_language)});
      if (!e.created) {
        event["added"] = member_json(signals.attribute(e.added), left_language, right_language);
      }
      event["vsim"] = e.vsim;
      event["lsim"] = e.lsim;
      event["lsi"] = e.lsi;
      if (e.phase == Phase::kRevised) event["inductive_grouping"] = e.inductive_grouping;
      provenance.push_back(std::move(event));
    }
    doc.push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

std::vector<std::vector<AttributeKey>> read_matches_json(
    std::istream& in, const std::string& left_language,
    const std::string& right_language) {
  const auto doc = parse(in, "match file");
  if (!doc.is_array()) throw ParseError("match file: expected an array");
  std::vector<std::vector<AttributeKey>> out;
  for (const auto& entry : doc) {
    const auto& members = require(entry, "members", "match file");
    if (!members.is_array()) throw ParseError("match file: members must be an array");
    auto& keys = out.emplace_back();
    for (const auto& member : members) {
      const auto lang = require_string(member, "lang", "match member");
      const auto name = normalize_attribute_name(require_string(member, "attribute", "match member"));
      if (lang == left_language) {
        keys.push_back({Side::kLeft, name});
      } else if (lang == right_language) {
        keys.push_back({Side::kRight, name});
      } else {
        throw ParseError("match member in unexpected language '" + lang + "'");
      }
    }
  }
  return out;
}

std::string manifest_to_json(const Manifest& manifest) {
  json doc;
  doc["left_language"] = manifest.left_language;
  doc["right_language"] = manifest.right_language;
  auto& entries = doc["types"] = json::array();
  for (const auto& e : manifest.entries) {
    entries.push_back({{"type_left", e.types.left},
                       {"type_right", e.types.right},
                       {"file", e.file},
                       {"matches", e.matches}});
  }
  return doc.dump(2) + "\n";
}

Manifest read_manifest(std::istream& in) {
  const auto doc = parse(in, "manifest");
  Manifest m;
  m.left_language = require_string(doc, "left_language", "manifest");
  m.right_language = require_string(doc, "right_language", "manifest");
  const auto& entries = require(doc, "types", "manifest");
  if (!entries.is_array()) throw ParseError("manifest: types must be an array");
  for (const auto& e : entries) {
    ManifestEntry entry;
    entry.types = {require_string(e, "type_left", "manifest entry"),
                   require_string(e, "type_right", "manifest entry")};
    entry.file = require_string(e, "file", "manifest entry");
    if (const auto it = e.find("matches"); it != e.end() && it->is_number_unsigned()) {
      entry.matches = it->get<std::size_t>();
    }
    m.entries.push_back(std::move(entry));
  }
  return m;
}

std::string match_file_name(const TypePair& types) {
  auto clean = [](const std::string& s) {
    std::string out;
    for (const unsigned char c : s) {
      const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '-' || c == '.';
      out.push_back(keep ? static_cast<char>(c) : '_');
    }
    return out;
  };
  return "matches_" + clean(types.left) + "__" + clean(types.right) + ".json";
}

}  // namespace xlmatch
