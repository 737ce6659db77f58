#include "xlmatch/evaluation.h"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "xlmatch/errors.h"
#include "xlmatch/text.h"

namespace xlmatch {
namespace {

using Weights = std::map<std::string, double, std::less<>>;

double weight_of(const Weights& weights, const std::string& name, bool required,
                 std::string_view side) {
  const auto it = weights.find(name);
  if (it != weights.end()) return it->second;
  if (required) {
    throw EvaluationError("no frequency for " + std::string(side) +
                          " attribute '" + name + "'");
  }
  return 0.0;
}

// Sum over keys of w(key) * score(key), normalized by the total weight.
// Uniform weights stand in when every weight is zero.
double weighted_average(const std::vector<std::pair<double, double>>& items) {
  double total = 0.0;
  for (const auto& [w, s] : items) total += w;
  if (items.empty()) return 0.0;
  double sum = 0.0;
  if (total <= 0.0) {
    for (const auto& item : items) sum += item.second;
    return sum / static_cast<double>(items.size());
  }
  for (const auto& [w, s] : items) sum += w * s;
  return sum / total;
}

std::map<std::string, std::vector<std::string>> group_by_left(const PairSet& pairs) {
  std::map<std::string, std::vector<std::string>> out;
  for (const auto& p : pairs) out[p.left].push_back(p.right);
  return out;
}

// For each left attribute, the inner weighted share of correspondences found
// in `reference`, then the outer weighted average over left attributes.
double two_level(const PairSet& pairs, const PairSet& reference,
                 const AttributeFrequencies& freqs, bool required) {
  std::vector<std::pair<double, double>> outer;
  for (const auto& [left, rights] : group_by_left(pairs)) {
    std::vector<std::pair<double, double>> inner;
    for (const auto& right : rights) {
      const double w = weight_of(freqs.right, right, required, "right");
      inner.emplace_back(w, reference.contains({left, right}) ? 1.0 : 0.0);
    }
    outer.emplace_back(weight_of(freqs.left, left, required, "left"),
                       weighted_average(inner));
  }
  return weighted_average(outer);
}

std::string fixed(double v, int digits) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

class Classes {
 public:
  explicit Classes(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

void GroundTruth::add(const TypePair& types, NamedPair pair) {
  by_type_[types].insert(std::move(pair));
}

const PairSet* GroundTruth::find(const TypePair& types) const {
  const auto it = by_type_.find(types);
  return it == by_type_.end() ? nullptr : &it->second;
}

std::size_t GroundTruth::size() const {
  std::size_t n = 0;
  for (const auto& [types, pairs] : by_type_) n += pairs.size();
  return n;
}

void GroundTruth::write_tsv(std::ostream& out) const {
  for (const auto& [types, pairs] : by_type_) {
    for (const auto& p : pairs) {
      out << types.label() << '\t' << p.left << '\t' << p.right << '\n';
    }
  }
}

GroundTruth GroundTruth::read_tsv(std::istream& in) {
  GroundTruth truth;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_any(line, {"\t"});
    const auto bar = fields.empty() ? std::string::npos : fields[0].find('|');
    if (fields.size() != 3 || bar == std::string::npos) {
      throw ParseError("ground truth line " + std::to_string(line_no) +
                       ": expected type_left|type_right<TAB>left<TAB>right");
    }
    TypePair types{normalize_attribute_name(fields[0].substr(0, bar)),
                   normalize_attribute_name(fields[0].substr(bar + 1))};
    NamedPair pair{normalize_attribute_name(fields[1]),
                   normalize_attribute_name(fields[2])};
    if (pair.left.empty() || pair.right.empty()) {
      throw ParseError("ground truth line " + std::to_string(line_no) +
                       ": empty attribute name");
    }
    truth.add(types, std::move(pair));
  }
  return truth;
}

double f_measure(double precision, double recall) {
  const double sum = precision + recall;
  return sum > 0.0 ? 2.0 * precision * recall / sum : 0.0;
}

AttributeFrequencies frequencies_of(std::span<const AttributeGroup> groups) {
  AttributeFrequencies freqs;
  for (const auto& g : groups) {
    auto& side = g.side() == Side::kLeft ? freqs.left : freqs.right;
    side[g.name()] = static_cast<double>(g.occurrences);
  }
  return freqs;
}

PairSet flatten_members(const std::vector<std::vector<AttributeKey>>& matches) {
  PairSet out;
  for (const auto& members : matches) {
    for (const auto& a : members) {
      if (a.side != Side::kLeft) continue;
      for (const auto& b : members) {
        if (b.side == Side::kRight) out.insert({a.name, b.name});
      }
    }
  }
  return out;
}

PairSet flatten_matches(const MatchSet& matches, const SignalProvider& signals) {
  std::vector<std::vector<AttributeKey>> keyed;
  keyed.reserve(matches.size());
  for (const auto& m : matches.matches()) {
    auto& members = keyed.emplace_back();
    for (const auto i : m.members) members.push_back(signals.attribute(i));
  }
  return flatten_members(keyed);
}

Metrics weighted_metrics(const PairSet& extracted, const PairSet& truth,
                         const AttributeFrequencies& frequencies) {
  Metrics m;
  m.precision = two_level(extracted, truth, frequencies, true);
  m.recall = two_level(truth, extracted, frequencies, false);
  m.f = f_measure(m.precision, m.recall);
  return m;
}

Metrics macro_metrics(const PairSet& extracted, const PairSet& truth) {
  std::size_t correct = 0;
  for (const auto& p : extracted) correct += truth.contains(p) ? 1 : 0;
  Metrics m;
  if (!extracted.empty()) {
    m.precision = static_cast<double>(correct) / static_cast<double>(extracted.size());
  }
  if (!truth.empty()) {
    m.recall = static_cast<double>(correct) / static_cast<double>(truth.size());
  }
  m.f = f_measure(m.precision, m.recall);
  return m;
}

double map_score(const Ranking& ranking, const PairSet& truth) {
  const auto expected = group_by_left(truth);
  if (expected.empty()) return 0.0;
  double total = 0.0;
  for (const auto& [left, rights] : expected) {
    const auto it = ranking.find(left);
    if (it == ranking.end()) continue;
    double sum = 0.0;
    std::size_t hits = 0;
    for (std::size_t r = 0; r < it->second.size(); ++r) {
      if (!truth.contains({left, it->second[r]})) continue;
      ++hits;
      sum += static_cast<double>(hits) / static_cast<double>(r + 1);
    }
    total += sum / static_cast<double>(rights.size());
  }
  return total / static_cast<double>(expected.size());
}

Ranking rank_by_score(const SignalProvider& signals, const PairScore& score) {
  Ranking ranking;
  const auto n = signals.attribute_count();
  for (std::size_t p = 0; p < n; ++p) {
    if (signals.side(p) != Side::kLeft) continue;
    std::vector<std::pair<double, std::size_t>> scored;
    for (std::size_t q = 0; q < n; ++q) {
      if (signals.side(q) == Side::kRight) scored.emplace_back(score(p, q), q);
    }
    std::sort(scored.begin(), scored.end(), [&](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return signals.attribute(a.second).name < signals.attribute(b.second).name;
    });
    auto& list = ranking[signals.attribute(p).name];
    for (const auto& [s, q] : scored) list.push_back(signals.attribute(q).name);
  }
  return ranking;
}

Ranking rank_randomly(const SignalProvider& signals, std::uint64_t seed) {
  // Name order first, so the shuffle does not depend on index layout.
  auto ranking = rank_by_score(signals, [](std::size_t, std::size_t) { return 0.0; });
  std::mt19937_64 rng(seed);
  for (auto& [left, list] : ranking) {
    for (std::size_t i = list.size(); i > 1; --i) {
      std::swap(list[i - 1], list[static_cast<std::size_t>(rng() % i)]);
    }
  }
  return ranking;
}

double overlap(const DualInfobox& dual, const PairSet& truth) {
  const auto& left = dual.left_infobox().pairs();
  const auto& right = dual.right_infobox().pairs();
  const auto n = left.size() + right.size();
  if (n == 0) return 0.0;
  Classes classes(n);
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (truth.contains({left[i].name, right[j].name})) {
        classes.unite(i, left.size() + j);
      }
    }
  }
  std::map<std::size_t, unsigned> sides;
  for (std::size_t i = 0; i < n; ++i) {
    sides[classes.find(i)] |= i < left.size() ? 1u : 2u;
  }
  const auto spanning = std::count_if(sides.begin(), sides.end(),
                                      [](const auto& kv) { return kv.second == 3u; });
  return static_cast<double>(spanning) / static_cast<double>(sides.size());
}

double mean_overlap(std::span<const DualInfobox> duals, const PairSet& truth) {
  if (duals.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& d : duals) sum += overlap(d, truth);
  return sum / static_cast<double>(duals.size());
}

PairSet lsi_topk_baseline(const SignalProvider& signals, std::size_t k) {
  const auto ranking = rank_by_score(
      signals, [&](std::size_t p, std::size_t q) { return signals.lsi(p, q); });
  PairSet out;
  for (const auto& [left, list] : ranking) {
    const auto take = std::min(k, list.size());
    for (std::size_t i = 0; i < take; ++i) out.insert({left, list[i]});
  }
  return out;
}

void EvalReport::aggregate() {
  weighted = {};
  macro = {};
  map = {};
  overlap = 0.0;
  if (types.empty()) return;
  const auto n = static_cast<double>(types.size());
  std::size_t extracted = 0, truth = 0, correct = 0;
  for (const auto& t : types) {
    weighted.precision += t.weighted.precision / n;
    weighted.recall += t.weighted.recall / n;
    map.lsi += t.map.lsi / n;
    map.x1 += t.map.x1 / n;
    map.x2 += t.map.x2 / n;
    map.x3 += t.map.x3 / n;
    map.random += t.map.random / n;
    overlap += t.overlap / n;
    extracted += t.extracted;
    truth += t.truth;
    correct += t.correct;
  }
  weighted.f = f_measure(weighted.precision, weighted.recall);
  if (extracted > 0) {
    macro.precision = static_cast<double>(correct) / static_cast<double>(extracted);
  }
  if (truth > 0) macro.recall = static_cast<double>(correct) / static_cast<double>(truth);
  macro.f = f_measure(macro.precision, macro.recall);
}

namespace {

nlohmann::ordered_json metrics_json(const Metrics& m) {
  return {{"precision", m.precision}, {"recall", m.recall}, {"f", m.f}};
}

nlohmann::ordered_json map_json(const MapScores& m) {
  return {{"lsi", m.lsi}, {"x1", m.x1}, {"x2", m.x2}, {"x3", m.x3}, {"random", m.random}};
}

}  // namespace

std::string EvalReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["weighted"] = metrics_json(weighted);
  doc["macro"] = metrics_json(macro);
  doc["map"] = map_json(map);
  doc["overlap"] = overlap;
  auto& list = doc["types"] = nlohmann::ordered_json::array();
  for (const auto& t : types) {
    list.push_back({{"type_left", t.types.left},
                    {"type_right", t.types.right},
                    {"weighted", metrics_json(t.weighted)},
                    {"macro", metrics_json(t.macro)},
                    {"map", map_json(t.map)},
                    {"overlap", t.overlap},
                    {"extracted", t.extracted},
                    {"truth", t.truth},
                    {"correct", t.correct}});
  }
  return doc.dump(2) + "\n";
}

std::string EvalReport::to_table() const {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"type", "P", "R", "F", "macro P", "macro R", "macro F", "MAP",
                  "overlap"});
  auto row = [&](const std::string& label, const Metrics& w, const Metrics& m,
                 double map_lsi, double ov) {
    rows.push_back({label, fixed(w.precision, 3), fixed(w.recall, 3), fixed(w.f, 3),
                    fixed(m.precision, 3), fixed(m.recall, 3), fixed(m.f, 3),
                    fixed(map_lsi, 3), fixed(ov, 3)});
  };
  for (const auto& t : types) row(t.types.label(), t.weighted, t.macro, t.map.lsi, t.overlap);
  row("all", weighted, macro, map.lsi, overlap);

  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream out;
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c == 0) {
        out << r[c] << std::string(width[c] - r[c].size(), ' ');
      } else {
        out << "  " << std::string(width[c] - r[c].size(), ' ') << r[c];
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace xlmatch
