#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "xlmatch/alignment.h"
#include "xlmatch/dual_infobox.h"
#include "xlmatch/signals.h"
#include "xlmatch/typemap.h"

namespace xlmatch {

// A cross-language correspondence: left-language attribute, right-language
// attribute.
struct NamedPair {
  std::string left;
  std::string right;

  auto operator<=>(const NamedPair&) const = default;
};

using PairSet = std::set<NamedPair>;

// Correct cross-language correspondences per type pair. TSV format:
// type_left|type_right<TAB>attr_left<TAB>attr_right, names normalized on read.
class GroundTruth {
 public:
  void add(const TypePair& types, NamedPair pair);
  const PairSet* find(const TypePair& types) const;
  const std::map<TypePair, PairSet>& by_type() const { return by_type_; }
  std::size_t size() const;

  void write_tsv(std::ostream& out) const;
  static GroundTruth read_tsv(std::istream& in);

 private:
  std::map<TypePair, PairSet> by_type_;
};

struct Metrics {
  double precision = 0.0;
  double recall = 0.0;
  double f = 0.0;
};

// 2PR / (P + R), 0 when P + R == 0.
double f_measure(double precision, double recall);

// |a| for every attribute of one type pair, per side.
struct AttributeFrequencies {
  std::map<std::string, double, std::less<>> left;
  std::map<std::string, double, std::less<>> right;
};

// Occurrence counts of the attribute groups.
AttributeFrequencies frequencies_of(std::span<const AttributeGroup> groups);

// Every cross-language member pair of every match. Same-side pairs are not
// emitted.
PairSet flatten_matches(const MatchSet& matches, const SignalProvider& signals);
PairSet flatten_members(const std::vector<std::vector<AttributeKey>>& matches);

// Frequency-weighted precision and recall. Each left attribute is weighted
// by |a|; within its correspondences each right attribute is weighted by
// |a'|. Precision over an empty extraction is reported as 0. Throws
// EvaluationError when an extracted attribute has no frequency; truth
// attributes absent from the infobox set weigh 0.
Metrics weighted_metrics(const PairSet& extracted, const PairSet& truth,
                         const AttributeFrequencies& frequencies);

// Unweighted counts of distinct pairs.
Metrics macro_metrics(const PairSet& extracted, const PairSet& truth);

// Ordered right-language candidates for each left-language attribute.
using Ranking = std::map<std::string, std::vector<std::string>>;

// Mean over left attributes with at least one correct match of the average
// precision at each correct hit. Correct matches missing from the ranking
// contribute 0. Returns 0 when the truth is empty.
double map_score(const Ranking& ranking, const PairSet& truth);

using PairScore = std::function<double(std::size_t, std::size_t)>;

// Ranks every right attribute for every left attribute by descending score,
// ties broken by name.
Ranking rank_by_score(const SignalProvider& signals, const PairScore& score);

// Uniformly shuffled candidate lists (seeded).
Ranking rank_randomly(const SignalProvider& signals, std::uint64_t seed);

// Ground-truth mediated overlap of one dual's two schemas: attributes joined
// by a present truth pair are merged into one element, and the result is
// |elements spanning both sides| / |all elements|.
double overlap(const DualInfobox& dual, const PairSet& truth);
double mean_overlap(std::span<const DualInfobox> duals, const PairSet& truth);

// For each left attribute its k highest-lsi right attributes.
PairSet lsi_topk_baseline(const SignalProvider& signals, std::size_t k);

struct MapScores {
  double lsi = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
  double random = 0.0;
};

struct TypeEvaluation {
  TypePair types;
  Metrics weighted;
  Metrics macro;
  MapScores map;
  double overlap = 0.0;
  std::size_t extracted = 0;
  std::size_t truth = 0;
  std::size_t correct = 0;
};

struct EvalReport {
  std::vector<TypeEvaluation> types;
  // Weighted: mean of the per-type scores. Macro: pooled distinct pairs.
  Metrics weighted;
  Metrics macro;
  MapScores map;
  double overlap = 0.0;

  // Fills the aggregate fields from `types`.
  void aggregate();
  std::string to_json() const;
  // Aligned-column P/R/F table.
  std::string to_table() const;
};

}  // namespace xlmatch
