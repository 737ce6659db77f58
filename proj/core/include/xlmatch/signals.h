#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "xlmatch/dictionary.h"
#include "xlmatch/lsi.h"
#include "xlmatch/similarity.h"

namespace xlmatch {

// Read-only access to every pairwise signal of one type pair. Attributes are
// addressed by index in [0, attribute_count()). The alignment stage only
// talks to this interface, so tests can hand-build scores.
class SignalProvider {
 public:
  virtual ~SignalProvider() = default;

  virtual std::size_t attribute_count() const = 0;
  virtual const AttributeKey& attribute(std::size_t i) const = 0;

  virtual double vsim(std::size_t p, std::size_t q) const = 0;
  virtual double lsim(std::size_t p, std::size_t q) const = 0;
  virtual double lsi(std::size_t p, std::size_t q) const = 0;
  // Grouping score over mono-lingual infoboxes; meaningful for same-side
  // pairs.
  virtual double grouping(std::size_t p, std::size_t q) const = 0;
  // True when p and q are on the same side and share an infobox.
  virtual bool co_occur(std::size_t p, std::size_t q) const = 0;

  Side side(std::size_t i) const { return attribute(i).side; }
};

struct SimilarityTuple {
  std::size_t p = 0;
  std::size_t q = 0;
  double vsim = 0.0;
  double lsim = 0.0;
  double lsi = 0.0;

  double max_similarity() const { return vsim > lsim ? vsim : lsim; }
};

// Every unordered pair p < q.
std::vector<SimilarityTuple> score_all_pairs(const SignalProvider& signals);

// Dense precomputed signals for one type pair.
class TypeSignals final : public SignalProvider {
 public:
  TypeSignals() = default;
  TypeSignals(const std::vector<AttributeGroup>& groups,
              const OccurrenceMatrix& matrix, const LsiModel& model,
              const TranslationDictionary& dictionary);

  std::size_t attribute_count() const override { return keys_.size(); }
  const AttributeKey& attribute(std::size_t i) const override { return keys_[i]; }
  double vsim(std::size_t p, std::size_t q) const override { return vsim_[at(p, q)]; }
  double lsim(std::size_t p, std::size_t q) const override { return lsim_[at(p, q)]; }
  double lsi(std::size_t p, std::size_t q) const override { return lsi_[at(p, q)]; }
  double grouping(std::size_t p, std::size_t q) const override {
    return grouping_[at(p, q)];
  }
  bool co_occur(std::size_t p, std::size_t q) const override {
    return co_occur_[at(p, q)] != 0;
  }

 private:
  std::size_t at(std::size_t p, std::size_t q) const { return p * keys_.size() + q; }

  std::vector<AttributeKey> keys_;
  std::vector<double> vsim_;
  std::vector<double> lsim_;
  std::vector<double> lsi_;
  std::vector<double> grouping_;
  std::vector<unsigned char> co_occur_;
};

// Debug dumps.
void write_occurrence_tsv(std::ostream& out, const OccurrenceMatrix& matrix,
                          const std::vector<AttributeGroup>& groups);
void write_tuples_tsv(std::ostream& out, const SignalProvider& signals,
                      const std::vector<SimilarityTuple>& tuples);

}  // namespace xlmatch
