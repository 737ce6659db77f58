#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "xlmatch/signals.h"

namespace xlmatch::testing {

// SignalProvider backed by hand-written score tables. Unset scores are 0 and
// nothing co-occurs unless a grouping score was given.
class TableSignals final : public SignalProvider {
 public:
  struct Scores {
    double vsim = 0.0;
    double lsim = 0.0;
    double lsi = 0.0;
  };

  std::size_t add(Side side, std::string name) {
    keys_.push_back({side, std::move(name)});
    return keys_.size() - 1;
  }
  std::size_t left(std::string name) { return add(Side::kLeft, std::move(name)); }
  std::size_t right(std::string name) { return add(Side::kRight, std::move(name)); }

  std::size_t index(const std::string& name) const {
    for (std::size_t i = 0; i < keys_.size(); ++i) {
      if (keys_[i].name == name) return i;
    }
    throw std::out_of_range("no attribute " + name);
  }

  void set(const std::string& a, const std::string& b, double lsi, double vsim,
           double lsim) {
    scores_[key(index(a), index(b))] = {vsim, lsim, lsi};
  }
  // Also marks the pair as co-occurring.
  void set_grouping(const std::string& a, const std::string& b, double g) {
    grouping_[key(index(a), index(b))] = g;
  }

  SimilarityTuple tuple(const std::string& a, const std::string& b) const {
    const auto p = index(a), q = index(b);
    return {p, q, vsim(p, q), lsim(p, q), lsi(p, q)};
  }

  std::size_t attribute_count() const override { return keys_.size(); }
  const AttributeKey& attribute(std::size_t i) const override { return keys_.at(i); }
  double vsim(std::size_t p, std::size_t q) const override { return get(p, q).vsim; }
  double lsim(std::size_t p, std::size_t q) const override { return get(p, q).lsim; }
  double lsi(std::size_t p, std::size_t q) const override { return get(p, q).lsi; }
  double grouping(std::size_t p, std::size_t q) const override {
    const auto it = grouping_.find(key(p, q));
    return it == grouping_.end() ? 0.0 : it->second;
  }
  bool co_occur(std::size_t p, std::size_t q) const override {
    return grouping_.contains(key(p, q));
  }

 private:
  static std::pair<std::size_t, std::size_t> key(std::size_t p, std::size_t q) {
    return p < q ? std::pair{p, q} : std::pair{q, p};
  }
  Scores get(std::size_t p, std::size_t q) const {
    const auto it = scores_.find(key(p, q));
    return it == scores_.end() ? Scores{} : it->second;
  }

  std::vector<AttributeKey> keys_;
  std::map<std::pair<std::size_t, std::size_t>, Scores> scores_;
  std::map<std::pair<std::size_t, std::size_t>, double> grouping_;
};

// The actor example: four English and five Portuguese attributes with the
// published pairwise scores (lsi, vsim, lsim).
inline TableSignals actor_signals() {
  TableSignals t;
  for (const auto* n : {"born", "died", "other names", "spouse"}) t.left(n);
  for (const auto* n : {"cônjuge", "falecimento", "morte", "nascimento", "outros nomes"}) {
    t.right(n);
  }
  t.set("born", "nascimento", .99, .45, .73);
  t.set("falecimento", "morte", .94, .91, .83);
  t.set("died", "falecimento", .92, .65, .71);
  t.set("spouse", "cônjuge", .73, .73, .26);
  t.set("died", "nascimento", .39, .60, .38);
  t.set("died", "morte", .25, .68, .73);
  t.set("other names", "outros nomes", .20, .47, .00);
  t.set("born", "morte", .12, .51, .54);
  t.set("nascimento", "falecimento", .00, .95, .58);
  return t;
}

}  // namespace xlmatch::testing
