#include "xlmatch/alignment.h"

#include <algorithm>
#include <random>
#include <utility>

#include "xlmatch/errors.h"

namespace xlmatch {
namespace {

// Zeroes the disabled similarity features of an underlying provider.
class AblatedSignals final : public SignalProvider {
 public:
  AblatedSignals(const SignalProvider& base, const AblationOptions& ablation)
      : base_(base), ablation_(ablation) {}

  std::size_t attribute_count() const override { return base_.attribute_count(); }
  const AttributeKey& attribute(std::size_t i) const override {
    return base_.attribute(i);
  }
  double vsim(std::size_t p, std::size_t q) const override {
    return ablation_.use_vsim ? base_.vsim(p, q) : 0.0;
  }
  double lsim(std::size_t p, std::size_t q) const override {
    return ablation_.use_lsim ? base_.lsim(p, q) : 0.0;
  }
  double lsi(std::size_t p, std::size_t q) const override {
    return ablation_.use_lsi ? base_.lsi(p, q) : 0.0;
  }
  double grouping(std::size_t p, std::size_t q) const override {
    return base_.grouping(p, q);
  }
  bool co_occur(std::size_t p, std::size_t q) const override {
    return base_.co_occur(p, q);
  }

 private:
  const SignalProvider& base_;
  const AblationOptions& ablation_;
};

std::pair<const AttributeKey*, const AttributeKey*> ordered_keys(
    const SimilarityTuple& t, const SignalProvider& signals) {
  const auto* a = &signals.attribute(t.p);
  const auto* b = &signals.attribute(t.q);
  if (*b < *a) std::swap(a, b);
  return {a, b};
}

IntegrationEvent make_event(const SimilarityTuple& t, Phase phase,
                            double inductive_grouping) {
  IntegrationEvent e;
  e.phase = phase;
  e.p = t.p;
  e.q = t.q;
  e.vsim = t.vsim;
  e.lsim = t.lsim;
  e.lsi = t.lsi;
  e.inductive_grouping = inductive_grouping;
  return e;
}

bool join_allowed(const Match& match, std::size_t newcomer,
                  const SignalProvider& signals, double t_lsi, JoinRule rule) {
  switch (rule) {
    case JoinRule::kUnchecked:
      return true;
    case JoinRule::kNoCoOccurrence:
      return std::none_of(match.members.begin(), match.members.end(),
                          [&](std::size_t m) {
                            return signals.co_occur(m, newcomer);
                          });
    case JoinRule::kAllMembersLsi:
      return std::all_of(match.members.begin(), match.members.end(),
                         [&](std::size_t m) {
                           return signals.lsi(m, newcomer) > t_lsi;
                         });
  }
  return false;
}

void shuffle_seeded(std::vector<SimilarityTuple>* items, std::uint64_t seed) {
  // Fisher-Yates with a fixed engine so the order is identical across
  // standard library implementations.
  std::mt19937_64 rng(seed);
  for (std::size_t i = items->size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng() % i);
    std::swap((*items)[i - 1], (*items)[j]);
  }
}

}  // namespace

void AlignmentConfig::validate() const {
  auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!in_unit(t_sim)) throw ParameterError("t_sim must be in [0, 1]");
  if (!in_unit(t_lsi)) throw ParameterError("t_lsi must be in [0, 1]");
  if (!in_unit(t_group)) throw ParameterError("t_group must be in [0, 1]");
  if (svd_f && *svd_f == 0) throw ParameterError("svd_f must be at least 1");
}

std::string AblationOptions::label() const {
  std::vector<std::string> parts;
  if (!revise) parts.emplace_back("no-revise");
  if (!integrate) parts.emplace_back("no-integrate");
  if (!use_vsim) parts.emplace_back("no-vsim");
  if (!use_lsim) parts.emplace_back("no-lsim");
  if (!use_lsi) parts.emplace_back("no-lsi");
  if (random_order) parts.emplace_back("random-order");
  if (single_step) parts.emplace_back("single-step");
  if (parts.empty()) return "full";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += "+" + parts[i];
  return out;
}

std::string_view phase_name(Phase phase) {
  switch (phase) {
    case Phase::kCertain:
      return "certain";
    case Phase::kRevised:
      return "revised";
    case Phase::kSingleStep:
      return "single-step";
  }
  return "unknown";
}

bool Match::contains(std::size_t attribute) const {
  return std::binary_search(members.begin(), members.end(), attribute);
}

std::optional<std::size_t> MatchSet::match_of(std::size_t attribute) const {
  const auto it = owner_.find(attribute);
  if (it == owner_.end()) return std::nullopt;
  return it->second;
}

std::size_t MatchSet::create(std::size_t p, std::size_t q,
                             const IntegrationEvent& event) {
  Match m;
  m.members = {std::min(p, q), std::max(p, q)};
  m.provenance.push_back(event);
  matches_.push_back(std::move(m));
  const auto id = matches_.size() - 1;
  owner_.try_emplace(p, id);
  owner_.try_emplace(q, id);
  return id;
}

void MatchSet::join(std::size_t match, std::size_t attribute,
                    const IntegrationEvent& event) {
  auto& m = matches_.at(match);
  m.members.insert(std::upper_bound(m.members.begin(), m.members.end(), attribute),
                   attribute);
  m.provenance.push_back(event);
  owner_.try_emplace(attribute, match);
}

IntegrationOutcome integrate_matches(const SimilarityTuple& pair, MatchSet& matches,
                                     const SignalProvider& signals, double t_lsi,
                                     Phase phase, JoinRule rule,
                                     double inductive_grouping) {
  const auto owner_p = matches.match_of(pair.p);
  const auto owner_q = matches.match_of(pair.q);
  auto event = make_event(pair, phase, inductive_grouping);
  if (!owner_p && !owner_q) {
    event.created = true;
    matches.create(pair.p, pair.q, event);
    return IntegrationOutcome::kCreated;
  }
  if (owner_p && owner_q) return IntegrationOutcome::kBothMatched;

  const auto target = owner_p ? *owner_p : *owner_q;
  const auto newcomer = owner_p ? pair.q : pair.p;
  if (!join_allowed(matches.matches()[target], newcomer, signals, t_lsi, rule)) {
    return IntegrationOutcome::kRejected;
  }
  event.added = newcomer;
  matches.join(target, newcomer, event);
  return IntegrationOutcome::kJoined;
}

double inductive_grouping_score(std::size_t a, std::size_t b,
                                const MatchSet& matches,
                                const SignalProvider& signals) {
  double sum = 0.0;
  std::size_t terms = 0;
  for (const auto& match : matches.matches()) {
    for (const auto ca : match.members) {
      if (ca == a || ca == b || !signals.co_occur(a, ca)) continue;
      const double ga = signals.grouping(a, ca);
      for (const auto cb : match.members) {
        if (cb == a || cb == b || !signals.co_occur(b, cb)) continue;
        sum += ga * signals.grouping(b, cb);
        ++terms;
      }
    }
  }
  return terms == 0 ? 0.0 : sum / static_cast<double>(terms);
}

bool queue_before(const SimilarityTuple& a, const SimilarityTuple& b,
                  const SignalProvider& signals, bool order_by_lsi) {
  if (order_by_lsi && a.lsi != b.lsi) return a.lsi > b.lsi;
  const double ma = a.max_similarity();
  const double mb = b.max_similarity();
  if (ma != mb) return ma > mb;
  const auto [a_lo, a_hi] = ordered_keys(a, signals);
  const auto [b_lo, b_hi] = ordered_keys(b, signals);
  if (a_lo->name != b_lo->name) return a_lo->name < b_lo->name;
  if (a_hi->name != b_hi->name) return a_hi->name < b_hi->name;
  if (a_lo->side != b_lo->side) return a_lo->side < b_lo->side;
  return a_hi->side < b_hi->side;
}

std::vector<RevisedCandidate> revise_uncertain(
    std::span<const SimilarityTuple> uncertain, const MatchSet& matches,
    const SignalProvider& signals, double t_group, bool order_by_lsi) {
  std::vector<RevisedCandidate> revised;
  for (const auto& t : uncertain) {
    const double score = inductive_grouping_score(t.p, t.q, matches, signals);
    if (score > t_group) revised.push_back({t, score});
  }
  std::sort(revised.begin(), revised.end(),
            [&](const RevisedCandidate& x, const RevisedCandidate& y) {
              if (x.inductive_grouping != y.inductive_grouping) {
                return x.inductive_grouping > y.inductive_grouping;
              }
              return queue_before(x.tuple, y.tuple, signals, order_by_lsi);
            });
  return revised;
}

AlignmentResult attribute_alignment(const SignalProvider& base,
                                    const AlignmentConfig& config,
                                    const AblationOptions& ablation) {
  config.validate();
  const AblatedSignals signals(base, ablation);
  AlignmentResult result;

  auto tuples = score_all_pairs(signals);
  result.stats.pairs_scored = tuples.size();

  std::vector<SimilarityTuple> queue;
  for (const auto& t : tuples) {
    const bool admitted = ablation.use_lsi ? t.lsi > config.t_lsi
                                           : t.max_similarity() > 0.0;
    if (admitted) queue.push_back(t);
  }
  result.stats.queue_size = queue.size();
  std::sort(queue.begin(), queue.end(),
            [&](const SimilarityTuple& a, const SimilarityTuple& b) {
              return queue_before(a, b, signals, ablation.use_lsi);
            });
  if (ablation.random_order) shuffle_seeded(&queue, ablation.seed);

  auto& matches = result.matches;
  if (ablation.single_step) {
    for (const auto& t : queue) {
      if (t.max_similarity() <= 0.0) continue;
      ++result.stats.certain;
      auto event = make_event(t, Phase::kSingleStep, 0.0);
      event.created = true;
      matches.create(t.p, t.q, event);
      ++result.stats.integrated_certain;
    }
    return result;
  }

  const JoinRule rule = !ablation.integrate ? JoinRule::kUnchecked
                        : ablation.use_lsi  ? JoinRule::kAllMembersLsi
                                            : JoinRule::kNoCoOccurrence;
  auto record = [&](IntegrationOutcome outcome, std::size_t* integrated) {
    if (outcome == IntegrationOutcome::kCreated ||
        outcome == IntegrationOutcome::kJoined) {
      ++*integrated;
    } else {
      ++result.stats.rejected;
    }
  };

  for (const auto& t : queue) {
    if (t.max_similarity() > config.t_sim) {
      ++result.stats.certain;
      record(integrate_matches(t, matches, signals, config.t_lsi, Phase::kCertain,
                               rule),
             &result.stats.integrated_certain);
    } else {
      result.uncertain.push_back(t);
    }
  }
  result.stats.uncertain = result.uncertain.size();

  if (ablation.revise) {
    result.revised = revise_uncertain(result.uncertain, matches, signals,
                                      config.t_group, ablation.use_lsi);
    result.stats.revised = result.revised.size();
    for (const auto& r : result.revised) {
      record(integrate_matches(r.tuple, matches, signals, config.t_lsi,
                               Phase::kRevised, rule, r.inductive_grouping),
             &result.stats.integrated_revised);
    }
  }
  return result;
}

}  // namespace xlmatch
