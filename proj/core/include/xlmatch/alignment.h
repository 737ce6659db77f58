#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "xlmatch/signals.h"

namespace xlmatch {

struct AlignmentConfig {
  double t_sim = 0.6;    // certain-candidate threshold on max(vsim, lsim)
  double t_lsi = 0.1;    // queue admission and integration threshold
  double t_group = 0.5;  // inductive grouping threshold for revision
  std::optional<std::size_t> svd_f;  // LSI rank; default_rank() when unset

  // Throws ParameterError when a threshold leaves [0, 1] or svd_f == 0.
  void validate() const;
};

// Switches that remove one component of the matcher, for contribution
// analysis. The default value is the full matcher.
struct AblationOptions {
  bool revise = true;        // run the uncertain-revision phase
  bool integrate = true;     // enforce the all-members LSI check on joins
  bool use_vsim = true;
  bool use_lsim = true;
  bool use_lsi = true;       // false: order by max(vsim, lsim), no LSI gate
  bool random_order = false; // shuffle the queue with `seed`
  bool single_step = false;  // accept every positive-similarity candidate
  std::uint64_t seed = 0;

  // "full" or a '+'-joined list such as "no-revise+random-order".
  std::string label() const;
};

enum class Phase { kCertain, kRevised, kSingleStep };
std::string_view phase_name(Phase phase);

struct IntegrationEvent {
  Phase phase = Phase::kCertain;
  bool created = false;  // false: `added` joined an existing match
  std::size_t p = 0;
  std::size_t q = 0;
  std::size_t added = 0;
  double vsim = 0.0;
  double lsim = 0.0;
  double lsi = 0.0;
  double inductive_grouping = 0.0;  // revised phase only
};

struct Match {
  std::vector<std::size_t> members;  // sorted attribute indices
  std::vector<IntegrationEvent> provenance;

  bool contains(std::size_t attribute) const;
};

// The evolving set of matches. Single writer during alignment.
class MatchSet {
 public:
  const std::vector<Match>& matches() const { return matches_; }
  std::size_t size() const { return matches_.size(); }
  bool empty() const { return matches_.empty(); }

  std::optional<std::size_t> match_of(std::size_t attribute) const;
  bool contains(std::size_t attribute) const { return match_of(attribute).has_value(); }

  // New two-member match. Members already owned by another match keep their
  // original owner for match_of(); only single-step output relies on that.
  std::size_t create(std::size_t p, std::size_t q, const IntegrationEvent& event);
  void join(std::size_t match, std::size_t attribute, const IntegrationEvent& event);

 private:
  std::vector<Match> matches_;
  std::map<std::size_t, std::size_t> owner_;
};

// How integrate_matches validates a join into an existing match.
enum class JoinRule {
  kAllMembersLsi,   // lsi(member, newcomer) > t_lsi for every member
  kNoCoOccurrence,  // newcomer shares no infobox with a same-side member
  kUnchecked,       // always join
};

enum class IntegrationOutcome { kCreated, kJoined, kRejected, kBothMatched };

// Neither attribute matched: new match. Exactly one matched: the other joins
// when the join rule accepts it. Both matched: no-op.
IntegrationOutcome integrate_matches(const SimilarityTuple& pair, MatchSet& matches,
                                     const SignalProvider& signals, double t_lsi,
                                     Phase phase, JoinRule rule = JoinRule::kAllMembersLsi,
                                     double inductive_grouping = 0.0);

// Average of g(a, c_a) * g(b, c_b) over matched pairs c_a ~ c_b, where c_a
// shares a mono-lingual infobox with a and c_b with b. 0 without such pairs.
double inductive_grouping_score(std::size_t a, std::size_t b,
                                const MatchSet& matches,
                                const SignalProvider& signals);

struct RevisedCandidate {
  SimilarityTuple tuple;
  double inductive_grouping = 0.0;
};

// Uncertain pairs whose inductive grouping score exceeds t_group, ordered by
// descending score, then by the queue order.
std::vector<RevisedCandidate> revise_uncertain(
    std::span<const SimilarityTuple> uncertain, const MatchSet& matches,
    const SignalProvider& signals, double t_group, bool order_by_lsi = true);

// Total queue order: descending lsi, descending max(vsim, lsim), then the
// attribute names of p and q. With order_by_lsi false the first key is
// dropped.
bool queue_before(const SimilarityTuple& a, const SimilarityTuple& b,
                  const SignalProvider& signals, bool order_by_lsi = true);

struct AlignmentStats {
  std::size_t pairs_scored = 0;
  std::size_t queue_size = 0;
  std::size_t certain = 0;
  std::size_t uncertain = 0;
  std::size_t revised = 0;
  std::size_t integrated_certain = 0;
  std::size_t integrated_revised = 0;
  std::size_t rejected = 0;
};

struct AlignmentResult {
  MatchSet matches;
  AlignmentStats stats;
  std::vector<SimilarityTuple> uncertain;
  std::vector<RevisedCandidate> revised;
};

// Certain phase over the LSI-ordered queue, then revision of the uncertain
// buffer. Deterministic for identical inputs (the random-order ablation is
// seeded).
AlignmentResult attribute_alignment(const SignalProvider& signals,
                                    const AlignmentConfig& config,
                                    const AblationOptions& ablation = {});

}  // namespace xlmatch
