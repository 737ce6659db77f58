#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "xlmatch/evaluation.h"

namespace xlmatch {

// Parameters of a synthetic bilingual corpus. Left-language tokens start with
// "xa-", right-language tokens with "xb-", so no two names or values are
// accidentally similar across languages.
struct SynthSpec {
  std::uint64_t seed = 1;
  std::size_t n_types = 1;
  std::size_t n_entities = 200;      // per type
  std::size_t synonym_sets = 10;     // per type
  std::size_t attribute_slots = 40;  // per infobox side

  double presence = 0.8;        // P(set present | its block is active)
  double schema_overlap = 1.0;  // P(a present set shows on both sides)
  std::size_t blocks = 1;       // co-occurrence blocks, sets assigned round-robin
  double block_probability = 1.0;

  std::size_t pool_size = 30;  // distinct values per set
  double zipf_exponent = 1.0;
  double value_overlap = 1.0;  // share of values with a cross-linked article
  double hard_fraction = 0.0;  // sets using hard_value_overlap instead
  double hard_value_overlap = 0.0;
  double pool_sharing = 0.0;  // share of an odd set's pool borrowed from its predecessor
  double link_density = 0.5;  // P(a value is written as a wiki link)

  double missing = 0.0;        // P(a present attribute is dropped on one side)
  double perturbation = 0.0;   // P(a right value is drawn from another set)
  double rare_fraction = 0.0;  // sets whose presence is scaled by rare_presence
  double rare_presence = 0.1;
  double alt_name_fraction = 0.0;  // sets with two alternative right names
  std::size_t extra_attributes = 0;  // unmatched attributes per side and type
  double extra_presence = 0.2;

  // Throws ParameterError for probabilities outside [0, 1], zero counts, or
  // more attributes per side than attribute_slots.
  void validate() const;

  static SynthSpec clean(std::uint64_t seed = 1);
  static SynthSpec noisy(std::uint64_t seed = 1);
};

struct SynthCorpus {
  std::string corpus_jsonl;  // one record per line, sorted by id
  GroundTruth truth;         // planted pairs whose attributes both occur
  std::string left_language = "xa";
  std::string right_language = "xb";
};

SynthCorpus generate(const SynthSpec& spec);

}  // namespace xlmatch
