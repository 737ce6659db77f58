#include "xlmatch/synth.h"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <nlohmann/json.hpp>

#include "xlmatch/errors.h"

namespace xlmatch {
namespace {

using json = nlohmann::ordered_json;

constexpr const char* kLeft = "xa";
constexpr const char* kRight = "xb";

// Engine output is mapped by hand so that a seed produces the same corpus on
// every standard library.
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return uniform() < p; }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

  template <typename T>
  void shuffle(std::vector<T>* items) {
    for (std::size_t i = items->size(); i > 1; --i) {
      std::swap((*items)[i - 1], (*items)[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string padded(std::size_t n) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%02zu", n);
  return buf;
}

struct Concept {
  std::string left_title;
  std::string right_title;
  bool linked = false;
};

struct SynonymSet {
  std::string left_name;
  std::vector<std::string> right_names;
  std::size_t block = 0;
  bool rare = false;
  std::vector<std::size_t> pool;  // concept indices
};

struct Extra {
  std::string name;
  std::vector<std::size_t> pool;
};

struct Record {
  std::string id;
  std::string language;
  std::string title;
  std::string type;
  std::vector<std::pair<std::string, std::string>> infobox;
  std::string cross_link;
};

class Generator {
 public:
  explicit Generator(const SynthSpec& spec) : spec_(spec), rng_(spec.seed) {
    double total = 0.0;
    for (std::size_t k = 0; k < spec.pool_size; ++k) {
      total += 1.0 / std::pow(static_cast<double>(k + 1), spec.zipf_exponent);
      zipf_cdf_.push_back(total);
    }
    for (auto& c : zipf_cdf_) c /= total;
  }

  SynthCorpus run() {
    std::vector<std::size_t> type_perm(spec_.n_types);
    std::iota(type_perm.begin(), type_perm.end(), std::size_t{0});
    rng_.shuffle(&type_perm);
    for (std::size_t t = 0; t < spec_.n_types; ++t) generate_type(t, type_perm[t]);

    for (const auto& c : concepts_) {
      if (c.linked) add_pair(c.left_title, c.right_title, "xa-value", "xb-value", {}, {});
    }

    SynthCorpus out;
    out.truth = std::move(truth_);
    std::string text;
    for (const auto& [id, line] : lines_) {
      text += line;
      text += '\n';
    }
    out.corpus_jsonl = std::move(text);
    return out;
  }

 private:
  std::string next_id(const char* language) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%s:%016" PRIx64, language,
                  mix(spec_.seed * 0x100000001b3ULL + id_counter_++));
    return buf;
  }

  std::size_t new_concept(double linked_share) {
    const auto n = concepts_.size();
    Concept c;
    c.left_title = std::string(kLeft) + "-val-" + std::to_string(n);
    c.right_title = std::string(kRight) + "-val-" + std::to_string(n);
    c.linked = rng_.chance(linked_share);
    concepts_.push_back(std::move(c));
    return n;
  }

  std::vector<std::size_t> new_pool(double linked_share) {
    std::vector<std::size_t> pool;
    for (std::size_t k = 0; k < spec_.pool_size; ++k) pool.push_back(new_concept(linked_share));
    return pool;
  }

  std::size_t draw(const std::vector<std::size_t>& pool) {
    const auto it = std::lower_bound(zipf_cdf_.begin(), zipf_cdf_.end(), rng_.uniform());
    const auto k = std::min<std::size_t>(static_cast<std::size_t>(it - zipf_cdf_.begin()),
                                         pool.size() - 1);
    return pool[k];
  }

  std::string render(const std::string& title) {
    return rng_.chance(spec_.link_density) ? "[[" + title + "]]" : title;
  }

  void add_pair(const std::string& left_title, const std::string& right_title,
                const std::string& left_type, const std::string& right_type,
                std::vector<std::pair<std::string, std::string>> left_box,
                std::vector<std::pair<std::string, std::string>> right_box) {
    Record l{next_id(kLeft), kLeft, left_title, left_type, std::move(left_box), {}};
    Record r{next_id(kRight), kRight, right_title, right_type, std::move(right_box), {}};
    l.cross_link = r.id;
    r.cross_link = l.id;
    emit(l, kRight);
    emit(r, kLeft);
  }

  void emit(const Record& r, const char* other_language) {
    json doc;
    doc["id"] = r.id;
    doc["lang"] = r.language;
    doc["title"] = r.title;
    doc["type"] = r.type;
    auto& box = doc["infobox"] = json::array();
    for (const auto& [name, value] : r.infobox) box.push_back({{"name", name}, {"value", value}});
    doc["cross_links"] = json::array({{{"lang", other_language}, {"id", r.cross_link}}});
    if (!lines_.emplace(r.id, doc.dump()).second) {
      throw ParameterError("synthetic id collision; change the seed");
    }
  }

  std::vector<std::size_t> pick(std::size_t count, double fraction) {
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    rng_.shuffle(&order);
    order.resize(static_cast<std::size_t>(std::lround(fraction * static_cast<double>(count))));
    std::sort(order.begin(), order.end());
    return order;
  }

  // Like pick(), but consecutive picks come from different blocks.
  std::vector<std::size_t> pick_spread(std::size_t count, double fraction) {
    std::vector<std::vector<std::size_t>> by_block(spec_.blocks);
    for (std::size_t s = 0; s < count; ++s) by_block[s % spec_.blocks].push_back(s);
    for (auto& members : by_block) rng_.shuffle(&members);
    rng_.shuffle(&by_block);
    std::vector<std::size_t> order;
    for (std::size_t round = 0; order.size() < count; ++round) {
      for (const auto& members : by_block) {
        if (round < members.size()) order.push_back(members[round]);
      }
    }
    order.resize(static_cast<std::size_t>(std::lround(fraction * static_cast<double>(count))));
    std::sort(order.begin(), order.end());
    return order;
  }

  void generate_type(std::size_t t, std::size_t right_t) {
    const auto left_type = std::string(kLeft) + "-type-" + padded(t);
    const auto right_type = std::string(kRight) + "-type-" + padded(right_t);
    const auto n = spec_.synonym_sets;

    std::vector<std::size_t> name_perm(n);
    std::iota(name_perm.begin(), name_perm.end(), std::size_t{0});
    rng_.shuffle(&name_perm);
    const auto hard = pick_spread(n, spec_.hard_fraction);
    const auto rare = pick(n, spec_.rare_fraction);
    const auto alt = pick(n, spec_.alt_name_fraction);
    auto in = [](const std::vector<std::size_t>& v, std::size_t x) {
      return std::binary_search(v.begin(), v.end(), x);
    };

    std::vector<SynonymSet> sets(n);
    for (std::size_t s = 0; s < n; ++s) {
      auto& set = sets[s];
      set.left_name = std::string(kLeft) + "-attr-" + padded(s);
      const auto right = std::string(kRight) + "-prop-" + padded(name_perm[s]);
      set.right_names.push_back(right);
      if (in(alt, s)) set.right_names.push_back(right + "-alt");
      set.block = s % spec_.blocks;
      set.rare = in(rare, s);
      set.pool = new_pool(in(hard, s) ? spec_.hard_value_overlap : spec_.value_overlap);
      if (s % 2 == 1) {
        const auto borrowed = static_cast<std::size_t>(
            std::lround(spec_.pool_sharing * static_cast<double>(spec_.pool_size)));
        std::copy_n(sets[s - 1].pool.begin(), borrowed, set.pool.begin());
      }
    }
    std::vector<Extra> left_extras(spec_.extra_attributes), right_extras(spec_.extra_attributes);
    for (std::size_t k = 0; k < spec_.extra_attributes; ++k) {
      left_extras[k] = {std::string(kLeft) + "-extra-" + padded(k), new_pool(0.0)};
      right_extras[k] = {std::string(kRight) + "-extra-" + padded(k), new_pool(0.0)};
    }

    std::set<std::string> left_seen, right_seen;
    for (std::size_t e = 0; e < spec_.n_entities; ++e) {
      std::vector<bool> active(spec_.blocks);
      for (std::size_t b = 0; b < spec_.blocks; ++b) active[b] = rng_.chance(spec_.block_probability);

      std::vector<std::pair<std::string, std::string>> left_box, right_box;
      for (const auto& set : sets) {
        const double p = spec_.presence * (set.rare ? spec_.rare_presence : 1.0);
        const bool present = rng_.chance(p);
        if (!active[set.block] || !present) continue;
        bool on_left = true, on_right = true;
        if (!rng_.chance(spec_.schema_overlap)) {
          (rng_.chance(0.5) ? on_left : on_right) = false;
        }
        if (rng_.chance(spec_.missing)) on_left = false;
        if (rng_.chance(spec_.missing)) on_right = false;

        const auto concept_id = draw(set.pool);
        auto right_concept = concept_id;
        if (rng_.chance(spec_.perturbation)) right_concept = draw(sets[rng_.below(n)].pool);
        const auto& right_name = set.right_names[rng_.below(set.right_names.size())];
        if (on_left) {
          left_box.emplace_back(set.left_name, render(concepts_[concept_id].left_title));
          left_seen.insert(set.left_name);
        }
        if (on_right) {
          right_box.emplace_back(right_name, render(concepts_[right_concept].right_title));
          right_seen.insert(right_name);
        }
      }
      for (std::size_t k = 0; k < spec_.extra_attributes; ++k) {
        if (rng_.chance(spec_.extra_presence)) {
          left_box.emplace_back(left_extras[k].name,
                                render(concepts_[draw(left_extras[k].pool)].left_title));
        }
        if (rng_.chance(spec_.extra_presence)) {
          right_box.emplace_back(right_extras[k].name,
                                 render(concepts_[draw(right_extras[k].pool)].right_title));
        }
      }
      add_pair(std::string(kLeft) + "-ent-" + padded(t) + "-" + std::to_string(e),
               std::string(kRight) + "-ent-" + padded(right_t) + "-" + std::to_string(e),
               left_type, right_type, std::move(left_box), std::move(right_box));
    }

    const TypePair types{left_type, right_type};
    for (const auto& set : sets) {
      if (!left_seen.contains(set.left_name)) continue;
      for (const auto& right : set.right_names) {
        if (right_seen.contains(right)) truth_.add(types, {set.left_name, right});
      }
    }
  }

  const SynthSpec& spec_;
  Random rng_;
  std::vector<double> zipf_cdf_;
  std::vector<Concept> concepts_;
  std::map<std::string, std::string> lines_;  // id -> record, sorted output
  std::uint64_t id_counter_ = 0;
  GroundTruth truth_;
};

}  // namespace

void SynthSpec::validate() const {
  auto unit = [](double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw ParameterError(std::string(name) + " must be in [0, 1]");
    }
  };
  unit(presence, "presence");
  unit(schema_overlap, "schema_overlap");
  unit(block_probability, "block_probability");
  unit(value_overlap, "value_overlap");
  unit(hard_fraction, "hard_fraction");
  unit(hard_value_overlap, "hard_value_overlap");
  unit(pool_sharing, "pool_sharing");
  unit(link_density, "link_density");
  unit(missing, "missing");
  unit(perturbation, "perturbation");
  unit(rare_fraction, "rare_fraction");
  unit(rare_presence, "rare_presence");
  unit(alt_name_fraction, "alt_name_fraction");
  unit(extra_presence, "extra_presence");
  if (n_types == 0 || n_entities == 0 || synonym_sets == 0 || pool_size == 0) {
    throw ParameterError("n_types, n_entities, synonym_sets and pool_size must be positive");
  }
  if (blocks == 0 || blocks > synonym_sets) {
    throw ParameterError("blocks must be in [1, synonym_sets]");
  }
  if (synonym_sets + extra_attributes > attribute_slots) {
    throw ParameterError("synonym_sets + extra_attributes exceeds attribute_slots");
  }
  if (!(zipf_exponent >= 0.0) || !std::isfinite(zipf_exponent)) {
    throw ParameterError("zipf_exponent must be finite and non-negative");
  }
}

SynthSpec SynthSpec::clean(std::uint64_t seed) {
  SynthSpec spec;
  spec.seed = seed;
  return spec;
}

SynthSpec SynthSpec::noisy(std::uint64_t seed) {
  SynthSpec spec;
  spec.seed = seed;
  spec.presence = 1.0;
  spec.schema_overlap = 0.9;
  spec.blocks = 2;
  spec.block_probability = 0.7;
  spec.zipf_exponent = 0.7;
  spec.value_overlap = 0.95;
  spec.hard_fraction = 0.1;
  spec.hard_value_overlap = 0.2;
  spec.pool_sharing = 0.3;
  spec.missing = 0.02;
  spec.perturbation = 0.1;
  spec.rare_fraction = 0.1;
  spec.alt_name_fraction = 0.2;
  spec.extra_attributes = 2;
  return spec;
}

SynthCorpus generate(const SynthSpec& spec) {
  spec.validate();
  return Generator(spec).run();
}

}  // namespace xlmatch
