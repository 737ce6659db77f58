#include "xlmatch/pipeline.h"

#include "xlmatch/errors.h"

namespace xlmatch {
namespace {

TypeContext build_context(const TypePair& types, std::vector<DualInfobox> duals,
                          const EntityClusters& clusters,
                          const TranslationDictionary& dictionary,
                          const AlignmentConfig& alignment) {
  TypeContext ctx;
  ctx.types = types;
  ctx.duals = std::move(duals);
  ctx.groups = build_attribute_groups(ctx.duals, clusters);
  ctx.matrix = OccurrenceMatrix::build(ctx.duals, ctx.groups);
  const auto limit = std::min(ctx.matrix.rows(), ctx.matrix.cols());
  const auto rank = alignment.svd_f ? std::min(*alignment.svd_f, limit)
                                    : default_rank(ctx.matrix.rows(), ctx.matrix.cols());
  ctx.model = truncated_svd(ctx.matrix, rank);
  ctx.signals = TypeSignals(ctx.groups, ctx.matrix, ctx.model, dictionary);
  ctx.frequencies = frequencies_of(ctx.groups);
  return ctx;
}

double correlation_score(const TypeContext& ctx, std::size_t p, std::size_t q,
                         CorrelationVariant variant) {
  return correlation_x(ctx.matrix, p, q, variant);
}

}  // namespace

Prepared prepare(const Corpus& corpus, const RunConfig& config) {
  config.alignment.validate();
  config.typemap.validate();
  Prepared out;
  out.left_language = config.left_language;
  out.right_language = config.right_language;
  if (out.left_language.empty() || out.right_language.empty()) {
    const auto languages = corpus.languages();
    if (languages.size() > 2) {
      throw ParameterError("corpus has more than two languages; set both explicitly");
    }
    if (languages.size() < 2) return out;
    out.left_language = languages[0];
    out.right_language = languages[1];
  }
  if (out.left_language == out.right_language) {
    throw ParameterError("left and right language must differ");
  }

  out.mapping = match_entity_types(corpus, out.left_language, out.right_language,
                                   config.typemap);
  if (out.mapping.empty()) return out;

  auto built = build_dual_infoboxes(corpus, out.mapping);
  out.dual_count = built.duals.size();
  out.missing_targets = built.missing_targets;
  out.dictionary = build_dictionary(corpus, out.left_language, out.right_language);
  out.clusters = EntityClusters(corpus);

  for (const auto& match : out.mapping.matches) {
    auto duals = duals_for(built.duals, match.types);
    std::size_t attributes = 0;
    for (const auto& d : duals) {
      attributes += d.left_infobox().size() + d.right_infobox().size();
    }
    if (duals.empty() || attributes < 2) {
      out.skipped.push_back(match.types);
      continue;
    }
    auto ctx = build_context(match.types, std::move(duals), out.clusters,
                             out.dictionary, config.alignment);
    if (ctx.groups.size() < 2) {
      out.skipped.push_back(match.types);
      continue;
    }
    out.types.push_back(std::move(ctx));
  }
  return out;
}

AlignmentResult align(const TypeContext& context, const RunConfig& config) {
  return attribute_alignment(context.signals, config.alignment, config.ablation);
}

PairSet present_truth(const TypeContext& context, const PairSet& truth) {
  PairSet out;
  for (const auto& p : truth) {
    if (context.frequencies.left.contains(p.left) &&
        context.frequencies.right.contains(p.right)) {
      out.insert(p);
    }
  }
  return out;
}

TypeEvaluation evaluate_type(const TypeContext& context, const PairSet& extracted,
                             const PairSet& truth, std::uint64_t seed) {
  const auto present = present_truth(context, truth);
  TypeEvaluation ev;
  ev.types = context.types;
  ev.weighted = weighted_metrics(extracted, present, context.frequencies);
  ev.macro = macro_metrics(extracted, present);
  ev.extracted = extracted.size();
  ev.truth = present.size();
  for (const auto& p : extracted) ev.correct += present.contains(p) ? 1 : 0;

  const auto& s = context.signals;
  ev.map.lsi = map_score(
      rank_by_score(s, [&](std::size_t p, std::size_t q) { return s.lsi(p, q); }), present);
  auto by_variant = [&](CorrelationVariant v) {
    return map_score(rank_by_score(s,
                                   [&](std::size_t p, std::size_t q) {
                                     return correlation_score(context, p, q, v);
                                   }),
                     present);
  };
  ev.map.x1 = by_variant(CorrelationVariant::kX1);
  ev.map.x2 = by_variant(CorrelationVariant::kX2);
  ev.map.x3 = by_variant(CorrelationVariant::kX3);
  ev.map.random = map_score(rank_randomly(s, seed), present);
  ev.overlap = mean_overlap(context.duals, truth);
  return ev;
}

EvalReport evaluate(const Prepared& prepared,
                    const std::map<TypePair, PairSet>& extracted,
                    const GroundTruth& truth, std::uint64_t seed) {
  EvalReport report;
  for (const auto& [types, pairs] : truth.by_type()) {
    const TypeContext* ctx = nullptr;
    for (const auto& c : prepared.types) {
      if (c.types == types) ctx = &c;
    }
    if (ctx == nullptr) {
      throw EvaluationError("ground truth type pair " + types.label() +
                            " is not a mapped type pair of the corpus");
    }
    const auto it = extracted.find(types);
    if (it == extracted.end()) {
      throw EvaluationError("no matches for ground truth type pair " + types.label());
    }
    report.types.push_back(evaluate_type(*ctx, it->second, pairs, seed));
  }
  report.aggregate();
  return report;
}

EvalReport run_and_evaluate(const Prepared& prepared, const GroundTruth& truth,
                            const RunConfig& config) {
  std::map<TypePair, PairSet> extracted;
  for (const auto& ctx : prepared.types) {
    const auto result = align(ctx, config);
    extracted[ctx.types] = flatten_matches(result.matches, ctx.signals);
  }
  return evaluate(prepared, extracted, truth, config.seed);
}

}  // namespace xlmatch
