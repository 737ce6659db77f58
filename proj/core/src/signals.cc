#include "xlmatch/signals.h"

#include <ostream>

namespace xlmatch {

std::vector<SimilarityTuple> score_all_pairs(const SignalProvider& signals) {
  const auto n = signals.attribute_count();
  std::vector<SimilarityTuple> tuples;
  tuples.reserve(n * (n > 0 ? n - 1 : 0) / 2);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      tuples.push_back({p, q, signals.vsim(p, q), signals.lsim(p, q),
                        signals.lsi(p, q)});
    }
  }
  return tuples;
}

TypeSignals::TypeSignals(const std::vector<AttributeGroup>& groups,
                         const OccurrenceMatrix& matrix, const LsiModel& model,
                         const TranslationDictionary& dictionary) {
  const auto n = groups.size();
  keys_.reserve(n);
  for (const auto& g : groups) keys_.push_back(g.key);
  vsim_.assign(n * n, 0.0);
  lsim_.assign(n * n, 0.0);
  lsi_.assign(n * n, 0.0);
  grouping_.assign(n * n, 0.0);
  co_occur_.assign(n * n, 0);

  // Translate each left vector once instead of once per pair.
  std::vector<TermVector> translated;
  translated.reserve(n);
  for (const auto& g : groups) {
    translated.push_back(g.language == dictionary.from()
                             ? translate_vector(g.values, dictionary)
                             : g.values);
  }

  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p; q < n; ++q) {
      const bool same = groups[p].side() == groups[q].side();
      const double v = same ? cosine(groups[p].values, groups[q].values)
                            : cosine(translated[p], translated[q]);
      const double l = xlmatch::lsim(groups[p], groups[q]);
      const double c = p == q ? 1.0 : lsi_score(model, matrix, p, q);
      const double g = grouping_score(matrix, p, q);
      const unsigned char co = same && matrix.co_occur(p, q) ? 1 : 0;
      for (const auto idx : {at(p, q), at(q, p)}) {
        vsim_[idx] = v;
        lsim_[idx] = l;
        lsi_[idx] = c;
        grouping_[idx] = g;
        co_occur_[idx] = co;
      }
    }
  }
}

void write_occurrence_tsv(std::ostream& out, const OccurrenceMatrix& matrix,
                          const std::vector<AttributeGroup>& groups) {
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    out << side_name(groups[i].side()) << '\t' << groups[i].name();
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      out << '\t'
          << (matrix.cells()(static_cast<Eigen::Index>(i),
                             static_cast<Eigen::Index>(j)) != 0.0
                  ? 1
                  : 0);
    }
    out << '\n';
  }
}

void write_tuples_tsv(std::ostream& out, const SignalProvider& signals,
                      const std::vector<SimilarityTuple>& tuples) {
  out << "side_p\tattr_p\tside_q\tattr_q\tvsim\tlsim\tlsi\n";
  for (const auto& t : tuples) {
    const auto& a = signals.attribute(t.p);
    const auto& b = signals.attribute(t.q);
    out << side_name(a.side) << '\t' << a.name << '\t' << side_name(b.side)
        << '\t' << b.name << '\t' << t.vsim << '\t' << t.lsim << '\t' << t.lsi
        << '\n';
  }
}

}  // namespace xlmatch
