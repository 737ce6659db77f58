#include "xlmatch/term_vector.h"

#include <cmath>

namespace xlmatch {

double dot(const TermVector& a, const TermVector& b) {
  double sum = 0.0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      sum += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return sum;
}

double norm(const TermVector& v) {
  double sum = 0.0;
  for (const auto& [key, value] : v) sum += value * value;
  return std::sqrt(sum);
}

double total_mass(const TermVector& v) {
  double sum = 0.0;
  for (const auto& [key, value] : v) sum += value;
  return sum;
}

double cosine(const TermVector& a, const TermVector& b) {
  const double denom = norm(a) * norm(b);
  if (denom <= 0.0) return 0.0;
  return dot(a, b) / denom;
}

}  // namespace xlmatch
