#pragma once

#include <functional>
#include <map>
#include <string>

namespace xlmatch {

// Sparse frequency vector keyed by string (value component or entity id).
// Ordered so that every computation over it is deterministic.
using TermVector = std::map<std::string, double, std::less<>>;

double dot(const TermVector& a, const TermVector& b);
double norm(const TermVector& v);
double total_mass(const TermVector& v);

// Cosine of two vectors; 0 when either is empty or all-zero.
double cosine(const TermVector& a, const TermVector& b);

}  // namespace xlmatch
