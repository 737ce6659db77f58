#pragma once

#include <cstddef>

#include <Eigen/Core>

#include "xlmatch/similarity.h"

namespace xlmatch {

// Rank-f factorization of an occurrence matrix. Attribute vectors are the
// rows of U_f scaled by the top f singular values.
class LsiModel {
 public:
  LsiModel() = default;
  LsiModel(Eigen::MatrixXd attribute_vectors, Eigen::VectorXd singular_values,
           Eigen::MatrixXd right_vectors);

  std::size_t rank() const {
    return static_cast<std::size_t>(singular_values_.size());
  }
  const Eigen::MatrixXd& attribute_vectors() const { return attribute_vectors_; }
  const Eigen::VectorXd& singular_values() const { return singular_values_; }

  // U_f S_f V_f^T.
  Eigen::MatrixXd reconstruct() const;

  // Cosine between two attribute vectors; 0 when either is numerically zero.
  double cosine(std::size_t p, std::size_t q) const;

 private:
  Eigen::MatrixXd attribute_vectors_;
  Eigen::VectorXd singular_values_;
  Eigen::MatrixXd right_vectors_;
};

// min(n, m, max(2, ceil(0.2 * min(n, m)))).
std::size_t default_rank(std::size_t rows, std::size_t cols);

// Throws ParameterError unless 1 <= rank <= min(rows, cols).
LsiModel truncated_svd(const OccurrenceMatrix& matrix, std::size_t rank);

// Correlation score of two attributes:
//   different languages               -> max(0, cosine)
//   same language, co-occur somewhere -> 0
//   same language otherwise           -> 1 - cosine, clamped to [0, 1]
double lsi_score(const LsiModel& model, const OccurrenceMatrix& matrix,
                 std::size_t p, std::size_t q);

}  // namespace xlmatch
