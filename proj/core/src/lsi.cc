#include "xlmatch/lsi.h"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/SVD>

#include "xlmatch/errors.h"

namespace xlmatch {

LsiModel::LsiModel(Eigen::MatrixXd attribute_vectors,
                   Eigen::VectorXd singular_values,
                   Eigen::MatrixXd right_vectors)
    : attribute_vectors_(std::move(attribute_vectors)),
      singular_values_(std::move(singular_values)),
      right_vectors_(std::move(right_vectors)) {}

Eigen::MatrixXd LsiModel::reconstruct() const {
  // attribute_vectors_ already carries S_f.
  return attribute_vectors_ * right_vectors_.transpose();
}

double LsiModel::cosine(std::size_t p, std::size_t q) const {
  const auto a = attribute_vectors_.row(static_cast<Eigen::Index>(p));
  const auto b = attribute_vectors_.row(static_cast<Eigen::Index>(q));
  const double na = a.norm();
  const double nb = b.norm();
  // Scale-aware cutoff: rows that the truncation collapsed onto the origin
  // carry no direction.
  const double eps = 1e-12 * std::max(1.0, singular_values_.size() > 0
                                               ? singular_values_(0)
                                               : 1.0);
  if (na <= eps || nb <= eps) return 0.0;
  return std::clamp(a.dot(b) / (na * nb), -1.0, 1.0);
}

std::size_t default_rank(std::size_t rows, std::size_t cols) {
  const auto smaller = std::min(rows, cols);
  const auto fifth = static_cast<std::size_t>(
      std::ceil(0.2 * static_cast<double>(smaller)));
  return std::min(smaller, std::max<std::size_t>(2, fifth));
}

LsiModel truncated_svd(const OccurrenceMatrix& matrix, std::size_t rank) {
  const auto limit = std::min(matrix.rows(), matrix.cols());
  if (rank < 1 || rank > limit) {
    throw ParameterError("svd rank " + std::to_string(rank) +
                         " outside [1, " + std::to_string(limit) + "]");
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(matrix.cells(),
                                     Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto f = static_cast<Eigen::Index>(rank);
  Eigen::VectorXd values = svd.singularValues().head(f);
  Eigen::MatrixXd vectors = svd.matrixU().leftCols(f) * values.asDiagonal();
  Eigen::MatrixXd right = svd.matrixV().leftCols(f);
  return LsiModel(std::move(vectors), std::move(values), std::move(right));
}

double lsi_score(const LsiModel& model, const OccurrenceMatrix& matrix,
                 std::size_t p, std::size_t q) {
  const double cos = model.cosine(p, q);
  if (matrix.side(p) != matrix.side(q)) return std::max(0.0, cos);
  if (matrix.co_occur(p, q)) return 0.0;
  return std::clamp(1.0 - cos, 0.0, 1.0);
}

}  // namespace xlmatch
