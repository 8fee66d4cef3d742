#include "mjb/coefficients.hpp"

#include <cassert>
#include <stdexcept>

namespace mjb {

CoefficientArray::CoefficientArray(int first_index, int count, int dimension)
    : first_(first_index), count_(count), dim_(dimension) {
  if (count < 0) throw std::invalid_argument("coefficient count must be nonnegative");
  if (dimension < 1) throw std::invalid_argument("dimension must be at least 1");
  values_.assign(static_cast<std::size_t>(count) * dimension, 0.0);
}

std::size_t CoefficientArray::offset(int index, int component) const {
  assert(index >= first_ && index < first_ + count_);
  assert(component >= 0 && component < dim_);
  return static_cast<std::size_t>(index - first_) * dim_ + component;
}

BezierCurve BezierCurve::from_points(const std::vector<std::vector<double>>& points) {
  if (points.empty()) throw std::invalid_argument("a curve needs at least one control point");
  const auto dim = static_cast<int>(points.front().size());
  BezierCurve c(static_cast<int>(points.size()) - 1, dim);
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (static_cast<int>(points[j].size()) != dim) {
      throw std::invalid_argument("control points have inconsistent dimension");
    }
    for (int d = 0; d < dim; ++d) c(static_cast<int>(j), d) = points[j][d];
  }
  return c;
}

BezierCurve BezierCurve::from_values(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("a curve needs at least one control point");
  BezierCurve c(static_cast<int>(values.size()) - 1, 1);
  for (std::size_t j = 0; j < values.size(); ++j) c(static_cast<int>(j)) = values[j];
  return c;
}

}  // namespace mjb
