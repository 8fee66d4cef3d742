#ifndef MJB_COEFFICIENTS_HPP
#define MJB_COEFFICIENTS_HPP

#include <span>
#include <vector>

#include "mjb/params.hpp"

namespace mjb {

/// Index range [first, first+count) of points in R^dimension, stored
/// contiguously. Scalar polynomials use dimension 1.
class CoefficientArray {
 public:
  CoefficientArray() = default;
  CoefficientArray(int first_index, int count, int dimension);

  int first_index() const { return first_; }
  int last_index() const { return first_ + count_ - 1; }
  int count() const { return count_; }
  int dimension() const { return dim_; }

  double& operator()(int index, int component = 0) { return values_[offset(index, component)]; }
  double operator()(int index, int component = 0) const {
    return values_[offset(index, component)];
  }

  std::span<double> point(int index) {
    return {values_.data() + offset(index, 0), static_cast<std::size_t>(dim_)};
  }
  std::span<const double> point(int index) const {
    return {values_.data() + offset(index, 0), static_cast<std::size_t>(dim_)};
  }

  /// All values, point-major.
  std::span<const double> values() const { return values_; }

  friend bool operator==(const CoefficientArray&, const CoefficientArray&) = default;

 private:
  std::size_t offset(int index, int component) const;

  int first_ = 0;
  int count_ = 0;
  int dim_ = 1;
  std::vector<double> values_;
};

/// Polynomial (or curve) of degree n in the full Bernstein basis.
class BezierCurve {
 public:
  BezierCurve() = default;
  BezierCurve(int degree, int dimension) : points_(0, degree + 1, dimension) {}

  /// Builds a curve from a list of control points; all must share one
  /// dimension. Throws std::invalid_argument otherwise.
  static BezierCurve from_points(const std::vector<std::vector<double>>& points);
  /// Scalar polynomial from its Bernstein coefficients.
  static BezierCurve from_values(const std::vector<double>& values);

  int degree() const { return points_.count() - 1; }
  int dimension() const { return points_.dimension(); }

  double& operator()(int j, int component = 0) { return points_(j, component); }
  double operator()(int j, int component = 0) const { return points_(j, component); }
  std::span<const double> point(int j) const { return points_.point(j); }
  std::span<double> point(int j) { return points_.point(j); }

  const CoefficientArray& coefficients() const { return points_; }

  friend bool operator==(const BezierCurve&, const BezierCurve&) = default;

 private:
  CoefficientArray points_;
};

/// Element of the constrained space in the Bernstein basis B_k^n..B_{n-l}^n.
struct BernsteinPoly {
  TransformParams params;
  CoefficientArray coeffs;  // indexed h = k..n-l

  BernsteinPoly() = default;
  BernsteinPoly(const TransformParams& p, int dimension)
      : params(p), coeffs(p.first_bernstein(), p.dim(), dimension) {}
};

/// Coefficients relative to the modified Jacobi polynomials J_{i,k,l}.
/// Usually covers i = k+l..n; truncation remainders cover a sub-range.
struct ModJacobiCoeffs {
  TransformParams params;
  CoefficientArray coeffs;

  ModJacobiCoeffs() = default;
  ModJacobiCoeffs(const TransformParams& p, int dimension)
      : params(p), coeffs(p.first_jacobi(), p.dim(), dimension) {}
  ModJacobiCoeffs(const TransformParams& p, int first, int count, int dimension)
      : params(p), coeffs(first, count, dimension) {}
};

}  // namespace mjb

#endif  // MJB_COEFFICIENTS_HPP
