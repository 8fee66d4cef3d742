#ifndef MJB_PARAMS_HPP
#define MJB_PARAMS_HPP

#include <algorithm>
#include <cmath>

namespace mjb {

/// Degree, constraint orders and Jacobi weight exponents of the constrained
/// space of polynomials of degree <= n whose derivatives of order < k vanish
/// at 0 and of order < l vanish at 1.
///
/// The constrained Bernstein basis is B_k^n..B_{n-l}^n; the modified Jacobi
/// basis is J_{k+l}..J_n. Both have dimension n-k-l+1.
struct TransformParams {
  int n = 0;
  int k = 0;
  int l = 0;
  double alpha = 0.0;
  double beta = 0.0;

  double sigma() const { return alpha + beta + 1.0; }
  int dim() const { return n - k - l + 1; }

  int first_bernstein() const { return k; }
  int last_bernstein() const { return n - l; }
  int first_jacobi() const { return k + l; }
  int last_jacobi() const { return n; }

  /// Throws std::invalid_argument naming the violated invariant.
  void validate() const;

  friend bool operator==(const TransformParams&, const TransformParams&) = default;
};

/// Mixed absolute/relative closeness: |a-b| <= atol + rtol*max(|a|,|b|).
struct Tolerance {
  double atol = 1e-12;
  double rtol = 1e-9;

  bool close(double a, double b) const {
    return std::abs(a - b) <= atol + rtol * std::max(std::abs(a), std::abs(b));
  }
};

}  // namespace mjb

#endif  // MJB_PARAMS_HPP
