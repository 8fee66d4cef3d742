#ifndef MJB_DEGREE_REDUCTION_HPP
#define MJB_DEGREE_REDUCTION_HPP

#include <vector>

#include "mjb/coefficients.hpp"
#include "mjb/params.hpp"

namespace mjb {

/// Reduce a degree-n Bezier curve to degree m, keeping derivatives of
/// order < k at t=0 and < l at t=1, optimally in the weighted L2 norm with
/// weight (1-t)^alpha t^beta. Requires k+l <= m <= n.
struct ReductionProblem {
  BezierCurve source;
  int target_degree = 0;
  int k = 0;
  int l = 0;
  double alpha = 0.0;
  double beta = 0.0;

  /// Throws std::invalid_argument naming the violated condition.
  void validate() const;
};

struct ReductionResult {
  BezierCurve reduced;
  /// Root-sum-square over components of the weighted L2 distance.
  double l2_error = 0.0;
  /// Modified Jacobi coefficients i = m+1..n of source - reduced, relative
  /// to the degree-n parameters.
  ModJacobiCoeffs discarded;
};

/// Degree-m curve whose first k and last l control points are the unique
/// values matching the endpoint derivatives of p; the remaining slots are 0.
BezierCurve forced_boundary(const BezierCurve& p, int m, int k, int l);

/// Same polynomial written in the degree-`to_degree` Bernstein basis.
/// Throws std::invalid_argument if to_degree < p.degree().
BezierCurve elevate(const BezierCurve& p, int to_degree);

/// Squared norms <J_i, J_i>, i = k+l..n, through the Bernstein Gram matrix.
std::vector<double> mod_jacobi_norms_squared(const TransformParams& p);

ReductionResult reduce(const ReductionProblem& prob);

/// Same result computed from an arbitrary feasible stub: a degree-m curve
/// whose constrained boundary slots equal those of forced_boundary.
/// Its free slots may hold anything.
ReductionResult reduce(const ReductionProblem& prob, const BezierCurve& stub);

}  // namespace mjb

#endif  // MJB_DEGREE_REDUCTION_HPP
