#ifndef MJB_JACOBI_TO_BERNSTEIN_HPP
#define MJB_JACOBI_TO_BERNSTEIN_HPP

#include "mjb/coefficients.hpp"
#include "mjb/indexed_matrix.hpp"
#include "mjb/params.hpp"

namespace mjb {

/// Bernstein coefficients c[i][h] of the modified Jacobi polynomials,
///   J_{i,k,l}(x) = sum_{h=k}^{n-l} c[i][h] B_h^n(x),   i = k+l..n.
///
/// Four builders produce the same matrix:
///  - c_direct:   each entry from its Hahn polynomial representation, O(n^3).
///  - c_theorem1: three-term recurrence in h for each fixed row i, O(n^2).
///  - c_theorem2: three-term recurrence in i for each fixed column h, O(n^2).
///  - c_oracle:   the gamma-function binomial sum from the literature, O(n^3).
///
/// All builders validate the parameters (std::invalid_argument).
CoeffMatrixC c_direct(const TransformParams& p);
CoeffMatrixC c_theorem1(const TransformParams& p, const BuildOptions& opts = {});
CoeffMatrixC c_theorem2(const TransformParams& p, const BuildOptions& opts = {});
CoeffMatrixC c_oracle(const TransformParams& p);

/// Default route (column recurrence).
inline CoeffMatrixC jacobi_to_bernstein_matrix(const TransformParams& p,
                                               const BuildOptions& opts = {}) {
  return c_theorem2(p, opts);
}

/// Converts modified Jacobi coefficients to the constrained Bernstein basis.
/// Only the indices present in `a` contribute.
BernsteinPoly to_bernstein(const ModJacobiCoeffs& a, const CoeffMatrixC& c);

}  // namespace mjb

#endif  // MJB_JACOBI_TO_BERNSTEIN_HPP
