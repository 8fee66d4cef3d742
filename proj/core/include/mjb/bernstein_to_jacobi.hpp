#ifndef MJB_BERNSTEIN_TO_JACOBI_HPP
#define MJB_BERNSTEIN_TO_JACOBI_HPP

#include "mjb/coefficients.hpp"
#include "mjb/indexed_matrix.hpp"
#include "mjb/params.hpp"

namespace mjb {

/// Modified Jacobi coefficients d[h][i] of the constrained Bernstein basis,
///   B_h^n(x) = sum_{i=k+l}^{n} d[h][i] J_{i,k,l}(x),   h = k..n-l.
///
/// Each entry factors as d[h][i] = z[h][i] * w[h][i], where z is a ratio of
/// Pochhammer products and w = Q_{i-k-l}(h-k; beta+2k, alpha+2l, n-k-l) is
/// a Hahn polynomial value. The recurrence builders carry z and w as
/// running scalars per lane and never tabulate them.
///
///  - d_direct:   z by its product formula, w by the Hahn sum, O(n^3).
///  - d_theorem3: fixed h, recurrences in i, O(n^2).
///  - d_theorem4: fixed i, recurrences in h, O(n^2).
///  - d_oracle:   gamma-function binomial sum from the literature, O(n^3).
CoeffMatrixD d_direct(const TransformParams& p);
CoeffMatrixD d_theorem3(const TransformParams& p, const BuildOptions& opts = {});
CoeffMatrixD d_theorem4(const TransformParams& p, const BuildOptions& opts = {});
CoeffMatrixD d_oracle(const TransformParams& p);

/// Default route (recurrence in h).
inline CoeffMatrixD bernstein_to_jacobi_matrix(const TransformParams& p,
                                               const BuildOptions& opts = {}) {
  return d_theorem4(p, opts);
}

enum class URoute {
  over_h,  ///< seed u[i][k], ratio recurrence in h for each fixed i
  over_i,  ///< seed u[k+l][h], ratio recurrence in i for each fixed h
};

/// Factors u[i][h] linking the two transforms: c[i][h] = u[i][h] * d[h][i].
UFactors u_factors(const TransformParams& p, URoute route = URoute::over_h);

/// Converts constrained Bernstein coefficients to the modified Jacobi basis.
ModJacobiCoeffs to_mod_jacobi(const BernsteinPoly& b, const CoeffMatrixD& d);

}  // namespace mjb

#endif  // MJB_BERNSTEIN_TO_JACOBI_HPP
