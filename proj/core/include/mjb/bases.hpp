#ifndef MJB_BASES_HPP
#define MJB_BASES_HPP

#include <vector>

#include "mjb/coefficients.hpp"
#include "mjb/indexed_matrix.hpp"
#include "mjb/params.hpp"

namespace mjb {

/// B_j^n(x) = C(n,j) x^j (1-x)^(n-j).
double bernstein_basis(int n, int j, double x);

/// Value of a constrained Bernstein polynomial at x in [0,1], one entry per
/// component. De Casteljau on the zero-padded degree-n coefficient vector.
std::vector<double> eval_bernstein(const BernsteinPoly& p, double x);

/// Point on a Bezier curve (de Casteljau).
std::vector<double> eval_curve(const BezierCurve& c, double x);

/// Shifted Jacobi polynomial R_i^(alpha,beta)(x), orthogonal on [0,1] under
/// the weight (1-x)^alpha x^beta. Terminating sum in powers of (1-x).
double eval_shifted_jacobi(int i, double alpha, double beta, double x);

/// Modified Jacobi polynomial J_{i,k,l}(x) = (1-x)^l x^k R_{i-k-l}^(alpha+2l, beta+2k)(x).
/// Throws std::out_of_range unless k+l <= i <= n.
double eval_mod_jacobi(int i, const TransformParams& p, double x);

/// Gram matrix of B_k^n..B_{n-l}^n under <f,g> = int_0^1 (1-x)^alpha x^beta f g dx,
/// computed exactly through Beta functions. Rows and columns indexed by h.
IndexedMatrix bernstein_gram(const TransformParams& p);

/// Weighted inner product, summed over components. Both arguments must
/// share params and dimension (std::invalid_argument otherwise).
double inner_product(const BernsteinPoly& f, const BernsteinPoly& g);
double inner_product(const BernsteinPoly& f, const BernsteinPoly& g, const IndexedMatrix& gram);

}  // namespace mjb

#endif  // MJB_BASES_HPP
