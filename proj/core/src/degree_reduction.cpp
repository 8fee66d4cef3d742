#include "mjb/degree_reduction.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mjb/bases.hpp"
#include "mjb/bernstein_to_jacobi.hpp"
#include "mjb/jacobi_to_bernstein.hpp"
#include "mjb/specialfn.hpp"

namespace mjb {

namespace {

// First `count` control points of a degree-m curve matching the derivatives
// of orders < count at t=0 of the degree-n control polygon `src` (indexed
// 0..n), for one component. Derivative j at 0 is n!/(n-j)! * Delta^j p_0.
std::vector<double> match_start(const std::vector<double>& src, int m, int count) {
  const int n = static_cast<int>(src.size()) - 1;
  std::vector<double> r(static_cast<std::size_t>(count), 0.0);
  for (int j = 0; j < count; ++j) {
    double delta_p = 0.0;
    for (int s = 0; s <= j; ++s) delta_p += ((j - s) % 2 ? -1.0 : 1.0) * binomial(j, s) * src[s];
    double scale = 1.0;  // n!/(n-j)! / (m!/(m-j)!)
    for (int s = 0; s < j; ++s) scale *= static_cast<double>(n - s) / (m - s);
    double known = 0.0;
    for (int s = 0; s < j; ++s) known += ((j - s) % 2 ? -1.0 : 1.0) * binomial(j, s) * r[s];
    r[j] = scale * delta_p - known;
  }
  return r;
}

}  // namespace

void ReductionProblem::validate() const {
  const int n = source.degree();
  if (n < 0) throw std::invalid_argument("source curve is empty");
  if (k < 0 || l < 0) throw std::invalid_argument("constraint orders must be nonnegative");
  if (target_degree < k + l) {
    throw std::invalid_argument("target degree m=" + std::to_string(target_degree) +
                                " violates k + l <= m (k=" + std::to_string(k) +
                                ", l=" + std::to_string(l) + ")");
  }
  if (target_degree > n) {
    throw std::invalid_argument("target degree m=" + std::to_string(target_degree) +
                                " exceeds source degree " + std::to_string(n));
  }
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw std::invalid_argument("alpha > -1 and beta > -1 required");
  }
}

BezierCurve forced_boundary(const BezierCurve& p, int m, int k, int l) {
  const int n = p.degree();
  if (k < 0 || l < 0 || k + l > m || m > n) {
    throw std::invalid_argument("forced_boundary: need k + l <= m <= n");
  }
  BezierCurve r(m, p.dimension());
  for (int d = 0; d < p.dimension(); ++d) {
    std::vector<double> fwd(static_cast<std::size_t>(n + 1));
    std::vector<double> rev(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j) {
      fwd[j] = p(j, d);
      rev[j] = p(n - j, d);
    }
    // Reversal maps derivatives at 1 onto derivatives at 0 up to the sign
    // (-1)^j, which is the same on both curves.
    const auto head = match_start(fwd, m, k);
    const auto tail = match_start(rev, m, l);
    for (int j = 0; j < k; ++j) r(j, d) = head[j];
    for (int j = 0; j < l; ++j) r(m - j, d) = tail[j];
  }
  return r;
}

BezierCurve elevate(const BezierCurve& p, int to_degree) {
  if (to_degree < p.degree()) {
    throw std::invalid_argument("elevate: target degree " + std::to_string(to_degree) +
                                " below curve degree " + std::to_string(p.degree()));
  }
  BezierCurve cur = p;
  for (int deg = p.degree(); deg < to_degree; ++deg) {
    BezierCurve next(deg + 1, p.dimension());
    for (int j = 0; j <= deg + 1; ++j) {
      const double t = static_cast<double>(j) / (deg + 1);
      for (int d = 0; d < p.dimension(); ++d) {
        const double left = j > 0 ? cur(j - 1, d) : 0.0;
        const double right = j <= deg ? cur(j, d) : 0.0;
        next(j, d) = t * left + (1.0 - t) * right;
      }
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<double> mod_jacobi_norms_squared(const TransformParams& p) {
  const auto c = c_theorem2(p);
  const auto gram = bernstein_gram(p);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(p.dim()));
  for (int i = p.first_jacobi(); i <= p.last_jacobi(); ++i) {
    double s = 0.0;
    for (int h = p.k; h <= p.n - p.l; ++h) {
      for (int hh = p.k; hh <= p.n - p.l; ++hh) s += c(i, h) * gram(h, hh) * c(i, hh);
    }
    out.push_back(s);
  }
  return out;
}

ReductionResult reduce(const ReductionProblem& prob) {
  prob.validate();
  return reduce(prob, forced_boundary(prob.source, prob.target_degree, prob.k, prob.l));
}

ReductionResult reduce(const ReductionProblem& prob, const BezierCurve& stub) {
  prob.validate();
  const int n = prob.source.degree();
  const int m = prob.target_degree;
  const int k = prob.k, l = prob.l;
  const int dim = prob.source.dimension();
  if (stub.degree() != m || stub.dimension() != dim) {
    throw std::invalid_argument("reduce: stub must have the target degree and source dimension");
  }
  const BezierCurve forced = forced_boundary(prob.source, m, k, l);
  for (int j = 0; j <= m; ++j) {
    if (j >= k && j <= m - l) continue;
    for (int d = 0; d < dim; ++d) {
      if (std::abs(stub(j, d) - forced(j, d)) > 1e-9 * (1.0 + std::abs(forced(j, d)))) {
        throw std::invalid_argument("reduce: stub control point " + std::to_string(j) +
                                    " violates the endpoint constraints");
      }
    }
  }
  const TransformParams pn{n, k, l, prob.alpha, prob.beta};

  if (m == n) {
    return {prob.source, 0.0, ModJacobiCoeffs(pn, n + 1, 0, dim)};
  }

  // Residual p - q lies in the constrained space of degree n; slots outside
  // k..n-l vanish up to rounding and are dropped.
  const BezierCurve lifted = elevate(stub, n);
  BernsteinPoly residual(pn, dim);
  for (int h = k; h <= n - l; ++h) {
    for (int d = 0; d < dim; ++d) residual.coeffs(h, d) = prob.source(h, d) - lifted(h, d);
  }

  const ModJacobiCoeffs full = to_mod_jacobi(residual, d_theorem4(pn));

  const TransformParams pm{m, k, l, prob.alpha, prob.beta};
  ModJacobiCoeffs kept(pm, dim);
  for (int i = k + l; i <= m; ++i) {
    for (int d = 0; d < dim; ++d) kept.coeffs(i, d) = full.coeffs(i, d);
  }
  const BernsteinPoly correction = to_bernstein(kept, c_theorem2(pm));

  ReductionResult out;
  out.reduced = stub;
  for (int h = k; h <= m - l; ++h) {
    for (int d = 0; d < dim; ++d) out.reduced(h, d) += correction.coeffs(h, d);
  }

  out.discarded = ModJacobiCoeffs(pn, m + 1, n - m, dim);
  const auto norms = mod_jacobi_norms_squared(pn);
  double err2 = 0.0;
  for (int i = m + 1; i <= n; ++i) {
    for (int d = 0; d < dim; ++d) {
      const double a = full.coeffs(i, d);
      out.discarded.coeffs(i, d) = a;
      err2 += a * a * norms[i - (k + l)];
    }
  }
  out.l2_error = std::sqrt(err2);
  return out;
}

}  // namespace mjb
