#include "mjb/jacobi_to_bernstein.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "lanes.hpp"
#include "mjb/specialfn.hpp"

namespace mjb {

namespace {

// (a)_m / m! as a running product of ratios (no intermediate overflow).
double poch_over_factorial(double a, int m) {
  double r = 1.0;
  for (int j = 0; j < m; ++j) r *= (a + j) / (j + 1.0);
  return r;
}

double sign_power(int e) { return (e % 2 == 0) ? 1.0 : -1.0; }

// The space is one-dimensional: J_{k+l} = x^k (1-x)^l = C(n,k)^{-1} B_k^n.
bool fill_degenerate(CoeffMatrixC& c) {
  const auto& p = c.params();
  if (p.dim() != 1) return false;
  c(p.k + p.l, p.k) = 1.0 / binomial(p.n, p.k);
  return true;
}

}  // namespace

CoeffMatrixC c_direct(const TransformParams& p) {
  p.validate();
  CoeffMatrixC c(p);
  if (fill_degenerate(c)) return c;
  const int n = p.n, k = p.k, l = p.l;
  const HahnParams hp{p.alpha + 2 * l, p.beta + 2 * k, n - k - l};
  for (int i = k + l; i <= n; ++i) {
    const int m = i - k - l;
    const double lead = poch_over_factorial(p.alpha + 2 * l + 1.0, m);
    for (int h = k; h <= n - l; ++h) {
      c(i, h) = lead * binomial(n - k - l, h - k) / binomial(n, h) *
                hahn_eval(m, static_cast<double>(n - l - h), hp);
    }
  }
  return c;
}

CoeffMatrixC c_theorem1(const TransformParams& p, const BuildOptions& opts) {
  p.validate();
  CoeffMatrixC c(p);
  if (fill_degenerate(c)) return c;
  const int n = p.n, k = p.k, l = p.l;
  const double a = p.alpha, b = p.beta, sigma = p.sigma();
  const double top_seed = 1.0 / binomial(n, l);

  detail::for_each_lane(k + l, n, opts, [&](int i) {
    const double ki = (k + l - i) * (i + k + l + sigma);
    c(i, n - l) = poch_over_factorial(a + 2 * l + 1.0, i - k - l) * top_seed;
    c(i, n - l - 1) = c(i, n - l) * (n - k - l) * (l + 1.0) / (n - l) *
                      (1.0 - ki / ((k + l - n) * (a + 2 * l + 1.0)));
    std::uint64_t steps = 0;
    for (int h = n - l - 2; h >= k; --h) {
      const double den = (n + l + a - h) * (k - h - 1.0);
      assert(den != 0.0);
      const double H = (n - l - h - 1.0) * (h + k + b + 2.0) / den;
      const double F = (n - h) * (h + 1.0 - k) / ((n - l - h) * (h + 1.0)) * (1.0 - H - ki / den);
      const double G = (n - h - 1.0) * (n - h) * (h + 1.0 - k) * (h + 2.0 - k) /
                       ((n - l - h - 1.0) * (n - l - h) * (h + 1.0) * (h + 2.0)) * H;
      c(i, h) = F * c(i, h + 1) + G * c(i, h + 2);
      ++steps;
    }
    detail::count_steps(opts, steps, 2);
  });
  return c;
}

CoeffMatrixC c_theorem2(const TransformParams& p, const BuildOptions& opts) {
  p.validate();
  CoeffMatrixC c(p);
  if (fill_degenerate(c)) return c;
  const int n = p.n, k = p.k, l = p.l;
  const double a = p.alpha, b = p.beta, sigma = p.sigma();

  detail::for_each_lane(k, n - l, opts, [&](int h) {
    c(k + l, h) = binomial(n - k - l, h - k) / binomial(n, h);
    c(k + l + 1, h) = c(k + l, h) *
                      (a + 2 * l + 1.0 - (sigma + 2 * k + 2 * l + 1.0) * (l + h - n) / (k + l - n));
    std::uint64_t steps = 0;
    for (int i = k + l + 2; i <= n; ++i) {
      const double s = 2.0 * i + a + b;  // 2i + alpha + beta
      const double t = i + k + l + a + b;
      const double u = i + l + a - k;
      const double den = (s - 2.0) * t * u * (i - n - 1.0);
      assert(den != 0.0);
      const double M = (i - k - l - 1.0) * (n + i + a + b) * (i + k + b - l - 1.0) * s / den;
      const double K = u / (i - k - l) *
                       (1.0 - M - (l + h - n) * (s - 1.0) * s / (t * u * (i - n - 1.0)));
      const double L = (u - 1.0) * u / ((i - k - l - 1.0) * (i - k - l)) * M;
      c(i, h) = K * c(i - 1, h) + L * c(i - 2, h);
      ++steps;
    }
    detail::count_steps(opts, steps, 2);
  });
  return c;
}

CoeffMatrixC c_oracle(const TransformParams& p) {
  p.validate();
  CoeffMatrixC c(p);
  if (fill_degenerate(c)) return c;
  const int n = p.n, k = p.k, l = p.l;
  const double a = p.alpha, b = p.beta;
  for (int i = k + l; i <= n; ++i) {
    for (int h = k; h <= n - l; ++h) {
      const int r_lo = std::max(0, h + i - n - k);
      const int r_hi = std::min(h - k, i - l - k);
      double sum = 0.0;
      for (int r = r_lo; r <= r_hi; ++r) {
        sum += sign_power(i - l - k - r) * gen_binomial(i + a + l - k, r) *
               gen_binomial(i + b - l + k, i - l - k - r) * gen_binomial(n - i, h - k - r);
      }
      c(i, h) = sum / gen_binomial(n, h);
    }
  }
  return c;
}

BernsteinPoly to_bernstein(const ModJacobiCoeffs& a, const CoeffMatrixC& c) {
  if (!(a.params == c.params())) {
    throw std::invalid_argument("to_bernstein: coefficient and matrix parameters differ");
  }
  BernsteinPoly out(c.params(), a.coeffs.dimension());
  for (int i = a.coeffs.first_index(); i <= a.coeffs.last_index(); ++i) {
    for (int h = c.col_first(); h <= c.col_last(); ++h) {
      for (int d = 0; d < a.coeffs.dimension(); ++d) out.coeffs(h, d) += a.coeffs(i, d) * c(i, h);
    }
  }
  return out;
}

}  // namespace mjb
