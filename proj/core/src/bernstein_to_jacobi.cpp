#include "mjb/bernstein_to_jacobi.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "lanes.hpp"
#include "mjb/specialfn.hpp"

namespace mjb {

namespace {

double sign_power(int e) { return (e % 2 == 0) ? 1.0 : -1.0; }

// (a1)_m1 (a2)_m2 / (b)_{m1+m2}, accumulated factor by factor.
double poch_pair_ratio(double a1, int m1, double a2, int m2, double b) {
  double r = 1.0;
  for (int j = 0; j < m1; ++j) r *= (a1 + j) / (b + j);
  for (int j = 0; j < m2; ++j) r *= (a2 + j) / (b + m1 + j);
  return r;
}

// (2i+sigma) (alpha+l+i+1-k)_{n-i} (k+l-n)_{i-k-l} / (i+k+l+sigma)_{n-k-l+1}.
// At i = k+l the leading factor cancels the first denominator factor exactly,
// which also covers i = k+l = 0 with sigma = 0.
double z_lower_edge(const TransformParams& p, int i) {
  const int n = p.n, k = p.k, l = p.l;
  const double sigma = p.sigma();
  const double lead = (i == k + l) ? 1.0 : (2.0 * i + sigma) / (i + k + l + sigma);
  return lead * poch_pair_ratio(p.alpha + l + i + 1.0 - k, n - i, k + l - static_cast<double>(n),
                                i - k - l, i + k + l + sigma + 1.0);
}

// C(n,h) (alpha+2l+1)_{n-l-h} (beta+2k+1)_{h-k} / (2k+2l+sigma+1)_{n-k-l}.
double z_first_jacobi(const TransformParams& p, int h) {
  const int n = p.n, k = p.k, l = p.l;
  return binomial(n, h) * poch_pair_ratio(p.alpha + 2 * l + 1.0, n - l - h, p.beta + 2 * k + 1.0,
                                          h - k, 2 * k + 2 * l + p.sigma() + 1.0);
}

// z[h][i] / z[h][i-1] for i >= k+l+1.
double z_ratio_in_i(const TransformParams& p, int i) {
  const int n = p.n, k = p.k, l = p.l;
  const double a = p.alpha, b = p.beta, sigma = p.sigma();
  // (i+k+l+alpha+beta) and (2i+alpha+beta-1) coincide at i = k+l+1.
  const double tail = (i == k + l + 1) ? 1.0 : (i + k + l + a + b) / (2.0 * i + a + b - 1.0);
  return (2.0 * i + sigma) * (i - n - 1.0) / ((a + l + i - k) * (i + n + sigma)) * tail;
}

bool fill_degenerate(CoeffMatrixD& d) {
  const auto& p = d.params();
  if (p.dim() != 1) return false;
  d(p.k, p.k + p.l) = binomial(p.n, p.k);
  return true;
}

}  // namespace

CoeffMatrixD d_direct(const TransformParams& p) {
  p.validate();
  CoeffMatrixD d(p);
  if (fill_degenerate(d)) return d;
  const int n = p.n, k = p.k, l = p.l;
  const double sigma = p.sigma();
  const HahnParams hp{p.beta + 2 * k, p.alpha + 2 * l, n - k - l};
  for (int h = k; h <= n - l; ++h) {
    for (int i = k + l; i <= n; ++i) {
      const int m = i - k - l;
      double z = 0.0;
      if (i == k + l) {
        z = binomial(n, h) * pochhammer(p.alpha + 2 * l + 1.0, n - l - h) *
            pochhammer(p.beta + 2 * k + 1.0, h - k) / pochhammer(2 * k + 2 * l + sigma + 1.0, n - k - l);
      } else {
        z = binomial(n, h) * (2.0 * i + sigma) * pochhammer(k + l - static_cast<double>(n), m) *
            pochhammer(p.alpha + 2 * l + 1.0, n - l - h) * pochhammer(p.beta + 2 * k + 1.0, h - k) /
            (pochhammer(p.alpha + 2 * l + 1.0, m) * pochhammer(i + k + l + sigma, n + 1 - k - l));
      }
      d(h, i) = z * hahn_eval(m, static_cast<double>(h - k), hp);
    }
  }
  return d;
}

CoeffMatrixD d_theorem3(const TransformParams& p, const BuildOptions& opts) {
  p.validate();
  CoeffMatrixD d(p);
  if (fill_degenerate(d)) return d;
  const int n = p.n, k = p.k, l = p.l;
  const double a = p.alpha, b = p.beta, sigma = p.sigma();

  detail::for_each_lane(k, n - l, opts, [&](int h) {
    double z = z_first_jacobi(p, h);
    d(h, k + l) = z;
    z *= z_ratio_in_i(p, k + l + 1);
    double w_prev = 1.0;
    double w = 1.0 + (h - k) * (2 * k + 2 * l + sigma + 1.0) / ((k + l - n) * (b + 2 * k + 1.0));
    d(h, k + l + 1) = z * w;
    std::uint64_t steps = 0;
    for (int i = k + l + 2; i <= n; ++i) {
      const double s = 2.0 * i + a + b;
      const double t = i + k + l + a + b;
      const double v = i + k + b - l;
      const double den = (s - 2.0) * t * v * (i - n - 1.0);
      assert(den != 0.0);
      const double S = (i - k - l - 1.0) * (i + b + a + n) * (i + l + a - k - 1.0) * s / den;
      const double P = 1.0 - S - (k - h) * (s - 1.0) * s / (t * v * (i - n - 1.0));
      const double w_next = P * w + S * w_prev;
      w_prev = w;
      w = w_next;
      z *= z_ratio_in_i(p, i);
      d(h, i) = z * w;
      ++steps;
    }
    detail::count_steps(opts, steps, 2);
  });
  return d;
}

CoeffMatrixD d_theorem4(const TransformParams& p, const BuildOptions& opts) {
  p.validate();
  CoeffMatrixD d(p);
  if (fill_degenerate(d)) return d;
  const int n = p.n, k = p.k, l = p.l;
  const double a = p.alpha, b = p.beta, sigma = p.sigma();

  detail::for_each_lane(k + l, n, opts, [&](int i) {
    const double ki = (k + l - i) * (i + k + l + sigma);
    double z = binomial(n, k) * z_lower_edge(p, i);
    d(k, i) = z;
    z *= (n - k) * (b + 2 * k + 1.0) / ((k + 1.0) * (a + l + n - k));
    double w_prev = 1.0;
    double w = 1.0 + (i - k - l) * (i + k + l + sigma) / ((b + 2 * k + 1.0) * (k + l - n));
    d(k + 1, i) = z * w;
    std::uint64_t steps = 0;
    for (int h = k + 2; h <= n - l; ++h) {
      const double den = (h + k + b) * (h + l - n - 1.0);
      assert(den != 0.0);
      const double V = (h - k - 1.0) * (l + n + a + 2.0 - h) / den;
      const double T = 1.0 - V - ki / den;
      const double w_next = T * w + V * w_prev;
      w_prev = w;
      w = w_next;
      z *= (n + 1.0 - h) * (b + k + h) / (h * (a + l + n + 1.0 - h));
      d(h, i) = z * w;
      ++steps;
    }
    detail::count_steps(opts, steps, 2);
  });
  return d;
}

CoeffMatrixD d_oracle(const TransformParams& p) {
  p.validate();
  CoeffMatrixD d(p);
  if (fill_degenerate(d)) return d;
  const int n = p.n, k = p.k, l = p.l;
  const double a = p.alpha, b = p.beta, sigma = p.sigma();
  for (int h = k; h <= n - l; ++h) {
    for (int i = k + l; i <= n; ++i) {
      // (2i+sigma) Gamma(i+l+k+sigma); at i+k+l = 0 this is Gamma(sigma+1).
      const double log_lead =
          (i + k + l == 0) ? log_gamma(sigma + 1.0)
                           : std::log(2.0 * i + sigma) + log_gamma(i + l + k + sigma);
      const double g = gen_binomial(n, h) *
                       std::exp(log_lead + log_gamma(i - l - k + 1.0) -
                                log_gamma(i + l - k + a + 1.0) - log_gamma(i - l + k + b + 1.0)) /
                       (n + i + sigma);
      double sum = 0.0;
      for (int r = 0; r <= i - l - k; ++r) {
        sum += sign_power(i - l - k - r) * gen_binomial(i + a + l - k, r) *
               gen_binomial(i + b - l + k, i - l - k - r) /
               gen_binomial(n + i + a + b, h + b + k + r);
      }
      d(h, i) = g * sum;
    }
  }
  return d;
}

UFactors u_factors(const TransformParams& p, URoute route) {
  p.validate();
  UFactors u(p);
  const int n = p.n, k = p.k, l = p.l;
  const double a = p.alpha, b = p.beta, sigma = p.sigma();
  if (p.dim() == 1) {
    const double cnk = binomial(n, k);
    u(k + l, k) = 1.0 / (cnk * cnk);
    return u;
  }
  if (route == URoute::over_h) {
    const double cnk = binomial(n, k);
    for (int i = k + l; i <= n; ++i) {
      const int m = i - k - l;
      // Reciprocal of z_lower_edge times (beta+2k+1)_m / m!.
      double seed = sign_power(m) / (cnk * cnk) / z_lower_edge(p, i);
      for (int j = 0; j < m; ++j) seed *= (b + 2 * k + 1.0 + j) / (j + 1.0);
      u(i, k) = seed;
      for (int h = k + 1; h <= n - l; ++h) {
        u(i, h) = -u(i, h - 1) * h * h * (l + h - n - 1.0) * (n + l + a + 1.0 - h) /
                  ((h - n - 1.0) * (h - n - 1.0) * (h - k) * (h + k + b));
      }
    }
  } else {
    for (int h = k; h <= n - l; ++h) {
      const double cnh = binomial(n, h);
      u(k + l, h) = binomial(n - k - l, h - k) / (cnh * cnh) / poch_pair_ratio(
          a + 2 * l + 1.0, n - l - h, b + 2 * k + 1.0, h - k, 2 * k + 2 * l + sigma + 1.0);
      for (int i = k + l + 1; i <= n; ++i) {
        const double tail =
            (i == k + l + 1) ? 1.0 : (2.0 * i + a + b - 1.0) / (i + k + l + a + b);
        u(i, h) = -u(i - 1, h) * (i + l + a - k) * (n + i + sigma) * (i + k + b - l) /
                  ((2.0 * i + sigma) * (i - k - l) * (i - n - 1.0)) * tail;
      }
    }
  }
  return u;
}

ModJacobiCoeffs to_mod_jacobi(const BernsteinPoly& bp, const CoeffMatrixD& d) {
  if (!(bp.params == d.params())) {
    throw std::invalid_argument("to_mod_jacobi: coefficient and matrix parameters differ");
  }
  ModJacobiCoeffs out(d.params(), bp.coeffs.dimension());
  for (int h = bp.coeffs.first_index(); h <= bp.coeffs.last_index(); ++h) {
    for (int i = d.col_first(); i <= d.col_last(); ++i) {
      for (int c = 0; c < bp.coeffs.dimension(); ++c) out.coeffs(i, c) += bp.coeffs(h, c) * d(h, i);
    }
  }
  return out;
}

}  // namespace mjb
