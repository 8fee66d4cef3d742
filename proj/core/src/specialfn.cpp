#include "mjb/specialfn.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "wide.hpp"

namespace mjb {

namespace {

// Above this the integer binomial leaves the range where a product of
// ratios is both exact enough and cheaper than three log-gamma calls.
constexpr int kDirectBinomialLimit = 170;

void require_degree(int n, int N, const char* what) {
  if (n < 0 || n > N) {
    throw std::domain_error(std::string(what) + ": degree " + std::to_string(n) +
                            " outside [0, " + std::to_string(N) + "]");
  }
}

}  // namespace

double pochhammer(double h, int i) {
  double r = 1.0;
  for (int j = 0; j < i; ++j) r *= h + j;
  return r;
}

double binomial(int n, int j) {
  if (j < 0 || j > n) return 0.0;
  if (j > n - j) j = n - j;
  if (n > kDirectBinomialLimit) {
    return std::exp(log_gamma(n + 1.0) - log_gamma(j + 1.0) -
                    log_gamma(n - j + 1.0));
  }
  double r = 1.0;
  for (int s = 1; s <= j; ++s) r = r * (n - j + s) / s;
  return std::round(r);
}

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("log_gamma: argument must be positive, got " +
                            std::to_string(x));
  }
#if defined(__GLIBC__)
  int sign = 0;  // std::lgamma writes the global signgam on glibc
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

double gen_binomial(double y, double t) {
  if (!(y + 1.0 > 0.0) || !(t + 1.0 > 0.0) || !(y - t + 1.0 > 0.0)) {
    throw std::domain_error("gen_binomial: (" + std::to_string(y) + " choose " +
                            std::to_string(t) + ") outside the gamma domain");
  }
  return std::exp(log_gamma(y + 1.0) - log_gamma(t + 1.0) -
                  log_gamma(y - t + 1.0));
}

double beta_fn(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::domain_error("beta_fn: arguments must be positive");
  }
  // tgamma is accurate to a few ulps while exp(lgamma) loses about
  // eps*|lgamma| of relative accuracy; fall back to logs near overflow.
  if (a + b < kDirectBinomialLimit) {
    return std::tgamma(a) / std::tgamma(a + b) * std::tgamma(b);
  }
  return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

void HahnParams::validate() const {
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw std::domain_error("Hahn parameters require alpha > -1 and beta > -1");
  }
  if (N < 0) throw std::domain_error("Hahn parameter N must be nonnegative");
}

double hahn_eval(int n, double x, const HahnParams& p) {
  p.validate();
  require_degree(n, p.N, "hahn_eval");
  // term_{j+1} / term_j = (j-n)(n+a+b+1+j)(j-x) / ((j+1)(a+1+j)(j-N))
  using detail::Wide;
  const Wide s = Wide(n) + p.alpha + p.beta + 1;
  Wide term = 1;
  Wide sum = 1;
  for (int j = 0; j < n; ++j) {
    term *= Wide(j - n) * (s + j) * (Wide(j) - x) /
            (Wide(j + 1) * (Wide(p.alpha) + 1 + j) * Wide(j - p.N));
    sum += term;
  }
  return static_cast<double>(sum);
}

double hahn_recurrence_step(int n, double x, const HahnParams& p, double q_n,
                            double q_prev) {
  p.validate();
  if (n < 0 || n >= p.N) {
    throw std::domain_error("hahn_recurrence_step: need 0 <= n < N");
  }
  const double a = p.alpha;
  const double b = p.beta;
  double A = 0.0;
  double C = 0.0;
  if (n == 0) {
    // (a+b+1) cancels; keeps a+b = -1 well defined.
    A = (a + 1.0) * p.N / (a + b + 2.0);
  } else {
    A = (n + a + b + 1.0) * (n + a + 1.0) * (p.N - n) /
        ((2.0 * n + a + b + 1.0) * (2.0 * n + a + b + 2.0));
    C = n * (n + a + b + p.N + 1.0) * (n + b) /
        ((2.0 * n + a + b) * (2.0 * n + a + b + 1.0));
  }
  if (A == 0.0) {
    throw std::logic_error("hahn_recurrence_step: vanishing coefficient A_n");
  }
  return ((A + C - x) * q_n - C * q_prev) / A;
}

double dual_hahn_eval(int n, int x, const HahnParams& p) {
  p.validate();
  require_degree(n, p.N, "dual_hahn_eval");
  if (x < 0 || x > p.N) {
    throw std::domain_error("dual_hahn_eval: node " + std::to_string(x) +
                            " outside [0, N]");
  }
  using detail::Wide;
  const Wide s = Wide(x) + p.alpha + p.beta + 1;
  Wide term = 1;
  Wide sum = 1;
  for (int j = 0; j < n; ++j) {
    term *= Wide(j - n) * (s + j) * Wide(j - x) /
            (Wide(j + 1) * (Wide(p.alpha) + 1 + j) * Wide(j - p.N));
    sum += term;
  }
  return static_cast<double>(sum);
}

}  // namespace mjb
