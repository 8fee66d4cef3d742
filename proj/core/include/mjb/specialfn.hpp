#ifndef MJB_SPECIALFN_HPP
#define MJB_SPECIALFN_HPP

namespace mjb {

/// Rising factorial (h)_i = h(h+1)...(h+i-1), with (h)_0 = 1.
///
/// Evaluated as a plain product; no gamma round-trip.
double pochhammer(double h, int i);

/// Integer binomial coefficient C(n, j); zero when j < 0 or j > n.
double binomial(int n, int j);

/// Natural logarithm of the gamma function for x > 0.
///
/// Throws std::domain_error for nonpositive x.
double log_gamma(double x);

/// Binomial coefficient generalized to real arguments through the gamma
/// function, Gamma(y+1) / (Gamma(t+1) Gamma(y-t+1)).
///
/// Only the domain y+1 > 0, t+1 > 0, y-t+1 > 0 is supported; anything else
/// throws std::domain_error.
double gen_binomial(double y, double t);

/// Beta function B(a, b) for a, b > 0.
double beta_fn(double a, double b);

/// Parameters of the Hahn family Q_n(x; alpha, beta, N).
struct HahnParams {
  double alpha = 0.0;
  double beta = 0.0;
  int N = 0;

  /// Throws std::domain_error unless alpha, beta > -1 and N >= 0.
  void validate() const;
};

/// Hahn polynomial Q_n(x; alpha, beta, N) by its terminating
/// hypergeometric sum (n+1 terms).
double hahn_eval(int n, double x, const HahnParams& p);

/// One step of the Hahn three-term recurrence in the degree:
/// returns Q_{n+1}(x) given q_n = Q_n(x) and q_prev = Q_{n-1}(x).
/// q_prev is ignored for n = 0.
double hahn_recurrence_step(int n, double x, const HahnParams& p, double q_n,
                            double q_prev);

/// Dual Hahn polynomial R_n(lambda(x); alpha, beta, N) at the integer node
/// x, lambda(x) = x(x + alpha + beta + 1).
double dual_hahn_eval(int n, int x, const HahnParams& p);

}  // namespace mjb

#endif  // MJB_SPECIALFN_HPP
