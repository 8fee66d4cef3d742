#include "mjb/bases.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mjb/specialfn.hpp"
#include "wide.hpp"

namespace mjb {

namespace {

std::vector<double> de_casteljau(std::vector<double> b, int dim, double x) {
  const int n = static_cast<int>(b.size()) / dim - 1;
  const double s = 1.0 - x;
  for (int r = 1; r <= n; ++r) {
    for (int j = 0; j <= n - r; ++j) {
      for (int d = 0; d < dim; ++d) {
        b[j * dim + d] = s * b[j * dim + d] + x * b[(j + 1) * dim + d];
      }
    }
  }
  b.resize(static_cast<std::size_t>(dim));
  return b;
}

}  // namespace

double bernstein_basis(int n, int j, double x) {
  if (j < 0 || j > n) return 0.0;
  return binomial(n, j) * std::pow(x, j) * std::pow(1.0 - x, n - j);
}

std::vector<double> eval_bernstein(const BernsteinPoly& p, double x) {
  const int n = p.params.n;
  const int dim = p.coeffs.dimension();
  std::vector<double> full(static_cast<std::size_t>(n + 1) * dim, 0.0);
  for (int h = p.coeffs.first_index(); h <= p.coeffs.last_index(); ++h) {
    for (int d = 0; d < dim; ++d) full[h * dim + d] = p.coeffs(h, d);
  }
  return de_casteljau(std::move(full), dim, x);
}

std::vector<double> eval_curve(const BezierCurve& c, double x) {
  const auto v = c.coefficients().values();
  return de_casteljau({v.begin(), v.end()}, c.dimension(), x);
}

double eval_shifted_jacobi(int i, double alpha, double beta, double x) {
  // sum_j (-i)_j (i+a+b+1)_j / (j! (a+1)_j) (1-x)^j, scaled by (a+1)_i / i!
  using detail::Wide;
  const Wide y = Wide(1) - x;
  const Wide s = Wide(i) + alpha + beta + 1;
  Wide term = 1;
  Wide sum = 1;
  Wide lead = 1;  // (alpha+1)_i / i!
  for (int j = 0; j < i; ++j) {
    term *= Wide(j - i) * (s + j) * y / (Wide(j + 1) * (Wide(alpha) + 1 + j));
    sum += term;
    lead *= (Wide(alpha) + 1 + j) / Wide(j + 1);
  }
  return static_cast<double>(lead * sum);
}

double eval_mod_jacobi(int i, const TransformParams& p, double x) {
  if (i < p.first_jacobi() || i > p.last_jacobi()) {
    throw std::out_of_range("modified Jacobi index " + std::to_string(i) + " outside [" +
                            std::to_string(p.first_jacobi()) + ", " + std::to_string(p.n) +
                            "]");
  }
  return std::pow(1.0 - x, p.l) * std::pow(x, p.k) *
         eval_shifted_jacobi(i - p.k - p.l, p.alpha + 2 * p.l, p.beta + 2 * p.k, x);
}

IndexedMatrix bernstein_gram(const TransformParams& p) {
  p.validate();
  const int n = p.n;
  IndexedMatrix g(p.k, p.dim(), p.k, p.dim());
  for (int h = p.k; h <= n - p.l; ++h) {
    for (int hh = h; hh <= n - p.l; ++hh) {
      const double v = binomial(n, h) * binomial(n, hh) *
                       beta_fn(p.beta + h + hh + 1.0, 2.0 * n - h - hh + p.alpha + 1.0);
      g(h, hh) = v;
      g(hh, h) = v;
    }
  }
  return g;
}

double inner_product(const BernsteinPoly& f, const BernsteinPoly& g, const IndexedMatrix& gram) {
  if (!(f.params == g.params)) {
    throw std::invalid_argument("inner_product: operands have different parameters");
  }
  if (f.coeffs.dimension() != g.coeffs.dimension()) {
    throw std::invalid_argument("inner_product: operands have different dimensions");
  }
  double total = 0.0;
  for (int d = 0; d < f.coeffs.dimension(); ++d) {
    for (int h = f.coeffs.first_index(); h <= f.coeffs.last_index(); ++h) {
      double row = 0.0;
      for (int hh = g.coeffs.first_index(); hh <= g.coeffs.last_index(); ++hh) {
        row += gram(h, hh) * g.coeffs(hh, d);
      }
      total += f.coeffs(h, d) * row;
    }
  }
  return total;
}

double inner_product(const BernsteinPoly& f, const BernsteinPoly& g) {
  return inner_product(f, g, bernstein_gram(f.params));
}

}  // namespace mjb
