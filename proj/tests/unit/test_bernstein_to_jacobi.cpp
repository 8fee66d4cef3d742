#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>

#include "compare.hpp"
#include "generators.hpp"
#include "mjb/bases.hpp"
#include "mjb/bernstein_to_jacobi.hpp"
#include "mjb/degree_reduction.hpp"
#include "mjb/jacobi_to_bernstein.hpp"
#include "mjb/specialfn.hpp"
#include "reference_values.hpp"

using namespace mjb;

namespace {

using Builder = std::function<CoeffMatrixD(const TransformParams&)>;

const std::pair<const char*, Builder> kRoutes[] = {
    {"direct", [](const TransformParams& p) { return d_direct(p); }},
    {"theorem3", [](const TransformParams& p) { return d_theorem3(p); }},
    {"theorem4", [](const TransformParams& p) { return d_theorem4(p); }},
    {"oracle", [](const TransformParams& p) { return d_oracle(p); }},
};

double round_trip_dc(const CoeffMatrixD& d, const CoeffMatrixC& c) {
  const auto& p = d.params();
  double worst = 0.0;
  for (int h = p.k; h <= p.n - p.l; ++h) {
    for (int hh = p.k; hh <= p.n - p.l; ++hh) {
      double s = 0.0;
      for (int i = p.k + p.l; i <= p.n; ++i) s += d(h, i) * c(i, hh);
      worst = std::max(worst, std::abs(s - (h == hh ? 1.0 : 0.0)));
    }
  }
  return worst;
}

double round_trip_cd(const CoeffMatrixC& c, const CoeffMatrixD& d) {
  const auto& p = d.params();
  double worst = 0.0;
  for (int i = p.k + p.l; i <= p.n; ++i) {
    for (int ii = p.k + p.l; ii <= p.n; ++ii) {
      double s = 0.0;
      for (int h = p.k; h <= p.n - p.l; ++h) s += c(i, h) * d(h, ii);
      worst = std::max(worst, std::abs(s - (i == ii ? 1.0 : 0.0)));
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("all routes: small closed-form cases") {
  for (const auto& [name, build] : kRoutes) {
    CAPTURE(name);
    const auto d11 = build({2, 1, 1, -0.3, 2.0});
    REQUIRE(d11.rows() == 1);
    CHECK(d11(1, 2) == doctest::Approx(2.0));

    const auto d1 = build({1, 0, 0, 0, 0});
    CHECK(d1(0, 0) == doctest::Approx(0.5));
    CHECK(d1(0, 1) == doctest::Approx(-0.5));

    const TransformParams half{4, 1, 1, 0.5, -0.5};
    CoeffMatrixD expect(half);
    cmp::fill(expect, ref::d_4_1_1_half);
    CHECK(cmp::mixed_ratio(build(half), expect) <= 1.0);
  }
  const TransformParams p3{3, 0, 0, 0, 0};
  const auto d3 = d_theorem3(p3), dd = d_direct(p3);
  for (int i = 0; i <= 3; ++i) CHECK(Tolerance{}.close(d3(1, i), dd(1, i)));
}

TEST_CASE("d_direct equals the inverse of C from a pivoted dense solve") {
  const TransformParams p{4, 1, 1, 0.5, -0.5};
  const auto c = c_oracle(p);
  Eigen::Matrix3d cm;
  for (int r = 0; r < 3; ++r) {
    for (int s = 0; s < 3; ++s) cm(r, s) = c(p.k + p.l + r, p.k + s);
  }
  // B_h = sum_i d[h][i] J_i and J_i = sum_h c[i][h] B_h give D C = I.
  const Eigen::Matrix3d dm = cm.partialPivLu().inverse();
  const auto d = d_direct(p);
  for (int h = 0; h < 3; ++h) {
    for (int i = 0; i < 3; ++i) CHECK(Tolerance{}.close(d(p.k + h, p.k + p.l + i), dm(h, i)));
  }
}

TEST_CASE("seed entries") {
  // w seeds are 1, so the seed rows reduce to z.
  const TransformParams p{5, 1, 2, 0.25, 1.5};
  const auto d = d_theorem4(p);
  const auto dd = d_direct(p);
  for (int i = p.k + p.l; i <= p.n; ++i) CHECK(Tolerance{}.close(d(p.k, i), dd(p.k, i)));
  const auto d3 = d_theorem3(p);
  for (int h = p.k; h <= p.n - p.l; ++h) CHECK(Tolerance{}.close(d3(h, p.k + p.l), dd(h, p.k + p.l)));
}

TEST_CASE("degenerate space n = k + l gives [C(n,k)]") {
  for (const auto& [name, build] : kRoutes) {
    CAPTURE(name);
    for (const TransformParams p : {TransformParams{0, 0, 0, 0, 0}, TransformParams{3, 2, 1, -0.9, 3.7},
                                    TransformParams{4, 2, 2, 0.5, 0.5}}) {
      const auto d = build(p);
      REQUIRE(d.rows() == 1);
      CHECK(d(p.k, p.k + p.l) == doctest::Approx(binomial(p.n, p.k)));
    }
  }
}

TEST_CASE("u factors") {
  for (const URoute r : {URoute::over_h, URoute::over_i}) {
    CHECK(u_factors({2, 1, 1, 0, 0}, r)(2, 1) == doctest::Approx(0.25));
    const TransformParams p{4, 1, 1, 0, 0};
    const auto u = u_factors(p, r);
    const auto c = c_theorem2(p);
    const auto d = d_theorem4(p);
    for (int i = 2; i <= 4; ++i) {
      for (int h = 1; h <= 3; ++h) {
        CHECK(std::abs(c(i, h) - u(i, h) * d(h, i)) <= 1e-12 + 1e-9 * std::abs(c(i, h)));
      }
    }
  }
}

TEST_CASE("property: both u routes share the corner seed") {
  gen::Source src(51);
  for (int t = 0; t < 100; ++t) {
    const TransformParams p = src.params(0, 20);
    CAPTURE(cmp::describe(p));
    const double a = u_factors(p, URoute::over_h)(p.k + p.l, p.k);
    const double b = u_factors(p, URoute::over_i)(p.k + p.l, p.k);
    CHECK(Tolerance{}.close(a, b));
  }
}

TEST_CASE("property: recurrence routes agree with the Hahn-sum route (n <= 20, full grid)") {
  gen::for_each_grid_params(20, gen::kWideExponents, [](const TransformParams& p) {
    CAPTURE(cmp::describe(p));
    const auto d3 = d_theorem3(p), d4 = d_theorem4(p), dd = d_direct(p);
    CHECK(cmp::mixed_ratio(d3, d4) <= 1.0);
    CHECK(cmp::mixed_ratio(d3, dd) <= 1.0);
    CHECK(cmp::mixed_ratio(d4, dd) <= 1.0);
  });
}

// The gamma-function oracle joins the agreement up to n = 10; past that its
// cancelling sum drifts (acceptance suite).
TEST_CASE("property: the literature formula agrees (n <= 10, full grid)") {
  gen::for_each_grid_params(10, gen::kWideExponents, [](const TransformParams& p) {
    CAPTURE(cmp::describe(p));
    CHECK(cmp::mixed_ratio(d_oracle(p), d_direct(p)) <= 1.0);
  });
}

TEST_CASE("property: round trips through both bases") {
  gen::for_each_grid_params(20, gen::kWideExponents, [](const TransformParams& p) {
    CAPTURE(cmp::describe(p));
    const auto c = c_theorem2(p);
    const auto d = d_theorem4(p);
    CHECK(round_trip_dc(d, c) <= 1e-8);
    if (p.n <= 12) CHECK(round_trip_cd(c, d) <= 1e-8);
  });
}

TEST_CASE("property: c = u d on the full grid (n <= 8)") {
  gen::for_each_grid_params(8, gen::kWideExponents, [](const TransformParams& p) {
    CAPTURE(cmp::describe(p));
    const auto c = c_theorem2(p);
    const auto d = d_theorem4(p);
    for (const URoute r : {URoute::over_h, URoute::over_i}) {
      const auto u = u_factors(p, r);
      for (int i = p.k + p.l; i <= p.n; ++i) {
        for (int h = p.k; h <= p.n - p.l; ++h) {
          CHECK(std::abs(c(i, h) - u(i, h) * d(h, i)) <= 1e-12 + 1e-9 * std::abs(c(i, h)));
        }
      }
    }
  });
}

TEST_CASE("property: rows reproduce the Bernstein polynomials pointwise") {
  gen::Source src(52);
  for (int t = 0; t < 80; ++t) {
    const TransformParams p = src.params(0, 12);
    CAPTURE(cmp::describe(p));
    const auto d = d_theorem4(p);
    for (int s = 0; s < 20; ++s) {
      const double x = src.real(0.0, 1.0);
      for (int h = p.k; h <= p.n - p.l; ++h) {
        double sum = 0.0;
        for (int i = p.k + p.l; i <= p.n; ++i) sum += d(h, i) * eval_mod_jacobi(i, p, x);
        CHECK(std::abs(bernstein_basis(p.n, h, x) - sum) <= 1e-9 * (1.0 + binomial(p.n, h)));
      }
    }
  }
}

TEST_CASE("property: d holds orthogonal-expansion coefficients") {
  gen::Source src(53);
  for (int t = 0; t < 60; ++t) {
    const TransformParams p = src.params(0, 8);
    CAPTURE(cmp::describe(p));
    const auto c = c_direct(p);
    const auto d = d_theorem4(p);
    const auto g = bernstein_gram(p);
    const auto norms = mod_jacobi_norms_squared(p);
    for (int h = p.k; h <= p.n - p.l; ++h) {
      for (int i = p.k + p.l; i <= p.n; ++i) {
        double bj = 0.0;  // <B_h, J_i>
        for (int hh = p.k; hh <= p.n - p.l; ++hh) bj += g(h, hh) * c(i, hh);
        CHECK(Tolerance{}.close(d(h, i) * norms[i - p.k - p.l], bj));
      }
    }
  }
}

TEST_CASE("property: parallel lanes give bit-identical matrices") {
  gen::Source src(54);
  for (int t = 0; t < 20; ++t) {
    const TransformParams p = src.params(0, 25);
    const BuildOptions par{true, nullptr};
    CHECK(d_theorem3(p, par).values() == d_theorem3(p).values());
    CHECK(d_theorem4(p, par).values() == d_theorem4(p).values());
  }
}

TEST_CASE("d_theorem4 performs Theta(n^2) recurrence steps") {
  std::vector<double> steps;
  for (const int n : {20, 40, 80, 160}) {
    BuildStats stats;
    d_theorem4({n, 2, 0, -0.5, 0.5}, {false, &stats});
    steps.push_back(static_cast<double>(stats.recurrence_steps.load()));
  }
  for (std::size_t j = 1; j < steps.size(); ++j) {
    CHECK(steps[j] / steps[j - 1] == doctest::Approx(4.0).epsilon(0.1));
  }
}

TEST_CASE("to_mod_jacobi inverts to_bernstein") {
  gen::Source src(55);
  for (int t = 0; t < 30; ++t) {
    const TransformParams p = src.params(0, 10);
    ModJacobiCoeffs a(p, 3);
    for (int i = p.k + p.l; i <= p.n; ++i) {
      for (int comp = 0; comp < 3; ++comp) a.coeffs(i, comp) = src.real(-1, 1);
    }
    const auto back = to_mod_jacobi(to_bernstein(a, c_theorem2(p)), d_theorem4(p));
    for (int i = p.k + p.l; i <= p.n; ++i) {
      for (int comp = 0; comp < 3; ++comp) CHECK(std::abs(back.coeffs(i, comp) - a.coeffs(i, comp)) <= 1e-9);
    }
  }
  CHECK_THROWS_AS(to_mod_jacobi(BernsteinPoly({3, 0, 0, 0, 0}, 1), d_theorem4({3, 0, 1, 0, 0})),
                  std::invalid_argument);
}
