#include "mjb/cli/check.hpp"

#include <cmath>
#include <string>

#include <json.hpp>

#include "mjb/bases.hpp"
#include "mjb/bernstein_to_jacobi.hpp"
#include "mjb/jacobi_to_bernstein.hpp"

namespace mjb::cli {

namespace {

std::string at(const char* what, int r, int c) {
  return std::string(what) + "[" + std::to_string(r) + "][" + std::to_string(c) + "]";
}

void record(CheckResult& res, double deviation, double allowed, const std::string& where) {
  const double ratio = allowed > 0.0 ? deviation / allowed : (deviation > 0.0 ? INFINITY : 0.0);
  // Comparisons are negated so that NaN counts as worst and as a failure.
  if (res.worst_location.empty() || !(ratio <= res.worst_ratio)) {
    res.worst_ratio = ratio;
    res.worst_deviation = deviation;
    res.worst_location = where;
  }
  if (!(deviation <= allowed)) res.passed = false;
}

template <Layout L>
void compare(CheckResult& res, const ConnectionMatrix<L>& a, const ConnectionMatrix<L>& b,
             const Tolerance& tol, const std::string& label) {
  for (int r = a.row_first(); r <= a.row_last(); ++r) {
    for (int c = a.col_first(); c <= a.col_last(); ++c) {
      const double x = a(r, c), y = b(r, c);
      record(res, std::abs(x - y), tol.atol + tol.rtol * std::max(std::abs(x), std::abs(y)),
             at(label.c_str(), r, c));
    }
  }
}

}  // namespace

CheckBuilders CheckBuilders::defaults() {
  return {[](const TransformParams& p) { return c_theorem2(p); },
          [](const TransformParams& p) { return d_theorem4(p); }};
}

bool CheckReport::passed() const {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

const CheckResult* CheckReport::worst() const {
  const CheckResult* w = nullptr;
  for (const auto& r : results) {
    if (!w || !(r.worst_ratio <= w->worst_ratio)) w = &r;
  }
  return w;
}

std::string CheckReport::to_json() const {
  nlohmann::json j;
  j["params"] = {{"n", params.n}, {"k", params.k}, {"l", params.l},
                 {"alpha", params.alpha}, {"beta", params.beta}};
  j["passed"] = passed();
  j["checks"] = nlohmann::json::array();
  for (const auto& r : results) {
    j["checks"].push_back({{"name", r.name},
                           {"passed", r.passed},
                           {"worst_ratio", r.worst_ratio},
                           {"worst_deviation", r.worst_deviation},
                           {"worst_location", r.worst_location}});
  }
  return j.dump(2);
}

CheckReport run_checks(const TransformParams& p, const CheckTolerances& tol,
                       const CheckBuilders& builders) {
  p.validate();
  CheckReport report{p, {}};
  const CoeffMatrixC c = builders.c_primary(p);
  const CoeffMatrixD d = builders.d_primary(p);
  const int k = p.k, l = p.l, n = p.n;

  {
    CheckResult res;
    res.name = "cross_method_c";
    compare(res, c, c_theorem1(p), tol.mixed, "thm1 c");
    compare(res, c, c_theorem2(p), tol.mixed, "thm2 c");
    compare(res, c, c_direct(p), tol.mixed, "direct c");
    compare(res, c, c_oracle(p), tol.mixed, "oracle c");
    report.results.push_back(res);
  }
  {
    CheckResult res;
    res.name = "cross_method_d";
    compare(res, d, d_theorem3(p), tol.mixed, "thm3 d");
    compare(res, d, d_theorem4(p), tol.mixed, "thm4 d");
    compare(res, d, d_direct(p), tol.mixed, "direct d");
    compare(res, d, d_oracle(p), tol.mixed, "oracle d");
    report.results.push_back(res);
  }
  {
    CheckResult res;
    res.name = "round_trip";
    for (int h = k; h <= n - l; ++h) {
      for (int hh = k; hh <= n - l; ++hh) {
        double s = 0.0;
        for (int i = k + l; i <= n; ++i) s += d(h, i) * c(i, hh);
        record(res, std::abs(s - (h == hh ? 1.0 : 0.0)), tol.round_trip, at("DC", h, hh));
      }
    }
    for (int i = k + l; i <= n; ++i) {
      for (int ii = k + l; ii <= n; ++ii) {
        double s = 0.0;
        for (int h = k; h <= n - l; ++h) s += c(i, h) * d(h, ii);
        record(res, std::abs(s - (i == ii ? 1.0 : 0.0)), tol.round_trip, at("CD", i, ii));
      }
    }
    report.results.push_back(res);
  }
  {
    CheckResult res;
    res.name = "c_equals_u_d";
    for (const URoute route : {URoute::over_h, URoute::over_i}) {
      const UFactors u = u_factors(p, route);
      const char* label = route == URoute::over_h ? "u_over_h" : "u_over_i";
      for (int i = k + l; i <= n; ++i) {
        for (int h = k; h <= n - l; ++h) {
          const double ci = c(i, h);
          record(res, std::abs(ci - u(i, h) * d(h, i)), tol.mixed.atol + tol.mixed.rtol * std::abs(ci),
                 at(label, i, h));
        }
      }
    }
    report.results.push_back(res);
  }
  {
    CheckResult res;
    res.name = "orthogonality";
    const IndexedMatrix g = bernstein_gram(p);
    IndexedMatrix ip(k + l, p.dim(), k + l, p.dim());
    for (int i = k + l; i <= n; ++i) {
      for (int j = i; j <= n; ++j) {
        double s = 0.0;
        for (int h = k; h <= n - l; ++h) {
          for (int hh = k; hh <= n - l; ++hh) s += c(i, h) * g(h, hh) * c(j, hh);
        }
        ip(i, j) = ip(j, i) = s;
      }
    }
    for (int i = k + l; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        record(res, std::abs(ip(i, j)), tol.orthogonality * std::sqrt(std::abs(ip(i, i) * ip(j, j))),
               at("<J,J>", i, j));
      }
    }
    report.results.push_back(res);
  }
  return report;
}

}  // namespace mjb::cli
