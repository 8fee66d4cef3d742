#include "mjb/cli/bench.hpp"

#include <algorithm>
#include <chrono>
#include <charconv>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mjb/bernstein_to_jacobi.hpp"
#include "mjb/io.hpp"
#include "mjb/jacobi_to_bernstein.hpp"

namespace mjb::cli {

namespace {

constexpr std::pair<BenchMethod, std::string_view> kMethodNames[] = {
    {BenchMethod::thm1, "thm1"},         {BenchMethod::thm2, "thm2"},
    {BenchMethod::thm3, "thm3"},         {BenchMethod::thm4, "thm4"},
    {BenchMethod::oracle_c, "oracle_c"}, {BenchMethod::oracle_d, "oracle_d"},
};

constexpr std::pair<ParamStrategy, std::string_view> kStrategyNames[] = {
    {ParamStrategy::fixed, "fixed"},
    {ParamStrategy::random_box, "random_box"},
    {ParamStrategy::grid, "grid"},
};

// Builds one matrix and returns a value derived from it so the call cannot
// be optimized away.
double build(BenchMethod m, const TransformParams& p) {
  switch (m) {
    case BenchMethod::thm1: return c_theorem1(p)(p.n, p.k);
    case BenchMethod::thm2: return c_theorem2(p)(p.n, p.k);
    case BenchMethod::thm3: return d_theorem3(p)(p.k, p.n);
    case BenchMethod::thm4: return d_theorem4(p)(p.k, p.n);
    case BenchMethod::oracle_c: return c_oracle(p)(p.n, p.k);
    case BenchMethod::oracle_d: return d_oracle(p)(p.k, p.n);
  }
  throw std::logic_error("unknown bench method");
}

int parse_int(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad integer in n list: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::string_view to_string(BenchMethod m) {
  for (const auto& [k, v] : kMethodNames) {
    if (k == m) return v;
  }
  return "?";
}

std::string_view to_string(ParamStrategy s) {
  for (const auto& [k, v] : kStrategyNames) {
    if (k == s) return v;
  }
  return "?";
}

std::optional<BenchMethod> parse_method(std::string_view s) {
  for (const auto& [k, v] : kMethodNames) {
    if (v == s) return k;
  }
  return std::nullopt;
}

std::optional<ParamStrategy> parse_strategy(std::string_view s) {
  for (const auto& [k, v] : kStrategyNames) {
    if (v == s) return k;
  }
  return std::nullopt;
}

BenchMethod oracle_for(BenchMethod m) {
  switch (m) {
    case BenchMethod::thm1:
    case BenchMethod::thm2:
    case BenchMethod::oracle_c: return BenchMethod::oracle_c;
    default: return BenchMethod::oracle_d;
  }
}

void BenchConfig::validate() const {
  if (n_list.empty()) throw std::invalid_argument("n list must not be empty");
  if (methods.empty()) throw std::invalid_argument("method list must not be empty");
  if (repetitions < 1) throw std::invalid_argument("repetitions >= 1 violated");
  if (warmup < 0) throw std::invalid_argument("warm-up count must be nonnegative");
  for (const int n : n_list) TransformParams{n, k, l, alpha, beta}.validate();
}

BenchRecord time_method(BenchMethod m, int n, const BenchConfig& cfg) {
  // Every (method, n) record replays the same parameter sequence.
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> box(-0.99, 1.01);
  int grid_step = 0;
  auto next_params = [&] {
    TransformParams p{n, cfg.k, cfg.l, cfg.alpha, cfg.beta};
    if (cfg.strategy == ParamStrategy::random_box) {
      p.alpha = box(rng);
      p.beta = box(rng);
    } else if (cfg.strategy == ParamStrategy::grid) {
      const int j = grid_step++ % 100;
      p.alpha = -0.9 + 0.1 * j;
      p.beta = 0.3 + 0.1 * j;
    }
    return p;
  };

  volatile double sink = 0.0;
  for (int w = 0; w < cfg.warmup; ++w) sink = sink + build(m, {n, cfg.k, cfg.l, cfg.alpha, cfg.beta});

  using clock = std::chrono::steady_clock;
  clock::duration total{};
  for (int r = 0; r < cfg.repetitions; ++r) {
    const TransformParams p = next_params();
    const auto t0 = clock::now();
    sink = sink + build(m, p);
    total += clock::now() - t0;
  }

  BenchRecord rec{m, n, cfg.k, cfg.l, std::nullopt, std::nullopt, cfg.strategy, cfg.repetitions,
                  std::chrono::duration<double>(total).count()};
  if (cfg.strategy == ParamStrategy::fixed) {
    rec.alpha = cfg.alpha;
    rec.beta = cfg.beta;
  }
  // A build finishing below the clock resolution must still report a
  // positive total.
  rec.total_seconds = std::max(rec.total_seconds, 1e-9);
  return rec;
}

BenchReport run_bench(const BenchConfig& cfg) {
  cfg.validate();
  BenchReport report;
  for (const BenchMethod m : cfg.methods) {
    for (const int n : cfg.n_list) report.records.push_back(time_method(m, n, cfg));
  }
  return report;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("loglog_slope needs two or more matching points");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double cnt = static_cast<double>(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double lx = std::log(x[j]);
    const double ly = std::log(y[j]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double den = cnt * sxx - sx * sx;
  if (den == 0.0) throw std::invalid_argument("loglog_slope needs distinct x values");
  return (cnt * sxy - sx * sy) / den;
}

std::vector<SlopeSummary> BenchReport::slopes() const {
  std::vector<SlopeSummary> out;
  std::vector<BenchMethod> order;
  std::map<BenchMethod, std::map<int, std::pair<double, int>>> per;  // n -> (seconds/rep sum, count)
  for (const auto& r : records) {
    if (!per.contains(r.method)) order.push_back(r.method);
    auto& slot = per[r.method][r.n];
    slot.first += r.total_seconds / r.repetitions;
    slot.second += 1;
  }
  for (const BenchMethod m : order) {
    std::vector<double> xs, ys;
    for (const auto& [n, acc] : per[m]) {
      xs.push_back(n);
      ys.push_back(acc.first / acc.second);
    }
    SlopeSummary s{m, std::nullopt, static_cast<int>(xs.size())};
    if (xs.size() >= 5) s.slope = loglog_slope(xs, ys);
    out.push_back(s);
  }
  return out;
}

std::string BenchReport::to_csv(bool include_timing) const {
  std::ostringstream os;
  os << "method,n,k,l,alpha,beta,strategy,repetitions,total_seconds\n";
  for (const auto& r : records) {
    os << to_string(r.method) << ',' << r.n << ',' << r.k << ',' << r.l << ','
       << (r.alpha ? format_double(*r.alpha) : "") << ','
       << (r.beta ? format_double(*r.beta) : "") << ',' << to_string(r.strategy) << ','
       << r.repetitions << ',' << (include_timing ? format_double(r.total_seconds) : "") << '\n';
  }
  os << "\nmethod,slope,points\n";
  for (const auto& s : slopes()) {
    os << to_string(s.method) << ','
       << (s.slope && include_timing ? format_double(*s.slope) : "") << ',' << s.points << '\n';
  }
  return os.str();
}

std::vector<int> parse_n_list(std::string_view text) {
  std::vector<int> out;
  std::set<int> seen;
  auto add = [&](int n) {
    if (seen.insert(n).second) out.push_back(n);
  };
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) throw std::invalid_argument("empty entry in n list");
    const auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      add(parse_int(item));
    } else {
      const int lo = parse_int(item.substr(0, dots));
      const int hi = parse_int(item.substr(dots + 2));
      if (hi < lo) throw std::invalid_argument("descending range in n list: " + std::string(item));
      for (int n = lo; n <= hi; ++n) add(n);
    }
  }
  if (out.empty()) throw std::invalid_argument("n list must not be empty");
  return out;
}

}  // namespace mjb::cli
