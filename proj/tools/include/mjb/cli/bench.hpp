#ifndef MJB_CLI_BENCH_HPP
#define MJB_CLI_BENCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mjb::cli {

enum class BenchMethod { thm1, thm2, thm3, thm4, oracle_c, oracle_d };

/// How (alpha, beta) is chosen for each repetition.
enum class ParamStrategy {
  fixed,       ///< the configured pair every time
  random_box,  ///< seeded uniform pairs in [-0.99, 1.01)^2
  grid,        ///< repetition j uses alpha = -0.9 + 0.1 (j mod 100), beta = 0.3 + 0.1 (j mod 100)
};

std::string_view to_string(BenchMethod m);
std::string_view to_string(ParamStrategy s);
std::optional<BenchMethod> parse_method(std::string_view s);
std::optional<ParamStrategy> parse_strategy(std::string_view s);

/// Recurrence methods paired with the oracle they are compared against.
BenchMethod oracle_for(BenchMethod m);

struct BenchConfig {
  std::vector<int> n_list;
  std::vector<BenchMethod> methods{BenchMethod::thm1, BenchMethod::thm2, BenchMethod::thm3,
                                   BenchMethod::thm4, BenchMethod::oracle_c, BenchMethod::oracle_d};
  int k = 1;
  int l = 1;
  double alpha = 0.0;  // fixed strategy only
  double beta = 0.0;
  ParamStrategy strategy = ParamStrategy::fixed;
  int repetitions = 100;
  int warmup = 3;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument on an empty n list, repetitions < 1, or
  /// any n that violates k + l <= n.
  void validate() const;
};

struct BenchRecord {
  BenchMethod method;
  int n;
  int k;
  int l;
  std::optional<double> alpha;  // empty unless the strategy is fixed
  std::optional<double> beta;
  ParamStrategy strategy;
  int repetitions;
  double total_seconds;
};

struct SlopeSummary {
  BenchMethod method;
  std::optional<double> slope;  // needs at least 5 distinct n
  int points;
};

struct BenchReport {
  std::vector<BenchRecord> records;

  std::vector<SlopeSummary> slopes() const;
  /// Records, then a blank line and the "method,slope,points" summary.
  std::string to_csv(bool include_timing = true) const;
};

/// Times the matrix build only; warm-up builds are discarded.
/// Always single-threaded.
BenchRecord time_method(BenchMethod m, int n, const BenchConfig& cfg);

BenchReport run_bench(const BenchConfig& cfg);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/// "5..15", "50,100,200" or a mix such as "5..8,20".
std::vector<int> parse_n_list(std::string_view text);

}  // namespace mjb::cli

#endif  // MJB_CLI_BENCH_HPP
