#include "mjb/cli/app.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "mjb/bernstein_to_jacobi.hpp"
#include "mjb/cli/bench.hpp"
#include "mjb/degree_reduction.hpp"
#include "mjb/io.hpp"
#include "mjb/jacobi_to_bernstein.hpp"

namespace mjb::cli {

namespace {

void add_params(CLI::App* sub, TransformParams& p, bool n_required) {
  auto* n = sub->add_option("-n", p.n, "degree");
  if (n_required) n->required();
  sub->add_option("-k", p.k, "constraint order at 0");
  sub->add_option("-l", p.l, "constraint order at 1");
  sub->add_option("--alpha", p.alpha, "weight exponent of (1-x)");
  sub->add_option("--beta", p.beta, "weight exponent of x");
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
  } else {
    write_file_atomic(out_path, text);
  }
}

std::string build_matrix_csv(const std::string& direction, std::string method,
                             const TransformParams& p, bool parallel) {
  const BuildOptions opts{parallel, nullptr};
  if (direction == "c") {
    if (method.empty()) method = "thm2";
    if (method == "thm1") return matrix_to_csv(c_theorem1(p, opts));
    if (method == "thm2") return matrix_to_csv(c_theorem2(p, opts));
    if (method == "direct") return matrix_to_csv(c_direct(p));
    if (method == "oracle") return matrix_to_csv(c_oracle(p));
    throw std::invalid_argument("method '" + method + "' does not build c (use thm1, thm2, direct, oracle)");
  }
  if (method.empty()) method = "thm4";
  if (method == "thm3") return matrix_to_csv(d_theorem3(p, opts));
  if (method == "thm4") return matrix_to_csv(d_theorem4(p, opts));
  if (method == "direct") return matrix_to_csv(d_direct(p));
  if (method == "oracle") return matrix_to_csv(d_oracle(p));
  throw std::invalid_argument("method '" + method + "' does not build d (use thm3, thm4, direct, oracle)");
}

std::vector<BenchMethod> parse_methods(const std::string& text) {
  std::vector<BenchMethod> out;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto m = parse_method(item);
    if (!m) throw std::invalid_argument("unknown bench method '" + std::string(item) + "'");
    out.push_back(*m);
  }
  if (out.empty()) throw std::invalid_argument("method list must not be empty");
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const CheckBuilders& builders) {
  CLI::App app{"Bernstein / modified Jacobi connection coefficients and constrained degree reduction",
               "mjb"};
  app.require_subcommand(1);

  // matrix
  auto* matrix = app.add_subcommand("matrix", "write a connection-coefficient matrix as CSV");
  std::string direction, matrix_method, matrix_out;
  TransformParams mp{};
  bool parallel = false;
  matrix->add_option("direction", direction, "c (Jacobi to Bernstein) or d (Bernstein to Jacobi)")
      ->required()
      ->check(CLI::IsMember({"c", "d"}));
  matrix->add_option("--method", matrix_method, "thm1|thm2|direct|oracle for c, thm3|thm4|direct|oracle for d");
  add_params(matrix, mp, true);
  matrix->add_option("--out", matrix_out, "output path (default: standard output)");
  matrix->add_flag("--parallel", parallel, "compute recurrence lanes on several threads");

  // reduce
  auto* reduce_cmd = app.add_subcommand("reduce", "constrained L2 degree reduction of a curve");
  std::string in_path, reduce_out;
  int target = 0, rk = 0, rl = 0;
  double ralpha = 0.0, rbeta = 0.0;
  reduce_cmd->add_option("--in", in_path, "curve JSON")->required();
  reduce_cmd->add_option("-m,--target-degree", target, "target degree")->required();
  reduce_cmd->add_option("-k", rk, "constraint order at 0");
  reduce_cmd->add_option("-l", rl, "constraint order at 1");
  reduce_cmd->add_option("--alpha", ralpha, "weight exponent of (1-t)");
  reduce_cmd->add_option("--beta", rbeta, "weight exponent of t");
  reduce_cmd->add_option("--out", reduce_out, "result JSON path");

  // bench
  auto* bench = app.add_subcommand("bench", "time the matrix builders and write a CSV report");
  BenchConfig bc;
  std::string n_list = "5..15", strategy = "fixed", methods, bench_out;
  bench->add_option("--n-list", n_list, "degrees, e.g. 5..15 or 50,100,200")->capture_default_str();
  bench->add_option("--strategy", strategy, "fixed|random_box|grid")
      ->check(CLI::IsMember({"fixed", "random_box", "grid"}))
      ->capture_default_str();
  bench->add_option("--reps", bc.repetitions, "timed repetitions per (method, n)")->capture_default_str();
  bench->add_option("--method", methods, "comma-separated subset of thm1,thm2,thm3,thm4,oracle_c,oracle_d");
  bench->add_option("-k", bc.k)->capture_default_str();
  bench->add_option("-l", bc.l)->capture_default_str();
  bench->add_option("--alpha", bc.alpha, "alpha for the fixed strategy");
  bench->add_option("--beta", bc.beta, "beta for the fixed strategy");
  bench->add_option("--seed", bc.seed, "seed for random_box")->capture_default_str();
  bench->add_option("--out", bench_out, "CSV path (default: standard output)");

  // check
  auto* check = app.add_subcommand("check", "run the invariant suite for one parameter set");
  TransformParams cp{};
  CheckTolerances tol;
  add_params(check, cp, true);
  check->add_option("--tolerance", tol.mixed.rtol, "relative tolerance of entrywise comparisons")
      ->capture_default_str();
  check->add_option("--atol", tol.mixed.atol, "absolute tolerance of entrywise comparisons")
      ->capture_default_str();
  check->add_option("--round-trip-tolerance", tol.round_trip)->capture_default_str();
  check->add_option("--orthogonality-tolerance", tol.orthogonality)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (*matrix) {
      mp.validate();
      emit(build_matrix_csv(direction, matrix_method, mp, parallel), matrix_out, out);
      return ok;
    }
    if (*reduce_cmd) {
      ReductionProblem prob{curve_from_json(read_file(in_path)), target, rk, rl, ralpha, rbeta};
      prob.validate();
      const ReductionResult res = reduce(prob);
      if (!reduce_out.empty()) write_file_atomic(reduce_out, reduction_result_to_json(res));
      out << format_double(res.l2_error) << '\n';
      return ok;
    }
    if (*bench) {
      bc.n_list = parse_n_list(n_list);
      bc.strategy = *parse_strategy(strategy);
      if (!methods.empty()) bc.methods = parse_methods(methods);
      bc.validate();
      emit(run_bench(bc).to_csv(), bench_out, out);
      return ok;
    }
    if (*check) {
      cp.validate();
      const CheckReport report = run_checks(cp, tol, builders);
      out << report.to_json() << '\n';
      if (report.passed()) return ok;
      for (const auto& r : report.results) {
        if (r.passed) continue;
        err << "check failed: " << r.name << " worst at " << r.worst_location << ", deviation "
            << format_double(r.worst_deviation) << " (" << format_double(r.worst_ratio)
            << " x allowed)\n";
      }
      return check_failed;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
  return usage_error;
}

}  // namespace mjb::cli
