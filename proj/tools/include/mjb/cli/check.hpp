#ifndef MJB_CLI_CHECK_HPP
#define MJB_CLI_CHECK_HPP

#include <functional>
#include <string>
#include <vector>

#include "mjb/indexed_matrix.hpp"
#include "mjb/params.hpp"

namespace mjb::cli {

struct CheckTolerances {
  Tolerance mixed;               ///< cross-method and u-factor comparisons
  double round_trip = 1e-8;      ///< max |D C - I| and |C D - I|
  double orthogonality = 1e-10;  ///< |<J_i,J_j>| relative to ||J_i|| ||J_j||
};

/// Matrix sources used by the check suite. The primary builders are the
/// ones under test; tests swap them to exercise the failure path.
struct CheckBuilders {
  std::function<CoeffMatrixC(const TransformParams&)> c_primary;
  std::function<CoeffMatrixD(const TransformParams&)> d_primary;

  static CheckBuilders defaults();
};

struct CheckResult {
  std::string name;
  bool passed = true;
  /// Largest deviation divided by its allowance; <= 1 means pass.
  double worst_ratio = 0.0;
  double worst_deviation = 0.0;
  std::string worst_location;
};

struct CheckReport {
  TransformParams params;
  std::vector<CheckResult> results;

  bool passed() const;
  const CheckResult* worst() const;
  std::string to_json() const;
};

/// Round trip, cross-method agreement, u-factor bridge and orthogonality.
CheckReport run_checks(const TransformParams& p, const CheckTolerances& tol = {},
                       const CheckBuilders& builders = CheckBuilders::defaults());

}  // namespace mjb::cli

#endif  // MJB_CLI_CHECK_HPP
