#ifndef MJB_IO_HPP
#define MJB_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mjb/coefficients.hpp"
#include "mjb/degree_reduction.hpp"
#include "mjb/indexed_matrix.hpp"

namespace mjb {

/// Malformed or inconsistent input document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Curve JSON:
//   {"degree": n, "dimension": d, "control_points": [[...d numbers], ... n+1 entries]}
// Constrained coefficients add "k", "l", "alpha", "beta"; control_points then
// holds the n-k-l+1 coefficients for h = k..n-l.

BezierCurve curve_from_json(std::string_view text);
std::string curve_to_json(const BezierCurve& c);

BernsteinPoly bernstein_poly_from_json(std::string_view text);
std::string bernstein_poly_to_json(const BernsteinPoly& p);

/// {"reduced": <curve>, "l2_error": x, "discarded": {..., "first_index": m+1,
///  "coefficients": [[...], ...]}}
std::string reduction_result_to_json(const ReductionResult& r);

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

/// Header "i\h" (or "h\i") then column labels; one labelled row per index.
std::string matrix_to_csv(const CoeffMatrixC& c);
std::string matrix_to_csv(const CoeffMatrixD& d);

/// Writes through a temporary file in the same directory and renames it
/// into place, so `path` never holds partial output.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);

}  // namespace mjb

#endif  // MJB_IO_HPP
