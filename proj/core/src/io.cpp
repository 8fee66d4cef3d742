#include "mjb/io.hpp"

#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace mjb {

namespace {

using nlohmann::json;

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

template <class T>
T required(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw FormatError(std::string("field '") + key + "' has the wrong type");
  }
}

json points_to_json(const CoefficientArray& a) {
  json pts = json::array();
  for (int j = a.first_index(); j <= a.last_index(); ++j) {
    const auto p = a.point(j);
    pts.push_back(std::vector<double>(p.begin(), p.end()));
  }
  return pts;
}

void points_from_json(const json& doc, CoefficientArray& out) {
  const auto& pts = doc.at("control_points");
  if (!pts.is_array() || static_cast<int>(pts.size()) != out.count()) {
    throw FormatError("control_points must hold " + std::to_string(out.count()) + " entries");
  }
  for (int j = 0; j < out.count(); ++j) {
    const auto& row = pts[static_cast<std::size_t>(j)];
    if (!row.is_array() || static_cast<int>(row.size()) != out.dimension()) {
      throw FormatError("control point " + std::to_string(j) + " must have " +
                        std::to_string(out.dimension()) + " components");
    }
    for (int d = 0; d < out.dimension(); ++d) {
      const auto& v = row[static_cast<std::size_t>(d)];
      if (!v.is_number()) throw FormatError("control point components must be numbers");
      out(out.first_index() + j, d) = v.get<double>();
    }
  }
}

json curve_json(const BezierCurve& c) {
  return {{"degree", c.degree()},
          {"dimension", c.dimension()},
          {"control_points", points_to_json(c.coefficients())}};
}

}  // namespace

BezierCurve curve_from_json(std::string_view text) {
  const json doc = parse(text);
  const int degree = required<int>(doc, "degree");
  const int dim = required<int>(doc, "dimension");
  if (degree < 0) throw FormatError("degree must be nonnegative");
  if (dim < 1) throw FormatError("dimension must be at least 1");
  required<json>(doc, "control_points");
  BezierCurve c(degree, dim);
  CoefficientArray pts(0, degree + 1, dim);
  points_from_json(doc, pts);
  for (int j = 0; j <= degree; ++j) {
    for (int d = 0; d < dim; ++d) c(j, d) = pts(j, d);
  }
  return c;
}

std::string curve_to_json(const BezierCurve& c) { return curve_json(c).dump(2); }

BernsteinPoly bernstein_poly_from_json(std::string_view text) {
  const json doc = parse(text);
  TransformParams p{required<int>(doc, "degree"), required<int>(doc, "k"),
                    required<int>(doc, "l"), required<double>(doc, "alpha"),
                    required<double>(doc, "beta")};
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  const int dim = required<int>(doc, "dimension");
  if (dim < 1) throw FormatError("dimension must be at least 1");
  required<json>(doc, "control_points");
  BernsteinPoly out(p, dim);
  points_from_json(doc, out.coeffs);
  return out;
}

std::string bernstein_poly_to_json(const BernsteinPoly& p) {
  const json doc = {{"degree", p.params.n},
                    {"dimension", p.coeffs.dimension()},
                    {"k", p.params.k},
                    {"l", p.params.l},
                    {"alpha", p.params.alpha},
                    {"beta", p.params.beta},
                    {"control_points", points_to_json(p.coeffs)}};
  return doc.dump(2);
}

std::string reduction_result_to_json(const ReductionResult& r) {
  const auto& dp = r.discarded.params;
  const json discarded = {{"degree", dp.n},
                          {"dimension", r.discarded.coeffs.dimension()},
                          {"k", dp.k},
                          {"l", dp.l},
                          {"alpha", dp.alpha},
                          {"beta", dp.beta},
                          {"first_index", r.discarded.coeffs.first_index()},
                          {"coefficients", points_to_json(r.discarded.coeffs)}};
  const json doc = {{"reduced", curve_json(r.reduced)},
                    {"l2_error", r.l2_error},
                    {"discarded", discarded}};
  return doc.dump(2);
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

namespace {

std::string csv(const IndexedMatrix& m, const char* corner) {
  std::ostringstream os;
  os << corner;
  for (int c = m.col_first(); c <= m.col_last(); ++c) os << ',' << c;
  os << '\n';
  for (int r = m.row_first(); r <= m.row_last(); ++r) {
    os << r;
    for (int c = m.col_first(); c <= m.col_last(); ++c) os << ',' << format_double(m(r, c));
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string matrix_to_csv(const CoeffMatrixC& c) { return csv(c, "i\\h"); }
std::string matrix_to_csv(const CoeffMatrixD& d) { return csv(d, "h\\i"); }

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  std::random_device rd;
  const fs::path tmp =
      dir / ("." + path.filename().string() + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      out.close();
      fs::remove(tmp);
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot move output into " + path.string() + ": " + ec.message());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace mjb
