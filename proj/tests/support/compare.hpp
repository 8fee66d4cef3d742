#ifndef MJB_TESTS_COMPARE_HPP
#define MJB_TESTS_COMPARE_HPP

#include <algorithm>
#include <cmath>
#include <string>

#include "mjb/indexed_matrix.hpp"
#include "mjb/params.hpp"

namespace cmp {

/// Largest |a-b| / (atol + rtol*max(|a|,|b|)) over all entries; <= 1 passes.
inline double mixed_ratio(const mjb::IndexedMatrix& a, const mjb::IndexedMatrix& b,
                          const mjb::Tolerance& tol = {}) {
  double worst = 0.0;
  for (int r = a.row_first(); r <= a.row_last(); ++r) {
    for (int c = a.col_first(); c <= a.col_last(); ++c) {
      const double x = a(r, c), y = b(r, c);
      const double ratio = std::abs(x - y) / (tol.atol + tol.rtol * std::max(std::abs(x), std::abs(y)));
      if (!(ratio <= worst)) worst = ratio;
    }
  }
  return worst;
}

template <class M>
void fill(M& m, const double (&v)[3][3]) {
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) m(m.row_first() + r, m.col_first() + c) = v[r][c];
  }
}

inline std::string describe(const mjb::TransformParams& p) {
  return "n=" + std::to_string(p.n) + " k=" + std::to_string(p.k) + " l=" + std::to_string(p.l) +
         " alpha=" + std::to_string(p.alpha) + " beta=" + std::to_string(p.beta);
}

}  // namespace cmp

#endif  // MJB_TESTS_COMPARE_HPP
