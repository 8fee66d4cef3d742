#ifndef MJB_INDEXED_MATRIX_HPP
#define MJB_INDEXED_MATRIX_HPP

#include <atomic>
#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

#include "mjb/params.hpp"

namespace mjb {

/// Dense row-major matrix whose rows and columns are addressed by the
/// mathematical index ranges [row_first, row_first+rows) and
/// [col_first, col_first+cols). Storage offsets never leave this class.
class IndexedMatrix {
 public:
  IndexedMatrix() = default;
  IndexedMatrix(int row_first, int rows, int col_first, int cols)
      : row_first_(row_first), rows_(rows), col_first_(col_first), cols_(cols),
        values_(static_cast<std::size_t>(rows) * cols, 0.0) {}

  int row_first() const { return row_first_; }
  int row_last() const { return row_first_ + rows_ - 1; }
  int col_first() const { return col_first_; }
  int col_last() const { return col_first_ + cols_ - 1; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int r, int c) { return values_[offset(r, c)]; }
  double operator()(int r, int c) const { return values_[offset(r, c)]; }

  /// Row-major storage.
  const std::vector<double>& values() const { return values_; }

  std::span<const double> row(int r) const {
    return {values_.data() + offset(r, col_first_), static_cast<std::size_t>(cols_)};
  }

 private:
  std::size_t offset(int r, int c) const {
    assert(r >= row_first_ && r < row_first_ + rows_);
    assert(c >= col_first_ && c < col_first_ + cols_);
    return static_cast<std::size_t>(r - row_first_) * cols_ + (c - col_first_);
  }

  int row_first_ = 0;
  int rows_ = 0;
  int col_first_ = 0;
  int cols_ = 0;
  std::vector<double> values_;
};

enum class Layout {
  jacobi_rows,     ///< entry (i, h): rows i = k+l..n, columns h = k..n-l
  bernstein_rows,  ///< entry (h, i): rows h = k..n-l, columns i = k+l..n
};

/// Connection-coefficient matrix tied to the parameters it was built for.
template <Layout L>
class ConnectionMatrix : public IndexedMatrix {
 public:
  explicit ConnectionMatrix(const TransformParams& p)
      : IndexedMatrix(L == Layout::jacobi_rows ? p.first_jacobi() : p.first_bernstein(),
                      p.dim(),
                      L == Layout::jacobi_rows ? p.first_bernstein() : p.first_jacobi(),
                      p.dim()),
        params_(p) {}

  const TransformParams& params() const { return params_; }

 private:
  TransformParams params_;
};

/// c[i][h]: J_i = sum_h c[i][h] B_h^n.
using CoeffMatrixC = ConnectionMatrix<Layout::jacobi_rows>;
/// d[h][i]: B_h^n = sum_i d[h][i] J_i.
using CoeffMatrixD = ConnectionMatrix<Layout::bernstein_rows>;
/// u[i][h] with c[i][h] = u[i][h] d[h][i].
using UFactors = ConnectionMatrix<Layout::jacobi_rows>;

/// Counters filled in by the matrix builders.
struct BuildStats {
  std::atomic<std::uint64_t> recurrence_steps{0};
  std::atomic<std::uint64_t> seed_entries{0};
};

struct BuildOptions {
  /// Compute independent recurrence lanes on several threads.
  bool parallel = false;
  BuildStats* stats = nullptr;
};

}  // namespace mjb

#endif  // MJB_INDEXED_MATRIX_HPP
