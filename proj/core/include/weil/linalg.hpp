#ifndef WEIL_LINALG_HPP
#define WEIL_LINALG_HPP

#include <optional>
#include <vector>

#include "weil/rational.hpp"

namespace weil {

using Vec = std::vector<Rat>;

/// Dense rational matrix, row-major.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[i * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[i * cols_ + j]; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  static Mat identity(int n);

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_apply(const Mat& a, const Vec& x);

/// In-place reduced row echelon form. Pivot choice within a column prefers
/// entries with the smallest numerator/denominator bit size; that is a
/// performance heuristic, exactness does not depend on it. Returns the rank
/// and records the pivot column of each pivot row.
int rref(Mat& m, std::vector<int>& pivot_cols);

int rank(Mat m);

/// Basis of the right kernel {x : m x = 0}, one vector per free column, in
/// ascending free-column order with a unit in the free coordinate.
std::vector<Vec> kernel_basis(Mat m);

/// Solver for A x = b where A has full column rank: picks a square row
/// subsystem once, inverts it, and checks candidate solutions against the
/// remaining rows so inconsistent right-hand sides are detected exactly.
class LinearSolver {
 public:
  explicit LinearSolver(Mat a);
  int rank() const { return static_cast<int>(pivot_rows_.size()); }
  std::optional<Vec> solve(const Vec& b) const;

 private:
  Mat a_;
  std::vector<int> pivot_rows_;
  Mat inverse_;  // inverse of the pivot-row square submatrix
};

}  // namespace weil

#endif
