#include "weil/linalg.hpp"

#include <stdexcept>

namespace weil {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul shape mismatch");
  Mat r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rat& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const Rat& bkj = b.at(k, j);
        if (bkj != 0) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

Vec mat_apply(const Mat& a, const Vec& x) {
  if (a.cols() != static_cast<int>(x.size()))
    throw std::invalid_argument("mat_apply shape mismatch");
  Vec r(a.rows(), Rat(0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != 0 && x[j] != 0) r[i] += a.at(i, j) * x[j];
  return r;
}

int rref(Mat& m, std::vector<int>& pivot_cols) {
  pivot_cols.clear();
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int best = -1;
    std::size_t best_bits = 0;
    for (int i = row; i < m.rows(); ++i) {
      if (m.at(i, col) == 0) continue;
      std::size_t bits = rat_bits(m.at(i, col));
      if (best < 0 || bits < best_bits) {
        best = i;
        best_bits = bits;
      }
    }
    if (best < 0) continue;
    if (best != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(best, j), m.at(row, j));
    Rat inv = 1 / m.at(row, col);
    for (int j = col; j < m.cols(); ++j)
      if (m.at(row, j) != 0) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j)
        if (m.at(row, j) != 0) m.at(i, j) -= f * m.at(row, j);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return row;
}

int rank(Mat m) {
  std::vector<int> pc;
  return rref(m, pc);
}

std::vector<Vec> kernel_basis(Mat m) {
  std::vector<int> pivot_cols;
  int r = rref(m, pivot_cols);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), Rat(0));
    v[free] = 1;
    for (int i = 0; i < r; ++i) v[pivot_cols[i]] = -m.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearSolver::LinearSolver(Mat a) : a_(std::move(a)) {
  // Row-reduce a copy to find a full-rank set of rows, then invert that
  // square block by Gauss-Jordan.
  Mat work = a_;
  std::vector<int> row_origin(work.rows());
  for (int i = 0; i < work.rows(); ++i) row_origin[i] = i;
  int row = 0;
  for (int col = 0; col < work.cols() && row < work.rows(); ++col) {
    int best = -1;
    std::size_t best_bits = 0;
    for (int i = row; i < work.rows(); ++i) {
      if (work.at(i, col) == 0) continue;
      std::size_t bits = rat_bits(work.at(i, col));
      if (best < 0 || bits < best_bits) {
        best = i;
        best_bits = bits;
      }
    }
    if (best < 0) continue;
    if (best != row) {
      for (int j = 0; j < work.cols(); ++j) std::swap(work.at(best, j), work.at(row, j));
      std::swap(row_origin[best], row_origin[row]);
    }
    for (int i = row + 1; i < work.rows(); ++i) {
      if (work.at(i, col) == 0) continue;
      Rat f = work.at(i, col) / work.at(row, col);
      for (int j = col; j < work.cols(); ++j)
        if (work.at(row, j) != 0) work.at(i, j) -= f * work.at(row, j);
    }
    pivot_rows_.push_back(row_origin[row]);
    ++row;
  }
  if (rank() != a_.cols()) return;  // solve() will refuse; caller checks rank
  const int n = a_.cols();
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a_.at(pivot_rows_[i], j);
    aug.at(i, n + i) = 1;
  }
  std::vector<int> pc;
  rref(aug, pc);
  inverse_ = Mat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inverse_.at(i, j) = aug.at(i, n + j);
}

std::optional<Vec> LinearSolver::solve(const Vec& b) const {
  if (static_cast<int>(b.size()) != a_.rows())
    throw std::invalid_argument("solve: rhs size mismatch");
  if (rank() != a_.cols()) return std::nullopt;
  Vec sel(a_.cols());
  for (int i = 0; i < a_.cols(); ++i) sel[i] = b[pivot_rows_[i]];
  Vec x = mat_apply(inverse_, sel);
  Vec check = mat_apply(a_, x);
  for (int i = 0; i < a_.rows(); ++i)
    if (check[i] != b[i]) return std::nullopt;
  return x;
}

}  // namespace weil
