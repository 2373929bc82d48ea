#include "exolie/linalg.hpp"

#include <stdexcept>

namespace exolie {

namespace {

// pick the structurally cheapest nonzero pivot in column c at rows >= r0
int pick_pivot(const Mat& m, int r0, int c) {
  int best = -1;
  size_t best_sz = 0;
  for (int r = r0; r < m.rows(); ++r) {
    if (m(r, c).is_zero()) continue;
    size_t sz = m(r, c).bit_size();
    if (best < 0 || sz < best_sz) {
      best = r;
      best_sz = sz;
      if (sz <= 4) break;  // a plain small integer; good enough
    }
  }
  return best;
}

}  // namespace

Echelon rref(Mat a) {
  Echelon e;
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = pick_pivot(a, r, c);
    if (p < 0) continue;
    if (p != r) a.row(p).swap(a.row(r));
    Cyclo piv_inv = a(r, c).inverse();
    for (int j = c; j < cols; ++j)
      if (!a(r, j).is_zero()) a(r, j) *= piv_inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Cyclo f = a(i, c);
      if (f.is_zero()) continue;
      for (int j = c; j < cols; ++j) {
        if (a(r, j).is_zero()) continue;
        a(i, j) -= f * a(r, j);
      }
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.rank = r;
  e.m = std::move(a);
  return e;
}

int rank(const Mat& a) { return rref(a).rank; }

std::vector<Vec> kernel(const Mat& a) {
  Echelon e = rref(a);
  const int cols = static_cast<int>(a.cols());
  std::vector<bool> is_pivot(cols, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    Vec v = vzeros(cols);
    v(c) = Cyclo(1);
    for (int r = 0; r < e.rank; ++r) {
      // pivot row r has leading 1 at pivot_cols[r]
      v(e.pivot_cols[r]) = -e.m(r, c);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Cyclo det(Mat a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det: not square");
  const int n = static_cast<int>(a.rows());
  Cyclo d(1);
  for (int c = 0; c < n; ++c) {
    int p = pick_pivot(a, c, c);
    if (p < 0) return Cyclo(0);
    if (p != c) {
      a.row(p).swap(a.row(c));
      d = -d;
    }
    d *= a(c, c);
    Cyclo inv_piv = a(c, c).inverse();
    for (int i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Cyclo f = a(i, c) * inv_piv;
      for (int j = c; j < n; ++j) {
        if (a(c, j).is_zero()) continue;
        a(i, j) -= f * a(c, j);
      }
    }
  }
  return d;
}

Mat inverse(const Mat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: not square");
  const int n = static_cast<int>(a.rows());
  Mat aug = zeros(n, 2 * n);
  aug.block(0, 0, n, n) = a;
  for (int i = 0; i < n; ++i) aug(i, n + i) = Cyclo(1);
  Echelon e = rref(std::move(aug));
  if (e.rank != n) throw std::domain_error("inverse: singular matrix");
  return e.m.block(0, n, n, n);
}

BasisSolver::BasisSolver(Mat basis_cols) : basis_(std::move(basis_cols)) {
  k_ = static_cast<int>(basis_.cols());
  Echelon e = rref(basis_.transpose());
  if (e.rank != k_)
    throw std::invalid_argument("BasisSolver: columns not independent");
  prows_ = e.pivot_cols;  // rows of basis_ giving an invertible k x k block
  Mat sq = zeros(k_, k_);
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) sq(i, j) = basis_(prows_[i], j);
  pinv_ = inverse(sq);
}

std::optional<Vec> BasisSolver::coords(const Vec& v) const {
  Vec rhs = vzeros(k_);
  for (int i = 0; i < k_; ++i) rhs(i) = v(prows_[i]);
  Vec c = apply_sp(pinv_, rhs);
  // verify exactly
  Vec rec = apply_sp(basis_, c);
  for (int i = 0; i < v.size(); ++i)
    if (rec(i) != v(i)) return std::nullopt;
  return c;
}

}  // namespace exolie
