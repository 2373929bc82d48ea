// Dense exact linear algebra: Eigen matrices over Cyclo plus field Gaussian
// elimination (rank / kernel / solve / det / inverse). Pivots are chosen by a
// cheap size heuristic to keep intermediate fractions small.
#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "exolie/cyclo.hpp"

namespace Eigen {
template <>
struct NumTraits<exolie::Cyclo> {
  using Real = exolie::Cyclo;
  using NonInteger = exolie::Cyclo;
  using Literal = exolie::Cyclo;
  using Nested = exolie::Cyclo;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 64
  };
  static inline exolie::Cyclo epsilon() { return exolie::Cyclo(0); }
  static inline exolie::Cyclo dummy_precision() { return exolie::Cyclo(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace exolie {

using Mat = Eigen::Matrix<Cyclo, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Cyclo, Eigen::Dynamic, 1>;

inline Mat zeros(int r, int c) {
  Mat m(r, c);
  m.setConstant(Cyclo(0));
  return m;
}
inline Vec vzeros(int n) {
  Vec v(n);
  v.setConstant(Cyclo(0));
  return v;
}
inline Mat identity(int n) {
  Mat m = zeros(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Cyclo(1);
  return m;
}

// Sparsity-aware product: skips zero entries of the left factor. Much faster
// than Eigen's generic kernel for the structured operators used here.
inline Mat mul_sp(const Mat& a, const Mat& b) {
  Mat r = zeros(static_cast<int>(a.rows()), static_cast<int>(b.cols()));
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Cyclo& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const Cyclo& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        r(i, j) += aik * bkj;
      }
    }
  return r;
}

inline Mat commutator(const Mat& a, const Mat& b) {
  return mul_sp(a, b) - mul_sp(b, a);
}

inline Vec apply_sp(const Mat& a, const Vec& v) {
  Vec r = vzeros(static_cast<int>(a.rows()));
  for (int k = 0; k < a.cols(); ++k) {
    const Cyclo& vk = v(k);
    if (vk.is_zero()) continue;
    for (int i = 0; i < a.rows(); ++i) {
      const Cyclo& aik = a(i, k);
      if (aik.is_zero()) continue;
      r(i) += aik * vk;
    }
  }
  return r;
}

inline bool is_zero(const Mat& a) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) return false;
  return true;
}
inline bool is_zero(const Vec& v) {
  for (int i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

// Row echelon data of a copied matrix.
struct Echelon {
  Mat m;                        // reduced row echelon form
  std::vector<int> pivot_cols;  // column of each pivot row
  int rank = 0;
};

Echelon rref(Mat a);
int rank(const Mat& a);

// Basis of the (right) kernel of a, as columns.
std::vector<Vec> kernel(const Mat& a);

Cyclo det(Mat a);
Mat inverse(const Mat& a);

// Expresses vectors in the span of a fixed set of basis columns. Factorizes
// once, answers many queries, and verifies each answer exactly.
class BasisSolver {
 public:
  explicit BasisSolver(Mat basis_cols);
  int dim() const { return k_; }
  // coordinates such that basis * coords == v, or nullopt if v not in span
  std::optional<Vec> coords(const Vec& v) const;
  bool contains(const Vec& v) const { return coords(v).has_value(); }

 private:
  Mat basis_;
  Mat pinv_;                // inverse of the pivot-row square submatrix
  std::vector<int> prows_;  // pivot row indices
  int k_;
};

}  // namespace exolie
