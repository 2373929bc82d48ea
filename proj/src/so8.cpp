#include "exolie/so8.hpp"

#include <stdexcept>

namespace exolie {

Mat g_ij(int i, int j) {
  if (i == j) throw std::invalid_argument("g_ij: i == j");
  Mat m = zeros(8, 8);
  m(i, j) = Cyclo(1);
  m(j, i) = Cyclo(-1);
  return m;
}

Mat f_ij(int i, int j) {
  if (i == j) throw std::invalid_argument("f_ij: i == j");
  Mat m = zeros(8, 8);
  const Oct ei = Oct::unit(i);
  const Oct ej_conj = oct_conj(Oct::unit(j));
  for (int b = 0; b < 8; ++b) {
    Oct col = oct_mul(ei, oct_mul(ej_conj, Oct::unit(b)));
    for (int a = 0; a < 8; ++a) m(a, b) = Cyclo(1, 2) * col.c[a];
  }
  return m;
}

Mat left_mult(const Oct& a) {
  Mat m = zeros(8, 8);
  for (int b = 0; b < 8; ++b) {
    Oct col = oct_mul(a, Oct::unit(b));
    for (int r = 0; r < 8; ++r) m(r, b) = col.c[r];
  }
  return m;
}

Mat right_mult(const Oct& a) {
  Mat m = zeros(8, 8);
  for (int b = 0; b < 8; ++b) {
    Oct col = oct_mul(Oct::unit(b), a);
    for (int r = 0; r < 8; ++r) m(r, b) = col.c[r];
  }
  return m;
}

Oct apply(const Mat& d, const Oct& x) {
  Oct r;
  for (int c = 0; c < 8; ++c) {
    if (x.c[c].is_zero()) continue;
    for (int rr = 0; rr < 8; ++rr) {
      if (d(rr, c).is_zero()) continue;
      r.c[rr] += d(rr, c) * x.c[c];
    }
  }
  return r;
}

bool is_so8(const Mat& d) {
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j <= i; ++j)
      if (d(i, j) != -d(j, i)) return false;
  return true;
}

Mat kappa(const Mat& d) {
  // conj is diag(1,-1,...,-1); kappa D = conj . D . conj
  Mat m = d;
  for (int i = 1; i < 8; ++i)
    for (int j = 0; j < 8; ++j) m(i, j) = -m(i, j);
  for (int j = 1; j < 8; ++j)
    for (int i = 0; i < 8; ++i) m(i, j) = -m(i, j);
  return m;
}

Mat pi(const Mat& d) {
  if (!is_so8(d)) throw std::invalid_argument("pi: not skew");
  // 28x28 change of basis: column (i,j) = G-coordinates of F_{ij}
  static const Mat g_of_f = [] {
    auto idx = [](int i, int j) {
      int n = 0;
      for (int a = 0; a < 8; ++a)
        for (int b = a + 1; b < 8; ++b) {
          if (a == i && b == j) return n;
          ++n;
        }
      return -1;
    };
    Mat m = zeros(28, 28);
    for (const FRow& row : f_table())
      for (const auto& term : row.terms)
        m(idx(term[1], term[2]), idx(row.i, row.j)) = Cyclo(term[0], 2);
    return m;
  }();
  // coefficients of d on G basis: entry (i,j) for i<j
  Vec gc = vzeros(28);
  int n = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) gc(n++) = d(i, j);
  // d = sum gc_k G_k; pi d = sum gc_k F_k, whose G-coordinates are M * gc.
  Vec out = apply_sp(g_of_f, gc);
  Mat r = zeros(8, 8);
  n = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      r(i, j) = out(n);
      r(j, i) = -out(n);
      ++n;
    }
  return r;
}

Mat nu(const Mat& d) { return pi(kappa(d)); }

std::pair<Mat, Mat> triality_pair(const Mat& d1) {
  return {nu(d1), pi(d1)};
}

std::array<Mat, 3> jordan_triality_triple(const Mat& d1) {
  return {d1, nu(d1), kappa(pi(d1))};
}

}  // namespace exolie
