// The Lie algebra so(8) acting on the Cayley algebra: the G_ij / F_ij
// generator bases, the outer automorphisms kappa, pi, nu and the principle of
// infinitesimal triality.
#pragma once

#include <array>
#include <vector>

#include "exolie/linalg.hpp"
#include "exolie/octonion.hpp"

namespace exolie {

// One row of the F-to-G change-of-basis table: 2F_{ij} = sum of signed G_{kl}.
struct FRow {
  int i, j;
  std::array<std::array<int, 3>, 4> terms;  // {sign, k, l}
};

// All 28 rows as printed (i < j).
const std::vector<FRow>& f_table();

// 8x8 matrices acting on octonion coordinates.
Mat g_ij(int i, int j);
Mat f_ij(int i, int j);  // F_{ij} x = 1/2 e_i (conj(e_j) x)

Mat left_mult(const Oct& a);   // L_a
Mat right_mult(const Oct& a);  // R_a
inline Mat t_mult(const Oct& a) { return left_mult(a) + right_mult(a); }

Oct apply(const Mat& d, const Oct& x);

// skewness w.r.t. the octonion inner product
bool is_so8(const Mat& d);

Mat kappa(const Mat& d);  // (kappa D)x = conj(D conj(x))
Mat pi(const Mat& d);     // basis translation G_ij <-> F_ij
Mat nu(const Mat& d);     // pi . kappa

// D2 = nu D1, D3 = pi D1 with (D1 x)y + x(D2 y) = D3(xy)
std::pair<Mat, Mat> triality_pair(const Mat& d1);

// The triple acting on the three Jordan F-fibers: (D, nu D, kappa pi D).
std::array<Mat, 3> jordan_triality_triple(const Mat& d1);

}  // namespace exolie
