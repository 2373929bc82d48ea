// The complex Cayley algebra: octonions with Cyclo coefficients on the basis
// e0 = 1, e1..e7. The multiplication table is derived at startup from the
// left-multiplication rows of the F/G change-of-basis table (see so8.hpp for
// the full 28-row table and the cross-validation).
#pragma once

#include <array>
#include <cstdint>

#include "exolie/cyclo.hpp"
#include "exolie/linalg.hpp"

namespace exolie {

struct Oct {
  std::array<Cyclo, 8> c{};

  Oct() = default;
  explicit Oct(const Cyclo& scalar) { c[0] = scalar; }

  static Oct unit(int k) {
    Oct x;
    x.c[k] = Cyclo(1);
    return x;
  }
  static Oct zero() { return Oct(); }
  static Oct one() { return unit(0); }

  bool is_zero() const {
    for (const auto& x : c)
      if (!x.is_zero()) return false;
    return true;
  }
  // quaternion subalgebra span{1, e1, e2, e3}
  bool is_quaternion() const {
    return c[4].is_zero() && c[5].is_zero() && c[6].is_zero() && c[7].is_zero();
  }
  // the complex subfield span{1, e1}
  bool is_c_complex() const {
    return is_quaternion() && c[2].is_zero() && c[3].is_zero();
  }

  friend Oct operator+(const Oct& a, const Oct& b) {
    Oct r;
    for (int k = 0; k < 8; ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
  }
  friend Oct operator-(const Oct& a, const Oct& b) {
    Oct r;
    for (int k = 0; k < 8; ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
  }
  friend Oct operator-(const Oct& a) {
    Oct r;
    for (int k = 0; k < 8; ++k) r.c[k] = -a.c[k];
    return r;
  }
  friend Oct operator*(const Cyclo& s, const Oct& a) {
    Oct r;
    if (s.is_zero()) return r;
    for (int k = 0; k < 8; ++k)
      if (!a.c[k].is_zero()) r.c[k] = s * a.c[k];
    return r;
  }
  Oct& operator+=(const Oct& o) { *this = *this + o; return *this; }
  Oct& operator-=(const Oct& o) { *this = *this - o; return *this; }
  friend bool operator==(const Oct& a, const Oct& b) { return a.c == b.c; }
  friend bool operator!=(const Oct& a, const Oct& b) { return !(a == b); }
};

// signed basis table: mul_table()[i][j] = s*(k+1) means e_i e_j = s e_k
const std::array<std::array<int, 8>, 8>& oct_mul_table();

Oct oct_mul(const Oct& x, const Oct& y);
inline Oct operator*(const Oct& x, const Oct& y) { return oct_mul(x, y); }

// conjugate, inner product, real part
Oct oct_conj(const Oct& x);
Cyclo oct_inner(const Oct& x, const Oct& y);
inline Cyclo oct_norm2(const Oct& x) { return oct_inner(x, x); }
inline Cyclo oct_re(const Oct& x) { return x.c[0]; }

// componentwise complex conjugation of the coefficients
Oct oct_tau(const Oct& x);

// associator {x,y,z} = (xy)z - x(yz)
inline Oct associator(const Oct& x, const Oct& y, const Oct& z) {
  return oct_mul(oct_mul(x, y), z) - oct_mul(x, oct_mul(y, z));
}

// gamma: m + a e4 -> m - a e4 (negates e4..e7)
Oct oct_gamma(const Oct& x);
// w: a + m -> a + omega1 m on the C + C^3 split, omega1 = (-1 + sqrt3 e1)/2
Oct oct_w(const Oct& x);
// gamma1: a + m -> conj(a) + conj(m) componentwise over C = span{1,e1}
Oct oct_gamma1(const Oct& x);

// Split Cayley algebra: pairs (m, a) representing m + a e4' with
// (m + a e4')(n + b e4') = (mn + conj(b) a) + (a conj(n) + b m) e4'.
struct SplitOct {
  Oct m, a;  // both constrained to the quaternion subalgebra
};
SplitOct split_mul(const SplitOct& p, const SplitOct& q);

}  // namespace exolie
