// The complex exceptional Jordan algebra: 3x3 Hermitian matrices over the
// Cayley algebra, X(xi, x) with diagonal xi_1..xi_3 and octonions x_1..x_3.
// Canonical 27-element basis order: E1, E2, E3, F1(e0..e7), F2(e0..e7),
// F3(e0..e7); every operator matrix downstream uses this order.
#pragma once

#include <array>

#include "exolie/linalg.hpp"
#include "exolie/octonion.hpp"

namespace exolie {

struct JordanC {
  std::array<Cyclo, 3> xi{};
  std::array<Oct, 3> x{};

  static JordanC E_unit();  // identity matrix E
  static JordanC Ei(int i) {
    JordanC r;
    r.xi[i - 1] = Cyclo(1);
    return r;
  }
  static JordanC Fi(int i, const Oct& a) {
    JordanC r;
    r.x[i - 1] = a;
    return r;
  }

  bool is_zero() const {
    return xi[0].is_zero() && xi[1].is_zero() && xi[2].is_zero() &&
           x[0].is_zero() && x[1].is_zero() && x[2].is_zero();
  }

  friend JordanC operator+(const JordanC& a, const JordanC& b) {
    JordanC r;
    for (int k = 0; k < 3; ++k) {
      r.xi[k] = a.xi[k] + b.xi[k];
      r.x[k] = a.x[k] + b.x[k];
    }
    return r;
  }
  friend JordanC operator-(const JordanC& a, const JordanC& b) {
    JordanC r;
    for (int k = 0; k < 3; ++k) {
      r.xi[k] = a.xi[k] - b.xi[k];
      r.x[k] = a.x[k] - b.x[k];
    }
    return r;
  }
  friend JordanC operator-(const JordanC& a) {
    JordanC r;
    for (int k = 0; k < 3; ++k) {
      r.xi[k] = -a.xi[k];
      r.x[k] = -a.x[k];
    }
    return r;
  }
  friend JordanC operator*(const Cyclo& s, const JordanC& a) {
    JordanC r;
    for (int k = 0; k < 3; ++k) {
      r.xi[k] = s * a.xi[k];
      r.x[k] = s * a.x[k];
    }
    return r;
  }
  JordanC& operator+=(const JordanC& o) { *this = *this + o; return *this; }
  JordanC& operator-=(const JordanC& o) { *this = *this - o; return *this; }
  friend bool operator==(const JordanC& a, const JordanC& b) {
    return a.xi == b.xi && a.x == b.x;
  }
  friend bool operator!=(const JordanC& a, const JordanC& b) { return !(a == b); }

  Vec vec() const;  // 27 coordinates in the canonical basis
  static JordanC from_vec(const Vec& v);
};

// canonical basis element k (0..26)
JordanC jordan_basis(int k);

JordanC jmul(const JordanC& a, const JordanC& b);    // X o Y
JordanC fcross(const JordanC& a, const JordanC& b);  // X x Y (Freudenthal)

Cyclo jtrace(const JordanC& a);
Cyclo jinner(const JordanC& a, const JordanC& b);                    // (X, Y)
Cyclo jtr3(const JordanC& a, const JordanC& b, const JordanC& c);    // tr(X,Y,Z)
Cyclo jcross3(const JordanC& a, const JordanC& b, const JordanC& c); // (X,Y,Z)
Cyclo jdet(const JordanC& a);

JordanC jtau(const JordanC& a);     // componentwise complex conjugation
JordanC jgamma(const JordanC& a);   // octonion gamma entrywise
JordanC jw(const JordanC& a);       // octonion w entrywise
JordanC jgamma1(const JordanC& a);  // octonion gamma1 entrywise
JordanC jsigma(const JordanC& a);   // negates x2, x3 rows/columns

// 3x3 matrices over the Cayley algebra (not necessarily Hermitian); used for
// the M^-, M(3,C)-inner-product and commutator checks.
struct OctMat3 {
  std::array<std::array<Oct, 3>, 3> m{};

  static OctMat3 from_jordan(const JordanC& X);
  JordanC to_jordan() const;  // requires Hermitian shape; throws otherwise
  bool is_hermitian() const;

  friend OctMat3 operator+(const OctMat3& a, const OctMat3& b);
  friend OctMat3 operator-(const OctMat3& a, const OctMat3& b);
  friend OctMat3 operator*(const Cyclo& s, const OctMat3& a);
};
OctMat3 octmat_mul(const OctMat3& a, const OctMat3& b);
OctMat3 octmat_conj_transpose(const OctMat3& a);
Cyclo octmat_inner(const OctMat3& a, const OctMat3& b);  // (X,Y) of sec. 2.3
Cyclo octmat_trace_re(const OctMat3& a);

}  // namespace exolie
