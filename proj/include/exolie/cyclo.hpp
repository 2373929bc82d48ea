// Exact elements of the cyclotomic fields Q(zeta_4) < Q(zeta_12) < Q(zeta_60),
// represented on the power basis 1, z, ..., z^{phi(n)-1} reduced mod the n-th
// cyclotomic polynomial. Binary operations lift along the conductor chain
// automatically (the embeddings are canonical injective ring maps); only the
// conductors 4, 12, 60 exist, so two operands are always comparable.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "exolie/rational.hpp"

namespace exolie {

enum class Sign { negative = -1, zero = 0, positive = 1 };

namespace detail {

// Polynomials over Q, dense coefficient vectors, index = power.
using Poly = std::vector<Rational>;

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  poly_trim(r);
  return r;
}

// a = q*b + r with deg r < deg b; returns q, overwrites a with r.
inline Poly poly_divmod(Poly& a, const Poly& b) {
  Poly q;
  poly_trim(a);
  if (b.empty()) throw std::domain_error("poly division by zero");
  if (a.size() < b.size()) return q;
  q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  while (a.size() >= b.size()) {
    Rational c = a.back() / lead;
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    poly_trim(a);
    if (a.empty()) break;
  }
  return q;
}

// n-th cyclotomic polynomial via Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d.
inline Poly cyclotomic_poly(int n) {
  Poly num(n + 1);
  num[0] = Rational(-1);
  num[n] = Rational(1);
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    Poly phi_d = cyclotomic_poly(d);
    Poly q = poly_divmod(num, phi_d);
    num = std::move(q);
  }
  return num;
}

struct FieldData {
  int conductor = 0;
  int degree = 0;
  Poly phi;                              // cyclotomic polynomial
  std::vector<std::vector<Rational>> pow;  // x^m mod phi for m in [0, n)
  std::vector<std::vector<Rational>> tau;  // image of basis power j under z -> z^{n-1}
};

const FieldData& field_data(int conductor);

}  // namespace detail

class Cyclo {
 public:
  Cyclo() : n_(4), c_(2) {}
  Cyclo(int k) : n_(4), c_(2) { c_[0] = Rational(k); }  // NOLINT
  Cyclo(long k) : n_(4), c_(2) { c_[0] = Rational(k); }  // NOLINT
  Cyclo(const Rational& r) : n_(4), c_(2) { c_[0] = r; }  // NOLINT
  Cyclo(long num, long den) : n_(4), c_(2) { c_[0] = Rational(num, den); }

  static Cyclo zero(int conductor = 4) { return Cyclo(conductor, true); }
  static Cyclo one(int conductor = 4) {
    Cyclo x(conductor, true);
    x.c_[0] = Rational(1);
    return x;
  }
  // zeta_n^m, at conductor n.
  static Cyclo zeta(int conductor, long m = 1);
  static Cyclo i() { return zeta(4, 1); }
  static Cyclo sqrt3();   // zeta12 + zeta12^-1
  static Cyclo omega();   // primitive cube root, zeta12^4
  static Cyclo zeta5() { return zeta(60, 12); }

  int conductor() const { return n_; }
  int degree() const { return static_cast<int>(c_.size()); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& coeff(int j) const { return c_[j]; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_rational() const {
    for (size_t j = 1; j < c_.size(); ++j)
      if (!c_[j].is_zero()) return false;
    return true;
  }
  const Rational& rational_part() const { return c_[0]; }

  Cyclo lifted(int conductor) const;

  friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator/(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator-(const Cyclo& a);
  Cyclo& operator+=(const Cyclo& o) { *this = *this + o; return *this; }
  Cyclo& operator-=(const Cyclo& o) { *this = *this - o; return *this; }
  Cyclo& operator*=(const Cyclo& o) { *this = *this * o; return *this; }
  Cyclo& operator/=(const Cyclo& o) { *this = *this / o; return *this; }
  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  Cyclo inverse() const;

  // Complex conjugation zeta -> zeta^{n-1}; a ring automorphism with tau^2 = id.
  Cyclo tau() const;

  bool is_real() const { return tau() == *this; }

  // Exact sign of a real element; conductor must be 4 or 12 (real subfield Q
  // or Q(sqrt 3)). Throws on non-real input or conductor 60.
  Sign real_sign() const;

  std::string str() const;
  size_t bit_size() const {
    size_t s = 0;
    for (const auto& x : c_) s += x.bit_size();
    return s;
  }

 private:
  Cyclo(int conductor, bool) : n_(conductor) {
    c_.assign(detail::field_data(conductor).degree, Rational(0));
  }
  static void align(Cyclo& a, Cyclo& b);

  int n_;
  std::vector<Rational> c_;
};

inline Cyclo inv(const Cyclo& a) { return a.inverse(); }

}  // namespace exolie
