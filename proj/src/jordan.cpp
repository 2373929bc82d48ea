#include "exolie/jordan.hpp"

#include <stdexcept>

namespace exolie {

JordanC JordanC::E_unit() {
  JordanC r;
  r.xi[0] = r.xi[1] = r.xi[2] = Cyclo(1);
  return r;
}

Vec JordanC::vec() const {
  Vec v = vzeros(27);
  for (int k = 0; k < 3; ++k) v(k) = xi[k];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 8; ++j) v(3 + 8 * i + j) = x[i].c[j];
  return v;
}

JordanC JordanC::from_vec(const Vec& v) {
  JordanC r;
  for (int k = 0; k < 3; ++k) r.xi[k] = v(k);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 8; ++j) r.x[i].c[j] = v(3 + 8 * i + j);
  return r;
}

JordanC jordan_basis(int k) {
  if (k < 3) return JordanC::Ei(k + 1);
  const int fiber = (k - 3) / 8, unit = (k - 3) % 8;
  return JordanC::Fi(fiber + 1, Oct::unit(unit));
}

OctMat3 OctMat3::from_jordan(const JordanC& X) {
  // X = [[xi1, x3, conj(x2)], [conj(x3), xi2, x1], [x2, conj(x1), xi3]]
  OctMat3 r;
  r.m[0][0] = Oct(X.xi[0]);
  r.m[1][1] = Oct(X.xi[1]);
  r.m[2][2] = Oct(X.xi[2]);
  r.m[0][1] = X.x[2];
  r.m[1][0] = oct_conj(X.x[2]);
  r.m[0][2] = oct_conj(X.x[1]);
  r.m[2][0] = X.x[1];
  r.m[1][2] = X.x[0];
  r.m[2][1] = oct_conj(X.x[0]);
  return r;
}

bool OctMat3::is_hermitian() const {
  for (int i = 0; i < 3; ++i)
    if (m[i][i] != Oct(m[i][i].c[0])) return false;
  return m[1][0] == oct_conj(m[0][1]) && m[2][0] == oct_conj(m[0][2]) &&
         m[2][1] == oct_conj(m[1][2]);
}

JordanC OctMat3::to_jordan() const {
  if (!is_hermitian()) throw std::domain_error("OctMat3: not Hermitian");
  JordanC r;
  for (int i = 0; i < 3; ++i) r.xi[i] = m[i][i].c[0];
  r.x[0] = m[1][2];
  r.x[1] = m[2][0];
  r.x[2] = m[0][1];
  return r;
}

OctMat3 operator+(const OctMat3& a, const OctMat3& b) {
  OctMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
  return r;
}

OctMat3 operator-(const OctMat3& a, const OctMat3& b) {
  OctMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j] - b.m[i][j];
  return r;
}

OctMat3 operator*(const Cyclo& s, const OctMat3& a) {
  OctMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = s * a.m[i][j];
  return r;
}

OctMat3 octmat_mul(const OctMat3& a, const OctMat3& b) {
  OctMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        r.m[i][j] += oct_mul(a.m[i][k], b.m[k][j]);
  return r;
}

OctMat3 octmat_conj_transpose(const OctMat3& a) {
  OctMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = oct_conj(a.m[j][i]);
  return r;
}

Cyclo octmat_trace_re(const OctMat3& a) {
  return a.m[0][0].c[0] + a.m[1][1].c[0] + a.m[2][2].c[0];
}

Cyclo octmat_inner(const OctMat3& a, const OctMat3& b) {
  // (X, Y) = 1/2 tr(XY + Y* X*), real part
  OctMat3 p = octmat_mul(a, b);
  OctMat3 q = octmat_mul(octmat_conj_transpose(b), octmat_conj_transpose(a));
  return Cyclo(1, 2) * (octmat_trace_re(p) + octmat_trace_re(q));
}

JordanC jmul(const JordanC& a, const JordanC& b) {
  // 1/2 (XY + YX) computed in the matrix model; the result is Hermitian.
  OctMat3 A = OctMat3::from_jordan(a), B = OctMat3::from_jordan(b);
  OctMat3 s = octmat_mul(A, B) + octmat_mul(B, A);
  return (Cyclo(1, 2) * s).to_jordan();
}

Cyclo jtrace(const JordanC& a) { return a.xi[0] + a.xi[1] + a.xi[2]; }

Cyclo jinner(const JordanC& a, const JordanC& b) {
  Cyclo s(0);
  for (int k = 0; k < 3; ++k) {
    s += a.xi[k] * b.xi[k];
    s += Cyclo(2) * oct_inner(a.x[k], b.x[k]);
  }
  return s;
}

JordanC fcross(const JordanC& a, const JordanC& b) {
  // X x Y = 1/2 (2 X o Y - tr(X) Y - tr(Y) X + (tr(X)tr(Y) - (X,Y)) E)
  JordanC r = jmul(a, b);
  const Cyclo ta = jtrace(a), tb = jtrace(b);
  r -= Cyclo(1, 2) * (ta * b + tb * a);
  const Cyclo c = Cyclo(1, 2) * (ta * tb - jinner(a, b));
  for (int k = 0; k < 3; ++k) r.xi[k] += c;
  return r;
}

Cyclo jtr3(const JordanC& a, const JordanC& b, const JordanC& c) {
  return jinner(a, jmul(b, c));
}

Cyclo jcross3(const JordanC& a, const JordanC& b, const JordanC& c) {
  return jinner(a, fcross(b, c));
}

Cyclo jdet(const JordanC& a) {
  return Cyclo(1, 3) * jcross3(a, a, a);
}

JordanC jtau(const JordanC& a) {
  JordanC r;
  for (int k = 0; k < 3; ++k) {
    r.xi[k] = a.xi[k].tau();
    r.x[k] = oct_tau(a.x[k]);
  }
  return r;
}

namespace {
template <typename F>
JordanC entrywise(const JordanC& a, F f) {
  JordanC r;
  for (int k = 0; k < 3; ++k) {
    r.xi[k] = a.xi[k];
    r.x[k] = f(a.x[k]);
  }
  return r;
}
}  // namespace

JordanC jgamma(const JordanC& a) { return entrywise(a, oct_gamma); }
JordanC jw(const JordanC& a) { return entrywise(a, oct_w); }
JordanC jgamma1(const JordanC& a) { return entrywise(a, oct_gamma1); }

JordanC jsigma(const JordanC& a) {
  JordanC r = a;
  r.x[1] = -r.x[1];
  r.x[2] = -r.x[2];
  return r;
}

}  // namespace exolie
