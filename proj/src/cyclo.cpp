#include "exolie/cyclo.hpp"

#include <mutex>
#include <sstream>

namespace exolie {
namespace detail {

namespace {

FieldData make_field_data(int n) {
  FieldData fd;
  fd.conductor = n;
  fd.phi = cyclotomic_poly(n);
  fd.degree = static_cast<int>(fd.phi.size()) - 1;
  const int d = fd.degree;

  // x^m mod phi for 0 <= m < n.
  fd.pow.resize(n);
  std::vector<Rational> cur(d);
  cur[0] = Rational(1);
  for (int m = 0; m < n; ++m) {
    fd.pow[m] = cur;
    // multiply by x
    std::vector<Rational> nxt(d);
    for (int j = 0; j < d - 1; ++j) nxt[j + 1] = cur[j];
    const Rational& top = cur[d - 1];
    if (!top.is_zero()) {
      // x^d = -(phi - x^d): subtract top * phi[j] for j < d
      for (int j = 0; j < d; ++j) nxt[j] -= top * fd.phi[j];
    }
    cur = std::move(nxt);
  }

  // tau(z^j) = z^{j(n-1) mod n}
  fd.tau.resize(d);
  for (int j = 0; j < d; ++j) {
    long m = (static_cast<long>(j) * (n - 1)) % n;
    fd.tau[j] = fd.pow[m];
  }
  return fd;
}

}  // namespace

const FieldData& field_data(int conductor) {
  static const FieldData f4 = make_field_data(4);
  static const FieldData f12 = make_field_data(12);
  static const FieldData f60 = make_field_data(60);
  switch (conductor) {
    case 4: return f4;
    case 12: return f12;
    case 60: return f60;
    default:
      throw std::domain_error("Cyclo: unsupported conductor " +
                              std::to_string(conductor));
  }
}

}  // namespace detail

using detail::field_data;

Cyclo Cyclo::zeta(int conductor, long m) {
  const auto& fd = field_data(conductor);
  m %= conductor;
  if (m < 0) m += conductor;
  Cyclo x(conductor, true);
  x.c_ = fd.pow[m];
  return x;
}

Cyclo Cyclo::sqrt3() {
  return zeta(12, 1) + zeta(12, 11);
}

Cyclo Cyclo::omega() { return zeta(12, 4); }

Cyclo Cyclo::lifted(int conductor) const {
  if (conductor == n_) return *this;
  if (conductor % n_ != 0)
    throw std::domain_error("Cyclo: cannot lift conductor " +
                            std::to_string(n_) + " to " +
                            std::to_string(conductor));
  const auto& fd = field_data(conductor);
  const int step = conductor / n_;  // zeta_m = zeta_n^step
  Cyclo r(conductor, true);
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j].is_zero()) continue;
    const auto& img = fd.pow[(j * step) % conductor];
    for (int k = 0; k < fd.degree; ++k) {
      if (!img[k].is_zero()) r.c_[k] += c_[j] * img[k];
    }
  }
  return r;
}

void Cyclo::align(Cyclo& a, Cyclo& b) {
  if (a.n_ == b.n_) return;
  if (a.n_ < b.n_) a = a.lifted(b.n_);
  else b = b.lifted(a.n_);
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
  if (a.n_ == b.n_) {
    Cyclo r = a;
    for (size_t j = 0; j < r.c_.size(); ++j) r.c_[j] += b.c_[j];
    return r;
  }
  Cyclo x = a, y = b;
  Cyclo::align(x, y);
  return x + y;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) {
  if (a.n_ == b.n_) {
    Cyclo r = a;
    for (size_t j = 0; j < r.c_.size(); ++j) r.c_[j] -= b.c_[j];
    return r;
  }
  Cyclo x = a, y = b;
  Cyclo::align(x, y);
  return x - y;
}

Cyclo operator-(const Cyclo& a) {
  Cyclo r = a;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  if (a.n_ != b.n_) {
    Cyclo x = a, y = b;
    Cyclo::align(x, y);
    return x * y;
  }
  const int d = static_cast<int>(a.c_.size());
  Cyclo r(a.n_, true);
  if (a.is_zero() || b.is_zero()) return r;
  // fast path: rational scalar
  if (a.is_rational()) {
    r.c_ = b.c_;
    for (auto& x : r.c_) x *= a.c_[0];
    return r;
  }
  if (b.is_rational()) {
    r.c_ = a.c_;
    for (auto& x : r.c_) x *= b.c_[0];
    return r;
  }
  std::vector<Rational> conv(2 * d - 1);
  for (int i = 0; i < d; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      if (b.c_[j].is_zero()) continue;
      conv[i + j] += a.c_[i] * b.c_[j];
    }
  }
  const auto& fd = field_data(a.n_);
  for (int j = 0; j < d; ++j) r.c_[j] = std::move(conv[j]);
  for (int m = d; m <= 2 * d - 2; ++m) {
    if (conv[m].is_zero()) continue;
    const auto& row = fd.pow[m % a.n_];  // m < n always here (2d-2 < n)
    for (int j = 0; j < d; ++j)
      if (!row[j].is_zero()) r.c_[j] += conv[m] * row[j];
  }
  return r;
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw std::domain_error("Cyclo: division by zero");
  if (is_rational()) {
    Cyclo r = zero(n_);
    r.c_[0] = Rational(1) / c_[0];
    return r;
  }
  // extended euclid: u*a + v*phi = gcd = const
  using detail::Poly;
  using detail::poly_divmod;
  using detail::poly_trim;
  const auto& fd = field_data(n_);
  Poly r0 = fd.phi, r1(c_.begin(), c_.end());
  poly_trim(r1);
  Poly s0 = {}, s1 = {Rational(1)};  // coefficients of a
  while (true) {
    Poly rem = r0;
    Poly q = poly_divmod(rem, r1);
    if (rem.empty()) {
      if (r1.size() != 1)
        throw std::logic_error("Cyclo: non-invertible element (gcd degree > 0)");
      break;
    }
    // s_{k+1} = s_{k-1} - q * s_k
    Poly qs = detail::poly_mul(q, s1);
    Poly s2 = s0;
    if (s2.size() < qs.size()) s2.resize(qs.size());
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    poly_trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  Rational g = r1[0];
  Cyclo out = zero(n_);
  for (size_t j = 0; j < s1.size() && j < out.c_.size(); ++j)
    out.c_[j] = s1[j] / g;
  if (s1.size() > out.c_.size())
    throw std::logic_error("Cyclo: inverse overflow");
  return out;
}

Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  Cyclo x = a, y = b;
  Cyclo::align(x, y);
  return x.c_ == y.c_;
}

Cyclo Cyclo::tau() const {
  const auto& fd = field_data(n_);
  Cyclo r = zero(n_);
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j].is_zero()) continue;
    const auto& img = fd.tau[j];
    for (size_t k = 0; k < r.c_.size(); ++k)
      if (!img[k].is_zero()) r.c_[k] += c_[j] * img[k];
  }
  return r;
}

Sign Cyclo::real_sign() const {
  if (n_ == 60)
    throw std::domain_error("Cyclo::real_sign: conductor 60 unsupported");
  if (!is_real()) throw std::domain_error("Cyclo::real_sign: non-real input");
  if (n_ == 4) {
    // real subfield is Q
    int s = c_[0].sign();
    return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
  }
  // conductor 12: a + b*sqrt3 with sqrt3 = 2z - z^3, so b = c1/2 (and c3 = -b,
  // c2 = 0 for real elements).
  const Rational& a = c_[0];
  Rational b = c_[1] / Rational(2);
  if (b.is_zero()) {
    int s = a.sign();
    return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
  }
  if (a.is_zero())
    return b.sign() > 0 ? Sign::positive : Sign::negative;
  if (a.sign() == b.sign())
    return a.sign() > 0 ? Sign::positive : Sign::negative;
  // opposite signs: compare a^2 with 3 b^2 (they cannot be equal)
  Rational lhs = a * a, rhs = Rational(3) * b * b;
  if (lhs == rhs) throw std::logic_error("Cyclo::real_sign: sqrt3 rational?");
  return (lhs > rhs ? a.sign() : b.sign()) > 0 ? Sign::positive
                                               : Sign::negative;
}

std::string Cyclo::str() const {
  std::ostringstream os;
  os << "[" << n_ << ";";
  for (size_t j = 0; j < c_.size(); ++j) {
    if (j) os << ",";
    os << c_[j].str();
  }
  os << "]";
  return os.str();
}

}  // namespace exolie
