#include "exolie/octonion.hpp"

#include <stdexcept>

#include "exolie/so8.hpp"

namespace exolie {

const std::vector<FRow>& f_table() {
  // 2F_{ij} expanded in G_{kl}, transcribed row by row.
  static const std::vector<FRow> rows = {
      {0, 1, {{{+1, 0, 1}, {+1, 2, 3}, {+1, 4, 5}, {+1, 6, 7}}}},
      {2, 3, {{{+1, 0, 1}, {+1, 2, 3}, {-1, 4, 5}, {-1, 6, 7}}}},
      {4, 5, {{{+1, 0, 1}, {-1, 2, 3}, {+1, 4, 5}, {-1, 6, 7}}}},
      {6, 7, {{{+1, 0, 1}, {-1, 2, 3}, {-1, 4, 5}, {+1, 6, 7}}}},

      {0, 2, {{{+1, 0, 2}, {-1, 1, 3}, {-1, 4, 6}, {+1, 5, 7}}}},
      {1, 3, {{{-1, 0, 2}, {+1, 1, 3}, {-1, 4, 6}, {+1, 5, 7}}}},
      {4, 6, {{{-1, 0, 2}, {-1, 1, 3}, {+1, 4, 6}, {+1, 5, 7}}}},
      {5, 7, {{{+1, 0, 2}, {+1, 1, 3}, {+1, 4, 6}, {+1, 5, 7}}}},

      {0, 3, {{{+1, 0, 3}, {+1, 1, 2}, {+1, 4, 7}, {+1, 5, 6}}}},
      {1, 2, {{{+1, 0, 3}, {+1, 1, 2}, {-1, 4, 7}, {-1, 5, 6}}}},
      {4, 7, {{{+1, 0, 3}, {-1, 1, 2}, {+1, 4, 7}, {-1, 5, 6}}}},
      {5, 6, {{{+1, 0, 3}, {-1, 1, 2}, {-1, 4, 7}, {+1, 5, 6}}}},

      {0, 4, {{{+1, 0, 4}, {-1, 1, 5}, {+1, 2, 6}, {-1, 3, 7}}}},
      {1, 5, {{{-1, 0, 4}, {+1, 1, 5}, {+1, 2, 6}, {-1, 3, 7}}}},
      {2, 6, {{{+1, 0, 4}, {+1, 1, 5}, {+1, 2, 6}, {+1, 3, 7}}}},
      {3, 7, {{{-1, 0, 4}, {-1, 1, 5}, {+1, 2, 6}, {+1, 3, 7}}}},

      {0, 5, {{{+1, 0, 5}, {+1, 1, 4}, {-1, 2, 7}, {-1, 3, 6}}}},
      {1, 4, {{{+1, 0, 5}, {+1, 1, 4}, {+1, 2, 7}, {+1, 3, 6}}}},
      {2, 7, {{{-1, 0, 5}, {+1, 1, 4}, {+1, 2, 7}, {-1, 3, 6}}}},
      {3, 6, {{{-1, 0, 5}, {+1, 1, 4}, {-1, 2, 7}, {+1, 3, 6}}}},

      {0, 6, {{{+1, 0, 6}, {-1, 1, 7}, {-1, 2, 4}, {+1, 3, 5}}}},
      {1, 7, {{{-1, 0, 6}, {+1, 1, 7}, {-1, 2, 4}, {+1, 3, 5}}}},
      {2, 4, {{{-1, 0, 6}, {-1, 1, 7}, {+1, 2, 4}, {+1, 3, 5}}}},
      {3, 5, {{{+1, 0, 6}, {+1, 1, 7}, {+1, 2, 4}, {+1, 3, 5}}}},

      {0, 7, {{{+1, 0, 7}, {+1, 1, 6}, {+1, 2, 5}, {+1, 3, 4}}}},
      {1, 6, {{{+1, 0, 7}, {+1, 1, 6}, {-1, 2, 5}, {-1, 3, 4}}}},
      {2, 5, {{{+1, 0, 7}, {-1, 1, 6}, {+1, 2, 5}, {-1, 3, 4}}}},
      {3, 4, {{{+1, 0, 7}, {-1, 1, 6}, {-1, 2, 5}, {+1, 3, 4}}}},
  };
  return rows;
}

namespace {

// e_k e_b from L_{e_k} = -2F_{0k}: the G-expansion of 2F_{0k} applied to e_b,
// negated. G_{kl} e_l = e_k, G_{kl} e_k = -e_l.
std::array<std::array<int, 8>, 8> build_table() {
  std::array<std::array<int, 8>, 8> t{};
  for (int j = 0; j < 8; ++j) t[0][j] = +(j + 1);  // 1 * e_j = e_j
  for (const FRow& row : f_table()) {
    if (row.i != 0) continue;
    const int k = row.j;
    t[k][0] = +(k + 1);  // e_k * 1
    for (const auto& term : row.terms) {
      const int s = term[0], a = term[1], b = term[2];
      // -s*G_{ab}: e_b -> e_a, e_a -> -e_b
      t[k][b] = -s * (a + 1);
      t[k][a] = +s * (b + 1);
    }
    // the diagonal comes out as e_k e_k = -1 via the G_{0k} term; keep it
  }
  return t;
}

}  // namespace

const std::array<std::array<int, 8>, 8>& oct_mul_table() {
  static const auto table = build_table();
  return table;
}

Oct oct_mul(const Oct& x, const Oct& y) {
  const auto& t = oct_mul_table();
  Oct r;
  for (int i = 0; i < 8; ++i) {
    if (x.c[i].is_zero()) continue;
    for (int j = 0; j < 8; ++j) {
      if (y.c[j].is_zero()) continue;
      const int s = t[i][j];
      const int k = (s > 0 ? s : -s) - 1;
      Cyclo term = x.c[i] * y.c[j];
      if (s > 0)
        r.c[k] += term;
      else
        r.c[k] -= term;
    }
  }
  return r;
}

Oct oct_conj(const Oct& x) {
  Oct r;
  r.c[0] = x.c[0];
  for (int k = 1; k < 8; ++k) r.c[k] = -x.c[k];
  return r;
}

Cyclo oct_inner(const Oct& x, const Oct& y) {
  Cyclo s(0);
  for (int k = 0; k < 8; ++k) {
    if (x.c[k].is_zero() || y.c[k].is_zero()) continue;
    s += x.c[k] * y.c[k];
  }
  return s;
}

Oct oct_tau(const Oct& x) {
  Oct r;
  for (int k = 0; k < 8; ++k) r.c[k] = x.c[k].tau();
  return r;
}

Oct oct_gamma(const Oct& x) {
  Oct r = x;
  for (int k = 4; k < 8; ++k) r.c[k] = -r.c[k];
  return r;
}

Oct oct_w(const Oct& x) {
  // split x = a + m1 e2 + m2 e4 + m3 e6 with a, m_i in span{1, e1}; multiply
  // the m-part on the left by omega1 = (-1 + sqrt3 e1)/2.
  Oct a;
  a.c[0] = x.c[0];
  a.c[1] = x.c[1];
  Oct m = x - a;
  Oct omega1;
  omega1.c[0] = Cyclo(-1, 2);
  omega1.c[1] = Cyclo::sqrt3() / Cyclo(2);
  return a + oct_mul(omega1, m);
}

Oct oct_gamma1(const Oct& x) {
  // conjugation of each C-coordinate over C = span{1, e1}: negates e1, e3,
  // e5, e7 (computed from m_i = u + v e1, conj(m_i) applied in each slot).
  Oct r = x;
  r.c[1] = -r.c[1];
  r.c[3] = -r.c[3];
  r.c[5] = -r.c[5];
  r.c[7] = -r.c[7];
  return r;
}

SplitOct split_mul(const SplitOct& p, const SplitOct& q) {
  SplitOct r;
  r.m = oct_mul(p.m, q.m) + oct_mul(oct_conj(q.a), p.a);
  r.a = oct_mul(p.a, oct_conj(q.m)) + oct_mul(q.a, p.m);
  return r;
}

}  // namespace exolie
