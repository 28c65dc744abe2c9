#pragma once

// Symmetric-function bases over declared alphabets (slot lists): elementary,
// power-sum, monomial, augmented monomial, Schur (Jacobi-Trudi in the
// elementary functions of the conjugate shape, with an SSYT oracle).

#include <algorithm>
#include <functional>
#include <numeric>

#include "sympoly.hpp"

namespace atiyah {

using Alphabet = std::vector<int>;   // variable slots
using Partition = std::vector<int>;  // weakly decreasing positive parts

inline SymPoly elementary(int k, const Alphabet& a) {
  if (k < 0 || size_t(k) > a.size()) return SymPoly{};
  if (k == 0) return SymPoly::constant(1);
  // iterate k-subsets in lexicographic index order
  SymPoly r;
  std::vector<int> idx(static_cast<size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    Monomial m;
    for (int i : idx) m.e[size_t(a[size_t(i)])]++;
    r.add_term(m, 1);
    int pos = k - 1;
    while (pos >= 0 && idx[size_t(pos)] == int(a.size()) - k + pos) --pos;
    if (pos < 0) break;
    ++idx[size_t(pos)];
    for (int j = pos + 1; j < k; ++j) idx[size_t(j)] = idx[size_t(j - 1)] + 1;
  }
  return r;
}

inline SymPoly power_sum(int k, const Alphabet& a) {
  SymPoly r;
  for (int s : a) r += SymPoly::var(s, k);
  return r;
}

// orbit sum: one term per distinct permutation of the padded exponent vector
inline SymPoly monomial_sym(const Partition& lam, const Alphabet& a) {
  if (lam.size() > a.size()) throw std::domain_error("partition longer than alphabet");
  std::vector<int> exps(a.size(), 0);
  std::copy(lam.begin(), lam.end(), exps.begin());
  std::sort(exps.begin(), exps.end());
  SymPoly r;
  do {
    Monomial m;
    for (size_t i = 0; i < a.size(); ++i) m.e[size_t(a[i])] += uint8_t(exps[i]);
    r.add_term(m, 1);
  } while (std::next_permutation(exps.begin(), exps.end()));
  return r;
}

// augmented monomial: orbit sum weighted by the part-multiplicity factorials
inline SymPoly augmented_monomial(const Partition& lam, const Alphabet& a) {
  Rational mult = 1;
  int run = 1;
  for (size_t i = 1; i <= lam.size(); ++i) {
    if (i < lam.size() && lam[i] == lam[i - 1]) {
      mult *= ++run;
    } else {
      run = 1;
    }
  }
  return mult * monomial_sym(lam, a);
}

inline Partition conjugate(const Partition& lam) {
  Partition c;
  if (lam.empty()) return c;
  for (int i = 1; i <= lam[0]; ++i) {
    int cnt = 0;
    for (int p : lam) cnt += (p >= i);
    c.push_back(cnt);
  }
  return c;
}

// subset-DP determinant, division-free; fine for the small matrices here
inline SymPoly sympoly_det(const std::vector<std::vector<SymPoly>>& M) {
  size_t n = M.size();
  if (n == 0) return SymPoly::constant(1);
  for (const auto& row : M)
    if (row.size() != n) throw std::domain_error("nonsquare matrix");
  std::map<uint32_t, SymPoly> cur;
  cur[0] = SymPoly::constant(1);
  for (size_t row = 0; row < n; ++row) {
    std::map<uint32_t, SymPoly> next;
    for (const auto& [mask, val] : cur) {
      for (size_t c = 0; c < n; ++c) {
        if (mask & (1u << c)) continue;
        if (M[row][c].is_zero()) continue;
        int inv = 0;
        for (size_t c2 = c + 1; c2 < n; ++c2) inv += bool(mask & (1u << c2));
        SymPoly contrib = val * M[row][c];
        if (inv & 1) contrib = -contrib;
        next[mask | (1u << c)] += contrib;
      }
    }
    cur = std::move(next);
  }
  auto it = cur.find((n >= 32 ? 0u : (1u << n) - 1));
  return it == cur.end() ? SymPoly{} : it->second;
}

// Jacobi-Trudi in elementary functions of the conjugate shape
inline SymPoly schur(const Partition& lam, const Alphabet& a) {
  if (lam.empty()) return SymPoly::constant(1);
  if (lam.size() > a.size()) return SymPoly{};  // too many rows: zero
  Partition lc = conjugate(lam);
  size_t m = lc.size();
  std::vector<std::vector<SymPoly>> M(m, std::vector<SymPoly>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      M[i][j] = elementary(lc[i] - int(i) + int(j), a);
  return sympoly_det(M);
}

// semistandard-tableau expansion, the independent oracle for schur()
inline SymPoly schur_tableau(const Partition& lam, const Alphabet& a) {
  if (lam.empty()) return SymPoly::constant(1);
  if (lam.size() > a.size()) return SymPoly{};
  int nv = int(a.size());
  std::vector<std::vector<int>> T(lam.size());
  for (size_t r = 0; r < lam.size(); ++r) T[r].assign(size_t(lam[r]), 0);
  SymPoly out;
  std::function<void(size_t, size_t)> fill = [&](size_t r, size_t c) {
    if (r == lam.size()) {
      Monomial m;
      for (const auto& row : T)
        for (int v : row) m.e[size_t(a[size_t(v - 1)])]++;
      out.add_term(m, 1);
      return;
    }
    size_t nr = r, nc = c + 1;
    if (nc == T[r].size()) { nr = r + 1; nc = 0; }
    int lo = 1;
    if (c > 0) lo = std::max(lo, T[r][c - 1]);      // rows weakly increase
    if (r > 0) lo = std::max(lo, T[r - 1][c] + 1);  // columns strictly increase
    for (int v = lo; v <= nv; ++v) {
      T[r][c] = v;
      fill(nr, nc);
    }
  };
  fill(0, 0);
  return out;
}

// dominance order on equal-weight partitions (Muirhead's criterion)
inline bool majorizes(const Partition& lam, const Partition& mu) {
  int wl = std::accumulate(lam.begin(), lam.end(), 0);
  int wm = std::accumulate(mu.begin(), mu.end(), 0);
  if (wl != wm) throw std::domain_error("majorization needs equal weights");
  size_t len = std::max(lam.size(), mu.size());
  int pl = 0, pm = 0;
  for (size_t i = 0; i < len; ++i) {
    pl += (i < lam.size()) ? lam[i] : 0;
    pm += (i < mu.size()) ? mu[i] : 0;
    if (pl < pm) return false;
  }
  return true;
}

}  // namespace atiyah
