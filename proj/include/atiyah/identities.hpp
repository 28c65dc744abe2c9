#pragma once

// Exact symbolic identities for the Eastwood-Norbury determinant formula and
// its specializations: the volume regrouping, the two A4 forms, the
// edge-tangential reductions with the Lemma 2.7 witness, the strong
// four-points difference, the Schur-type suite of Proposition 6.1, and the
// per-family decompositions (upright, trirectangular, parallelogram, wedge,
// semiregular). Everything here is a zero-tolerance polynomial statement.

#include <array>

#include "psi.hpp"
#include "symfunc.hpp"

namespace atiyah {

inline SymPoly d3_sym(const SymPoly& a, const SymPoly& b, const SymPoly& c) {
  return (a + b - c) * (b + c - a) * (c + a - b);
}

// ---------------------------------------------------------------------------
// Six tetrahedron distances in lexicographic pair order: slots 0..5 hold
// r12, r13, r14, r23, r24, r34. Family parameters live in slots 6 and up.

inline int distance_slot(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > 4 || i == j) throw std::out_of_range("distance pair");
  return (i - 1) * (8 - i) / 2 + (j - i - 1);
}

inline SymPoly distance_var(int i, int j) { return SymPoly::var(distance_slot(i, j)); }

inline SymPoly distance_product_sym() {
  Monomial m;
  for (int s = 0; s < 6; ++s) m.e[size_t(s)] = 1;
  return SymPoly::monomial_term(m, 1);
}

// 144 V^2 as the three-product expansion of the Cayley-Menger determinant
inline SymPoly cayley_menger_144v2_sym() {
  auto s = [](int i, int j) { return distance_var(i, j).pow(2); };
  SymPoly t1 = s(1, 2) * s(3, 4) * (s(1, 3) + s(1, 4) + s(2, 3) + s(2, 4) - s(1, 2) - s(3, 4));
  SymPoly t2 = s(1, 3) * s(2, 4) * (s(1, 2) + s(1, 4) + s(2, 3) + s(3, 4) - s(1, 3) - s(2, 4));
  SymPoly t3 = s(1, 4) * s(2, 3) * (s(1, 2) + s(1, 3) + s(2, 4) + s(3, 4) - s(1, 4) - s(2, 3));
  SymPoly f = s(1, 2) * s(1, 3) * s(2, 3) + s(1, 2) * s(1, 4) * s(2, 4) +
              s(1, 3) * s(1, 4) * s(3, 4) + s(2, 3) * s(2, 4) * s(3, 4);
  return t1 + t2 + t3 - f;
}

// d3 of the three opposite-edge products (the Moebius triangle)
inline SymPoly mobius_d3_sym() {
  return d3_sym(distance_var(1, 2) * distance_var(3, 4), distance_var(1, 3) * distance_var(2, 4),
                distance_var(1, 4) * distance_var(2, 3));
}

inline SymPoly a4_face_form_sym() {
  SymPoly tot;
  for (int l = 1; l <= 4; ++l) {
    std::vector<int> rest;
    for (int m = 1; m <= 4; ++m)
      if (m != l) rest.push_back(m);
    int i = rest[0], j = rest[1], k = rest[2];
    SymPoly A = distance_var(i, l), B = distance_var(j, l), C = distance_var(k, l);
    SymPoly face = d3_sym(distance_var(i, j), distance_var(i, k), distance_var(j, k));
    SymPoly cone = d3_sym(A, B, C) + 8 * (A * B * C) +
                   A * (A.pow(2) - distance_var(j, k).pow(2)) +
                   B * (B.pow(2) - distance_var(i, k).pow(2)) +
                   C * (C.pow(2) - distance_var(i, j).pow(2));
    tot += cone * face;
  }
  return tot;
}

inline SymPoly a4_sum_form_sym() {
  SymPoly tot;
  for (int l = 1; l <= 4; ++l) {
    std::vector<int> rest;
    for (int m = 1; m <= 4; ++m)
      if (m != l) rest.push_back(m);
    SymPoly face =
        d3_sym(distance_var(rest[0], rest[1]), distance_var(rest[0], rest[2]),
               distance_var(rest[1], rest[2]));
    SymPoly inner;
    for (int i : rest) {
      std::vector<int> jk;
      for (int m : rest)
        if (m != i) jk.push_back(m);
      inner += distance_var(l, i) *
               ((distance_var(l, jk[0]) + distance_var(l, jk[1])).pow(2) -
                distance_var(jk[0], jk[1]).pow(2));
    }
    tot += inner * face;
  }
  return tot;
}

inline bool a4_forms_agree() { return a4_face_form_sym() == a4_sum_form_sym(); }

// Re D4 = 64 prod r - 4 d3(opposite-edge products) + A4 + 288 V^2
inline SymPoly re_d4_sym() {
  return 64 * distance_product_sym() - 4 * mobius_d3_sym() + a4_face_form_sym() +
         2 * cayley_menger_144v2_sym();
}

// 144V^2 - 2 d3(products) regrouped into squared-difference blocks minus the
// face products; this is the identity behind the nonpositivity of the left
// side for embeddable distance data
inline bool volume_regrouping_identity() {
  SymPoly p1 = distance_var(1, 2) * distance_var(3, 4);
  SymPoly p2 = distance_var(1, 3) * distance_var(2, 4);
  SymPoly p3 = distance_var(1, 4) * distance_var(2, 3);
  SymPoly lhs = cayley_menger_144v2_sym() - 2 * d3_sym(p1, p2, p3);
  auto face = [](int i, int j, int k) {
    return (distance_var(i, j) * distance_var(i, k) * distance_var(j, k)).pow(2);
  };
  SymPoly rhs = (distance_var(1, 2) - distance_var(3, 4)).pow(2) *
                    (p2.pow(2) + p3.pow(2) - p1.pow(2)) +
                (distance_var(1, 3) - distance_var(2, 4)).pow(2) *
                    (p1.pow(2) + p3.pow(2) - p2.pow(2)) +
                (distance_var(1, 4) - distance_var(2, 3)).pow(2) *
                    (p1.pow(2) + p2.pow(2) - p3.pow(2)) +
                4 * distance_product_sym() - face(1, 2, 3) - face(1, 2, 4) - face(1, 3, 4) -
                face(2, 3, 4);
  return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Edge-tangential substitution r_ij = t_i + t_j; tangent lengths t1..t4 sit
// in slots 6..9.

inline const Alphabet& tangent_alphabet() {
  static const Alphabet a = {6, 7, 8, 9};
  return a;
}

inline SymPoly tangent_var(int i) { return SymPoly::var(tangent_alphabet()[size_t(i - 1)]); }

// substitute the six distance slots by expressions living in slots >= 6
inline SymPoly substitute_distances(SymPoly p, const std::array<SymPoly, 6>& repl) {
  for (int s = 0; s < 6; ++s) p = p.substitute(s, repl[size_t(s)]);
  return p;
}

inline SymPoly edge_tangential(const SymPoly& p) {
  return substitute_distances(p, {tangent_var(1) + tangent_var(2), tangent_var(1) + tangent_var(3),
                                  tangent_var(1) + tangent_var(4), tangent_var(2) + tangent_var(3),
                                  tangent_var(2) + tangent_var(4),
                                  tangent_var(3) + tangent_var(4)});
}

struct EdgeTangentialReductions {
  bool prod_r = false;       // prod r = e3 e2 e1 - e4 e1^2 - e3^2 = s_{321}(t)
  bool volume = false;       // 288 V^2 = 128 e4 e2 - 32 e3^2
  bool mobius = false;       // -4 d3(products) = 128 e4 e2 - 32 e4 e1^2 - 32 e3^2
  bool a4 = false;           // A4 = 32 (3 e1^2 + 4 e2) e4
  bool re_d4 = false;        // Re D4 = 64 e2 (2 e4 + m211) + 1152 V^2
  bool face_d3 = false;      // face d3 = 8 t_i t_j t_k
  bool all() const { return prod_r && volume && mobius && a4 && re_d4 && face_d3; }
};

inline EdgeTangentialReductions edge_tangential_reductions() {
  const Alphabet& t = tangent_alphabet();
  SymPoly e1 = elementary(1, t), e2 = elementary(2, t), e3 = elementary(3, t),
          e4 = elementary(4, t);
  EdgeTangentialReductions out;
  SymPoly s321 = e3 * e2 * e1 - e4 * e1.pow(2) - e3.pow(2);
  out.prod_r = edge_tangential(distance_product_sym()) == s321 && schur({3, 2, 1}, t) == s321;
  SymPoly v144 = edge_tangential(cayley_menger_144v2_sym());
  out.volume = 2 * v144 == 128 * (e4 * e2) - 32 * e3.pow(2);
  out.mobius =
      -4 * edge_tangential(mobius_d3_sym()) ==
      128 * (e4 * e2) - 32 * (e4 * e1.pow(2)) - 32 * e3.pow(2);
  out.a4 = edge_tangential(a4_face_form_sym()) == 32 * ((3 * e1.pow(2) + 4 * e2) * e4);
  SymPoly m211 = monomial_sym({2, 1, 1}, t);
  out.re_d4 = edge_tangential(re_d4_sym()) == 64 * (e2 * (2 * e4 + m211)) + 8 * v144;
  out.face_d3 =
      edge_tangential(d3_sym(distance_var(1, 2), distance_var(1, 3), distance_var(2, 3))) ==
      8 * (tangent_var(1) * tangent_var(2) * tangent_var(3));
  return out;
}

// ---------------------------------------------------------------------------
// Lemma 2.7: e2^2 (2 e4 + m211)^2 - prod over faces of e1(face) e2(face),
// with its eleven-term monomial witness.

inline SymPoly section_2_2_difference() {
  const Alphabet& t = tangent_alphabet();
  SymPoly e2 = elementary(2, t), e4 = elementary(4, t);
  SymPoly lhs = (e2 * (2 * e4 + monomial_sym({2, 1, 1}, t))).pow(2);
  SymPoly rhs = SymPoly::constant(1);
  for (int skip = 0; skip < 4; ++skip) {
    Alphabet face;
    for (int i = 0; i < 4; ++i)
      if (i != skip) face.push_back(t[size_t(i)]);
    rhs *= elementary(1, face) * elementary(2, face);
  }
  return lhs - rhs;
}

inline std::map<Partition, Rational> section_2_2_witness() {
  return {{{6, 3, 2, 1}, 1}, {{6, 2, 2, 2}, 3}, {{5, 4, 3}, 1},    {{5, 4, 2, 1}, 2},
          {{5, 3, 2, 2}, 7}, {{5, 3, 3, 1}, 5}, {{4, 4, 4}, 3},    {{4, 4, 3, 1}, 7},
          {{4, 4, 2, 2}, 8}, {{4, 3, 3, 2}, 8}, {{3, 3, 3, 3}, 3}};
}

inline bool section_2_2_witness_matches() {
  auto mb = to_m_basis(section_2_2_difference(), tangent_alphabet());
  auto w = section_2_2_witness();
  if (mb.size() != w.size()) return false;
  for (auto& [pat, coeff] : mb) {
    auto it = w.find(pat);
    if (it == w.end() || !coeff.is_constant() || coeff.constant_value() != it->second)
      return false;
  }
  return true;
}

// the displayed C3 inequality for edge-tangential tetrahedra is the witness
// identity rescaled by 64^2 (and 8^4 on the face product)
inline bool section_2_2_display_scaling() {
  const Alphabet& t = tangent_alphabet();
  SymPoly e2 = elementary(2, t), e4 = elementary(4, t);
  SymPoly core = e2 * (2 * e4 + monomial_sym({2, 1, 1}, t));
  SymPoly faces = SymPoly::constant(1);
  for (int skip = 0; skip < 4; ++skip) {
    Alphabet face;
    for (int i = 0; i < 4; ++i)
      if (i != skip) face.push_back(t[size_t(i)]);
    faces *= elementary(1, face) * elementary(2, face);
  }
  return (64 * core).pow(2) - 4096 * faces == 4096 * section_2_2_difference();
}

// ---------------------------------------------------------------------------
// Strong four-points difference for edge-tangential tetrahedra:
// (Re D4 - 19/4 * 288 V^2) - 64 prod r - 17/4 sum_l cone_l d3(face_l).

inline SymPoly section_2_3_difference() {
  SymPoly lhs = re_d4_sym() - Rational(19, 2) * cayley_menger_144v2_sym();
  SymPoly rhs = 64 * distance_product_sym();
  for (int l = 1; l <= 4; ++l) {
    std::vector<int> rest;
    for (int m = 1; m <= 4; ++m)
      if (m != l) rest.push_back(m);
    SymPoly cone = distance_var(rest[0], l) * distance_var(rest[1], l) * distance_var(rest[2], l);
    SymPoly face = d3_sym(distance_var(rest[0], rest[1]), distance_var(rest[0], rest[2]),
                          distance_var(rest[1], rest[2]));
    rhs += Rational(17, 4) * (cone * face);
  }
  return edge_tangential(lhs - rhs);
}

// 30 m3111 + 54 m222 - 56 m2211, equivalently 5 mt3111 + 9 mt222 - 14 mt2211
inline bool section_2_3_witness_matches() {
  const Alphabet& t = tangent_alphabet();
  SymPoly diff = section_2_3_difference();
  bool plain = diff == 30 * monomial_sym({3, 1, 1, 1}, t) + 54 * monomial_sym({2, 2, 2}, t) -
                           56 * monomial_sym({2, 2, 1, 1}, t);
  bool augmented = diff == 5 * augmented_monomial({3, 1, 1, 1}, t) +
                               9 * augmented_monomial({2, 2, 2}, t) -
                               14 * augmented_monomial({2, 2, 1, 1}, t);
  return plain && augmented;
}

// nonnegativity via Muirhead: the difference is a positive combination of
// majorization gaps 5 (mt3111 - mt2211) + 9 (mt222 - mt2211)
inline bool section_2_3_muirhead_route() {
  const Alphabet& t = tangent_alphabet();
  SymPoly gap1 = augmented_monomial({3, 1, 1, 1}, t) - augmented_monomial({2, 2, 1, 1}, t);
  SymPoly gap2 = augmented_monomial({2, 2, 2}, t) - augmented_monomial({2, 2, 1, 1}, t);
  bool decomposition = section_2_3_difference() == 5 * gap1 + 9 * gap2;
  bool dominance =
      majorizes({3, 1, 1, 1}, {2, 2, 1, 1}) && majorizes({2, 2, 2}, {2, 2, 1, 1});
  return decomposition && dominance;
}

// ---------------------------------------------------------------------------
// Proposition 6.1 / Remark 6.3: Schur-type identities behind d3 bounds.
// One alphabet in slots 0..2, a second alphabet in slots 3..5.

struct SchurIdentitySuite {
  bool product_minus_d3 = false;      // xyz - d3 = Schur sum
  bool squares_residual = false;      // square decomposition with the -4xyz Schur correction
  bool squares_route = false;         // Cauchy identity closing the positivity route
  bool squares_linear = false;        // d3^2 - d3(sq) = 8x^2y^2z^2 - 2(xyz + sum x^3) d3
  bool weighted_squares = false;      // (sum x)^2 d3^2 - 3(sum x^2) d3(sq) = 4 Schur(alpha=2) form
  bool two_alphabet = false;          // mixed-alphabet expansion of the product inequality gap
  bool half_squares = false;          // xyz - d3 = 1/2 sum (-x+y+z)(y-z)^2
  bool all() const {
    return product_minus_d3 && squares_residual && squares_route && squares_linear &&
           weighted_squares && two_alphabet && half_squares;
  }
};

inline SchurIdentitySuite schur_identity_suite_sym() {
  SymPoly x = SymPoly::var(0), y = SymPoly::var(1), z = SymPoly::var(2);
  SymPoly X = SymPoly::var(3), Y = SymPoly::var(4), Z = SymPoly::var(5);
  std::array<std::array<SymPoly, 3>, 3> cyc = {{{x, y, z}, {y, z, x}, {z, x, y}}};
  std::array<std::array<SymPoly, 3>, 3> cyc2 = {{{X, Y, Z}, {Y, Z, X}, {Z, X, Y}}};
  SymPoly d3 = d3_sym(x, y, z);
  SymPoly d3sq = d3_sym(x.pow(2), y.pow(2), z.pow(2));
  SymPoly schur1;
  for (auto& [u, v, w] : cyc) schur1 += u * (u - v) * (u - w);
  SchurIdentitySuite out;
  out.product_minus_d3 = x * y * z - d3 == schur1;

  SymPoly s2a, s2b;
  for (auto& [u, v, w] : cyc) {
    SymPoly B = v.pow(2) - v * w + w.pow(2) - u.pow(2);
    s2a += u.pow(2) * B.pow(2);
    s2b += u * B;
  }
  out.squares_residual = (d3.pow(2) - d3sq == s2a + s2b.pow(2) - 4 * (x * y * z) * schur1) &&
                         (s2b == -schur1);
  out.squares_route = 3 * (x.pow(2) + y.pow(2) + z.pow(2)) - (x + y + z).pow(2) ==
                      (x - y).pow(2) + (y - z).pow(2) + (z - x).pow(2);
  out.squares_linear =
      d3.pow(2) - d3sq ==
      8 * (x.pow(2) * y.pow(2) * z.pow(2)) -
          2 * ((x * y * z + x.pow(3) + y.pow(3) + z.pow(3)) * d3);
  SymPoly schur2_quartic;
  for (auto& [u, v, w] : cyc)
    schur2_quartic += u.pow(4) * (u.pow(2) - v.pow(2)) * (u.pow(2) - w.pow(2));
  out.weighted_squares =
      (x + y + z).pow(2) * d3.pow(2) - 3 * ((x.pow(2) + y.pow(2) + z.pow(2)) * d3sq) ==
      4 * schur2_quartic;

  SymPoly lhs5 = (x + y + z) * (X + Y + Z) * d3 * d3_sym(X, Y, Z) -
                 3 * ((x * X + y * Y + z * Z) * d3_sym(x * X, y * Y, z * Z));
  SymPoly s5;
  for (size_t i = 0; i < 3; ++i) {
    auto& [u, v, w] = cyc[i];
    auto& [U, V, W] = cyc2[i];
    s5 += u.pow(2) * (u.pow(2) - v.pow(2)) * U.pow(2) * (U.pow(2) - W.pow(2)) +
          U.pow(2) * (U.pow(2) - V.pow(2)) * u.pow(2) * (u.pow(2) - w.pow(2));
  }
  SymPoly sq5 = (x.pow(2) * (Y.pow(2) - Z.pow(2)) + y.pow(2) * (Z.pow(2) - X.pow(2)) +
                 z.pow(2) * (X.pow(2) - Y.pow(2)))
                    .pow(2);
  out.two_alphabet = lhs5 == 2 * s5 + sq5;

  SymPoly half;
  for (auto& [u, v, w] : cyc) half += (v + w - u) * (v - w).pow(2);
  out.half_squares = x * y * z - d3 == Rational(1, 2) * half;
  return out;
}

// I_alpha = sum x^alpha (x - y)(x - z) >= 0 for x >= y >= z >= 0 via the
// substitution x = z + h + k, y = z + k
inline Certificate schur_power_cert(int alpha) {
  SymPoly x = SymPoly::var(0), y = SymPoly::var(1), z = SymPoly::var(2);
  SymPoly ia = x.pow(alpha) * (x - y) * (x - z) + y.pow(alpha) * (y - x) * (y - z) +
               z.pow(alpha) * (z - x) * (z - y);
  return detail::run_substitution_cert("schur-power-" + std::to_string(alpha), 3, ia, {0, 1, 2},
                                       {});
}

// H2 = x(x-y)X(X-Z) + y(y-x)Y(Y-Z) + z(z-x)Z(Z-Y) >= 0 on two ascending
// alphabets, by telescoping both chains
inline Certificate two_alphabet_h2_cert() {
  auto t0 = std::chrono::steady_clock::now();
  SymPoly x = SymPoly::var(0), y = SymPoly::var(1), z = SymPoly::var(2);
  SymPoly X = SymPoly::var(3), Y = SymPoly::var(4), Z = SymPoly::var(5);
  SymPoly h2 = x * (x - y) * X * (X - Z) + y * (y - x) * Y * (Y - Z) + z * (z - x) * Z * (Z - Y);
  SymPoly sub = telescope_substitute(telescope_substitute(h2, {2, 1, 0}), {5, 4, 3});
  Certificate cert;
  cert.id = "two-alphabet-H2";
  cert.n = 3;
  if (sub.all_coeffs_nonneg()) {
    cert.status = CertStatus::pass;
    cert.detail = "nonnegative coefficients after ascending substitution on both alphabets";
  } else {
    cert.status = CertStatus::inconclusive;
    cert.detail = "negative coefficient after substitution";
  }
  cert.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return cert;
}

// ---------------------------------------------------------------------------
// Upright tetrahedra: base triangle a, b, c and equal apex distances d
// (slots 6..9). The strong four-points gap decomposes into two blocks after
// clearing the (a+b+c) denominator.

struct UprightDecomposition {
  bool identity_holds = false;  // (LHS - RHS)(a+b+c) == part_one + part_two
  SymPoly gap_scaled;           // (LHS - RHS)(a+b+c)
  SymPoly part_one_scaled;      // block I times (a+b+c)
  SymPoly part_two_scaled;      // block II times (a+b+c)
};

namespace detail {

// bordered 5x5 Cayley-Menger determinant, equal to 288 V^2
inline SymPoly cm_288v2(const std::array<SymPoly, 6>& sq) {
  const SymPoly zero, one = SymPoly::constant(1);
  // sq order: s12 s13 s14 s23 s24 s34
  std::vector<std::vector<SymPoly>> M = {{zero, one, one, one, one},
                                         {one, zero, sq[0], sq[1], sq[2]},
                                         {one, sq[0], zero, sq[3], sq[4]},
                                         {one, sq[1], sq[3], zero, sq[5]},
                                         {one, sq[2], sq[4], sq[5], zero}};
  return sympoly_det(M);
}

}  // namespace detail

// the bordered determinant agrees with the three-product expansion
inline bool bordered_cm_matches_expansion() {
  std::array<SymPoly, 6> sq;
  for (int s = 0; s < 6; ++s) sq[size_t(s)] = SymPoly::var(s, 2);
  return detail::cm_288v2(sq) == 2 * cayley_menger_144v2_sym();
}

inline UprightDecomposition upright_gap_decomposition() {
  SymPoly a = SymPoly::var(6), b = SymPoly::var(7), c = SymPoly::var(8), d = SymPoly::var(9);
  // r12 = c, r13 = b, r14 = d, r23 = a, r24 = d, r34 = d
  std::array<SymPoly, 6> repl = {c, b, d, a, d, d};
  SymPoly red4 = substitute_distances(re_d4_sym(), repl);
  SymPoly v288 = 2 * substitute_distances(cayley_menger_144v2_sym(), repl);
  SymPoly prod_r = substitute_distances(distance_product_sym(), repl);
  SymPoly lhs = red4 - 4 * v288;
  SymPoly rhs = 64 * prod_r;
  {
    std::array<SymPoly, 6> rv = repl;
    auto rr = [&](int i, int j) { return rv[size_t(distance_slot(i, j))]; };
    for (int l = 1; l <= 4; ++l) {
      std::vector<int> rest;
      for (int m = 1; m <= 4; ++m)
        if (m != l) rest.push_back(m);
      int i = rest[0], j = rest[1], k = rest[2];
      rhs += Rational(17, 4) * (rr(i, l) * rr(j, l) * rr(k, l) *
                                d3_sym(rr(i, j), rr(i, k), rr(j, k)));
    }
  }
  SymPoly per = a + b + c;
  SymPoly d3abc = d3_sym(a, b, c);
  SymPoly abc = a * b * c;
  SymPoly sq_sum = a.pow(2) + b.pow(2) + c.pow(2);
  SymPoly sym31 = a.pow(3) * b + a * b.pow(3) + a.pow(3) * c + a * c.pow(3) + b.pow(3) * c +
                  b * c.pow(3);
  SymPoly mixed = a.pow(3) * b.pow(2) * c + a.pow(3) * b * c.pow(2) + a.pow(2) * b.pow(3) * c +
                  a * b.pow(3) * c.pow(2) + a.pow(2) * b * c.pow(3) + a * b.pow(2) * c.pow(3);
  UprightDecomposition out;
  out.part_one_scaled =
      ((4 * (abc * (a * b + a * c + b * c)) - sq_sum * d3abc) * per - 24 * abc.pow(2)) * d +
      (6 * abc.pow(2) - mixed) * per;
  out.part_two_scaled =
      d * (Rational(15, 4) * (d3abc * d.pow(2) * per) +
           per.pow(2) * ((Rational(7, 2) * abc - 4 * d3abc) * d) + 24 * abc.pow(2) +
           Rational(1, 4) * (abc * sq_sum * per) -
           per.pow(2) * (sym31 - a.pow(4) - b.pow(4) - c.pow(4)));
  out.gap_scaled = (lhs - rhs) * per;
  out.identity_holds = out.gap_scaled == out.part_one_scaled + out.part_two_scaled;
  return out;
}

// 9 a^2 b^2 c^2 - (a^2+b^2+c^2)(a+b+c) d3 as a Schur-type expression
inline bool upright_lemma_2_4_identity() {
  SymPoly a = SymPoly::var(6), b = SymPoly::var(7), c = SymPoly::var(8);
  SymPoly lhs = 9 * (a.pow(2) * b.pow(2) * c.pow(2)) -
                (a.pow(2) + b.pow(2) + c.pow(2)) * (a + b + c) * d3_sym(a, b, c);
  SymPoly rhs = (a.pow(2) - b.pow(2)) *
                    (a.pow(2) * (a.pow(2) - c.pow(2)) - b.pow(2) * (b.pow(2) - c.pow(2))) +
                c.pow(2) * (a.pow(2) - c.pow(2)) * (b.pow(2) - c.pow(2));
  return lhs == rhs;
}

// Lemma 2.5: the discriminant-style combination has strictly positive
// coefficients after the ordered shift a = b + h, b = c + k
inline Certificate upright_lemma_2_5_cert() {
  auto t0 = std::chrono::steady_clock::now();
  SymPoly a = SymPoly::var(6), b = SymPoly::var(7), c = SymPoly::var(8);
  SymPoly d3abc = d3_sym(a, b, c);
  SymPoly abc = a * b * c;
  SymPoly per = a + b + c;
  SymPoly big =
      ((4 * (abc * (a * b + a * c + b * c)) - (a.pow(2) + b.pow(2) + c.pow(2)) * d3abc) * per -
       24 * abc.pow(2))
          .pow(2) -
      per.pow(3) *
          (a.pow(2) * b + a * b.pow(2) + a.pow(2) * c + a * c.pow(2) + b.pow(2) * c +
           b * c.pow(2) - 6 * abc)
              .pow(2) *
          d3abc;
  SymPoly sub = telescope_substitute(big, {6, 7, 8});
  Certificate cert;
  cert.id = "upright-lemma-2.5";
  cert.n = 3;
  size_t count = 0;
  Rational lo, hi;
  bool first = true, all_positive = true;
  for (const auto& [m, coef] : sub.terms) {
    ++count;
    if (coef <= 0) all_positive = false;
    if (first) {
      lo = hi = coef;
      first = false;
    } else {
      if (coef < lo) lo = coef;
      if (coef > hi) hi = coef;
    }
  }
  if (all_positive && count > 0) {
    cert.status = CertStatus::pass;
    std::ostringstream os;
    os << count << " strictly positive coefficients, range " << lo.str() << ".." << hi.str();
    cert.detail = os.str();
  } else {
    cert.status = CertStatus::inconclusive;
    cert.detail = "nonpositive coefficient after ordered shift";
  }
  cert.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return cert;
}

// ---------------------------------------------------------------------------
// Trirectangular tetrahedra: legs x, y, z (slots 6..8) and face diagonals
// a, b, c (slots 9..11) with a^2 = y^2 + z^2 etc.

namespace detail {

inline SymPoly tri_reduce(const SymPoly& p) {
  SymPoly x = SymPoly::var(6), y = SymPoly::var(7), z = SymPoly::var(8);
  return p.reduce_square(9, y.pow(2) + z.pow(2))
      .reduce_square(10, x.pow(2) + z.pow(2))
      .reduce_square(11, x.pow(2) + y.pow(2));
}

}  // namespace detail

struct TrirectangularSuite {
  bool volume = false;    // 144 V^2 = 4 x^2 y^2 z^2
  bool d3_faces = false;  // d3(a,b,c) = 2(a x^2 + b y^2 + c z^2 - abc)
  bool d3_legs = false;   // d3(x,y,c) = 2 x y (x + y - c)
  bool endpoint = false;  // Re D4 - 64 prod r - 288 V^2 as an explicit positive combination
  bool all() const { return volume && d3_faces && d3_legs && endpoint; }
};

inline TrirectangularSuite trirectangular_suite() {
  SymPoly x = SymPoly::var(6), y = SymPoly::var(7), z = SymPoly::var(8);
  SymPoly a = SymPoly::var(9), b = SymPoly::var(10), c = SymPoly::var(11);
  // r12 = c, r13 = b, r14 = x, r23 = a, r24 = y, r34 = z
  std::array<SymPoly, 6> repl = {c, b, x, a, y, z};
  TrirectangularSuite out;
  SymPoly v144 = detail::tri_reduce(substitute_distances(cayley_menger_144v2_sym(), repl));
  out.volume = v144 == 4 * (x.pow(2) * y.pow(2) * z.pow(2));
  out.d3_faces = detail::tri_reduce(d3_sym(a, b, c) -
                                    2 * (a * x.pow(2) + b * y.pow(2) + c * z.pow(2) - a * b * c))
                     .is_zero();
  out.d3_legs = detail::tri_reduce(d3_sym(x, y, c) - 2 * (x * y * (x + y - c))).is_zero();
  SymPoly red4 = detail::tri_reduce(substitute_distances(re_d4_sym(), repl));
  SymPoly lhs = red4 - 64 * (a * b * c * x * y * z) - 2 * v144;
  std::array<std::array<SymPoly, 6>, 3> cyc = {
      {{x, y, z, a, b, c}, {y, z, x, b, c, a}, {z, x, y, c, a, b}}};
  SymPoly s;
  for (auto& [X, Y, Z, A, B, C] : cyc) s += (2 * (A * B) + C * Z + 2 * Z.pow(2)) * (X + Y - C);
  SymPoly endpoint = 4 * (x * y * z) * (2 * d3_sym(a, b, c) + s);
  out.endpoint = detail::tri_reduce(lhs - endpoint).is_zero();
  return out;
}

// ---------------------------------------------------------------------------
// Parallelograms: sides a, b (slots 6, 7), diagonals e, f (slots 8, 9), and
// the cosine parameter t (slot 10) with e^2 = a^2 + b^2 - 2abt,
// f^2 = a^2 + b^2 + 2abt.

namespace detail {

inline SymPoly par_reduce(const SymPoly& p) {
  SymPoly a = SymPoly::var(6), b = SymPoly::var(7), t = SymPoly::var(10);
  SymPoly base = a.pow(2) + b.pow(2);
  return p.reduce_square(8, base - 2 * (a * b * t)).reduce_square(9, base + 2 * (a * b * t));
}

}  // namespace detail

struct ParallelogramSuite {
  bool planar = false;              // 144 V^2 = 0
  bool diagonal_law = false;        // e^2 + f^2 = 2(a^2 + b^2)
  bool item1 = false;               // d3(a,b,e) = (a+b-e)(a+b-f)(a+b+f)
  bool item2 = false;               // (a+b+e) d3(a,b,e) = (a+b+f) d3(a,b,f) = Delta
  bool item3 = false;               // 4ab + e^2 - f^2 = 2(a+b+f)(a+b-f)
  bool item4 = false;               // d3(a^2,b^2,ef) = (a^2+b^2-ef) Delta
  bool item5 = false;               // d3e d3f - d3(a^2,b^2,ef) = (2ab+2ef-(a+b)(e+f)) Delta
  bool item5_printed_sign_fails = false;  // the -2ef variant does not vanish
  bool item6 = false;               // e d3f + f d3e = (a+b-e)(a+b-f)(e^2+f^2+(a+b)(e+f))
  bool item7 = false;               // the weighted combination equals 2((a+b)(e+f)-2ef) Delta
  bool strengthened_c3 = false;     // D4 minus the C3 right side as an explicit product
  bool all() const {
    return planar && diagonal_law && item1 && item2 && item3 && item4 && item5 &&
           item5_printed_sign_fails && item6 && item7 && strengthened_c3;
  }
};

inline ParallelogramSuite parallelogram_suite() {
  SymPoly a = SymPoly::var(6), b = SymPoly::var(7), e = SymPoly::var(8), f = SymPoly::var(9);
  auto red = [](const SymPoly& p) { return detail::par_reduce(p); };
  ParallelogramSuite out;
  // r12 = a, r13 = e, r14 = b, r23 = b, r24 = f, r34 = a
  std::array<SymPoly, 6> repl = {a, e, b, b, f, a};
  out.planar = red(substitute_distances(cayley_menger_144v2_sym(), repl)).is_zero();
  out.diagonal_law = red(e.pow(2) + f.pow(2) - 2 * (a.pow(2) + b.pow(2))).is_zero();
  SymPoly delta = red(2 * (a.pow(2) * b.pow(2)) + 2 * (a.pow(2) * e.pow(2)) +
                      2 * (b.pow(2) * e.pow(2)) - a.pow(4) - b.pow(4) - e.pow(4));
  SymPoly d3e = d3_sym(a, b, e), d3f = d3_sym(a, b, f);
  out.item1 = red(d3e - (a + b - e) * (a + b - f) * (a + b + f)).is_zero() &&
              red(d3f - (a + b - f) * (a + b - e) * (a + b + e)).is_zero();
  out.item2 = red((a + b + e) * d3e) == delta && red((a + b + f) * d3f) == delta &&
              red((a + b + e) * (a + b + f) * (a + b - e) * (a + b - f)) == delta;
  out.item3 = red(4 * (a * b) + e.pow(2) - f.pow(2) - 2 * ((a + b + f) * (a + b - f))).is_zero() &&
              red(4 * (a * b) + f.pow(2) - e.pow(2) - 2 * ((a + b + e) * (a + b - e))).is_zero();
  SymPoly d3sq = d3_sym(a.pow(2), b.pow(2), e * f);
  out.item4 = red(d3sq) == red((a.pow(2) + b.pow(2) - e * f) * delta);
  SymPoly item5_lhs = red(d3e * d3f - d3sq);
  out.item5 = item5_lhs == red((2 * (a * b) + 2 * (e * f) - (a + b) * (e + f)) * delta);
  out.item5_printed_sign_fails =
      !(item5_lhs == red((2 * (a * b) - 2 * (e * f) - (a + b) * (e + f)) * delta));
  out.item6 = red(e * d3f + f * d3e -
                  (a + b - e) * (a + b - f) * (e.pow(2) + f.pow(2) + (a + b) * (e + f)))
                  .is_zero();
  out.item7 = red((4 * (a * b) + e.pow(2) - f.pow(2)) * (e * d3f) +
                  (4 * (a * b) + f.pow(2) - e.pow(2)) * (f * d3e) -
                  2 * (((a + b) * (e + f) - 2 * (e * f)) * delta))
                  .is_zero();
  SymPoly d4 = red(substitute_distances(re_d4_sym(), repl));  // planar, so D4 is real
  SymPoly c3_gap = red(d4 - 2 * (d3e * d3f) - 8 * (a * b * f * d3e + a * b * e * d3f) -
                       64 * (a.pow(2) * b.pow(2) * e * f));
  out.strengthened_c3 =
      c3_gap == red(2 * ((4 * (a * b) - (a + b - e) * (a + b - f)) * ((a + b + e) * d3e)));
  return out;
}

// ---------------------------------------------------------------------------
// Wedge tetrahedra: r13 = r24 = a, r14 = r23 = b, r12 = x, r34 = y
// (slots 6..9), generic otherwise.

struct WedgeSuite {
  bool volume_factorization = false;  // Eq for 144 V^2 as a three-factor product
  bool first_formula = false;
  bool second_formula = false;
  bool interchange = false;  // the product identity linking the two formulas
  bool all() const {
    return volume_factorization && first_formula && second_formula && interchange;
  }
};

inline WedgeSuite wedge_suite() {
  SymPoly a = SymPoly::var(6), b = SymPoly::var(7), x = SymPoly::var(8), y = SymPoly::var(9);
  // r12 = x, r13 = a, r14 = b, r23 = b, r24 = a, r34 = y
  std::array<SymPoly, 6> repl = {x, a, b, b, a, y};
  SymPoly v144 = substitute_distances(cayley_menger_144v2_sym(), repl);
  SymPoly red4 = substitute_distances(re_d4_sym(), repl);
  SymPoly d3x = d3_sym(a, b, x), d3y = d3_sym(a, b, y);
  SymPoly asq = a.pow(2), bsq = b.pow(2);
  SymPoly amb2 = (a - b).pow(2);
  SymPoly spread = 2 * asq + 2 * bsq - x.pow(2) - y.pow(2);
  WedgeSuite out;
  out.volume_factorization =
      v144 == (x * y - asq + bsq) * (x * y + asq - bsq) * spread;
  SymPoly first = (d3x + 8 * (a * b * x)) * (d3y + 8 * (a * b * y)) + d3x * d3y +
                  2 * (x * ((a + b).pow(2) - y.pow(2)) * d3y) +
                  2 * (y * ((a + b).pow(2) - x.pow(2)) * d3x) +
                  4 * ((asq + bsq - x * y) * spread * amb2) +
                  2 * ((x * y - amb2) * (x.pow(2) - amb2) * (y.pow(2) - amb2)) + 2 * v144;
  out.first_formula = red4 == first;
  SymPoly second = (d3x + 8 * (a * b * x)) * (d3y + 8 * (a * b * y)) + 3 * (d3x * d3y) +
                   2 * (x * ((a + b).pow(2) - y.pow(2)) * d3y) +
                   2 * (y * ((a + b).pow(2) - x.pow(2)) * d3x) +
                   2 * ((x.pow(2) * y.pow(2) - (asq - bsq).pow(2)) *
                        (x * (a + b - x) + y * (a + b - y))) +
                   2 * (amb2 * (x * (a + b - y) + y * (a + b - x)) * spread);
  out.second_formula = red4 == second;
  out.interchange = (x.pow(2) - amb2) * (y.pow(2) - amb2) ==
                    (x * y - asq + bsq) * (x * y + asq - bsq) + amb2 * spread;
  return out;
}

// ---------------------------------------------------------------------------
// Semiregular tetrahedra (opposite edges equal): r12 = r34 = A, r13 = r24 = B,
// r14 = r23 = C (slots 6..8).

struct SemiregularSuite {
  bool volume = false;      // 288 V^2 = 4 d3(A^2, B^2, C^2)
  bool a4 = false;          // A4 = 4 d3(A,B,C)^2 + 32 ABC d3(A,B,C)
  bool weak_gap = false;    // weak four-points gap = 3 (d3^2 - d3sq) + 16 (ABC d3 - d3sq)
  bool strong_gap = false;  // strong four-points gap = 4 (d3^2 - d3sq) + 15 (ABC d3 - d3sq)
  bool all() const { return volume && a4 && weak_gap && strong_gap; }
};

inline SemiregularSuite semiregular_suite() {
  SymPoly A = SymPoly::var(6), B = SymPoly::var(7), C = SymPoly::var(8);
  std::array<SymPoly, 6> repl = {A, B, C, C, B, A};
  SymPoly v144 = substitute_distances(cayley_menger_144v2_sym(), repl);
  SymPoly red4 = substitute_distances(re_d4_sym(), repl);
  SymPoly d3s = d3_sym(A, B, C);
  SymPoly d3sq = d3_sym(A.pow(2), B.pow(2), C.pow(2));
  SymPoly abc = A * B * C;
  SemiregularSuite out;
  out.volume = 2 * v144 == 4 * d3sq;
  out.a4 = substitute_distances(a4_face_form_sym(), repl) ==
           4 * d3s.pow(2) + 32 * (abc * d3s);
  SymPoly weak = red4 - Rational(19, 2) * v144 - 64 * abc.pow(2) - 16 * (abc * d3s) -
                 d3s.pow(2);
  out.weak_gap = weak == 3 * (d3s.pow(2) - d3sq) + 16 * (abc * d3s - d3sq);
  SymPoly strong = red4 - Rational(19, 2) * v144 - 64 * abc.pow(2) - 17 * (abc * d3s);
  out.strong_gap = strong == 4 * (d3s.pow(2) - d3sq) + 15 * (abc * d3s - d3sq);
  return out;
}

}  // namespace atiyah
