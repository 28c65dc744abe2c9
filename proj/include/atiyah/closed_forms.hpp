#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "geometry.hpp"
#include "identities.hpp"
#include "rng.hpp"

// Numeric evaluation of the closed formulas for three and four points: the
// Eastwood-Norbury expansion of Re(D_4) and its regroupings, the Four Points
// Conjecture gap, the trigonometric forms, and the d3/Schur inequality suite.
// The exact rational counterparts live in identities.hpp; this header is the
// floating-point face used by family sweeps and random scans.

namespace atiyah {

template <typename R>
R d3(const R& a, const R& b, const R& c) {
  return (a + b - c) * (b + c - a) * (c + a - b);
}

// ---------------------------------------------------------------------------
// Distance data for four labeled points.

struct DistanceData {
  double r12{}, r13{}, r14{}, r23{}, r24{}, r34{};

  double operator()(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > 4 || i == j) throw std::out_of_range("distance pair");
    switch (3 * (i - 1) + (j - 2)) {
      case 0: return r12;
      case 1: return r13;
      case 2: return r14;
      case 4: return r23;
      case 5: return r24;
      default: return r34;
    }
  }

  std::array<double, 6> as_array() const { return {r12, r13, r14, r23, r24, r34}; }

  static DistanceData from_points(const Configuration<double>& pts) {
    if (pts.size() != 4) throw std::domain_error("distance data needs exactly 4 points");
    return {distance(pts[0], pts[1]), distance(pts[0], pts[2]), distance(pts[0], pts[3]),
            distance(pts[1], pts[2]), distance(pts[1], pts[3]), distance(pts[2], pts[3])};
  }

  void validate() const {
    for (double r : as_array())
      if (!(r > 0)) throw std::domain_error("distances must be positive");
  }
};

// Face opposite vertex l, listed with increasing labels.
inline std::array<int, 3> face_of(int l) {
  std::array<int, 3> f{};
  int k = 0;
  for (int m = 1; m <= 4; ++m)
    if (m != l) f[size_t(k++)] = m;
  return f;
}

inline double face_d3(const DistanceData& d, int l) {
  auto [i, j, k] = face_of(l);
  return d3(d(i, j), d(i, k), d(j, k));
}

inline double face_product(const DistanceData& d, int l) {
  auto [i, j, k] = face_of(l);
  return d(i, j) * d(i, k) * d(j, k);
}

// Product of the three edges meeting at vertex l.
inline double cone_product(const DistanceData& d, int l) {
  auto [i, j, k] = face_of(l);
  return d(i, l) * d(j, l) * d(k, l);
}

inline double prod_r(const DistanceData& d) {
  double p = 1;
  for (double r : d.as_array()) p *= r;
  return p;
}

// Weak triangle inequality on all four faces, up to eps times the cube of the
// largest edge.
inline bool faces_valid(const DistanceData& d, double eps = 1e-12) {
  double scale = 0;
  for (double r : d.as_array()) scale = std::max(scale, r);
  for (int l = 1; l <= 4; ++l)
    if (face_d3(d, l) < -eps * scale * scale * scale) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Tetrahedron scalars.

// 144 V^2 as the symmetric three-product expansion of the Cayley-Menger
// determinant. Negative output means the distances are not embeddable.
inline double vol2(const DistanceData& d) {
  auto s = [&d](int i, int j) { return d(i, j) * d(i, j); };
  double t1 = s(1, 2) * s(3, 4) * (s(1, 3) + s(1, 4) + s(2, 3) + s(2, 4) - s(1, 2) - s(3, 4));
  double t2 = s(1, 3) * s(2, 4) * (s(1, 2) + s(1, 4) + s(2, 3) + s(3, 4) - s(1, 3) - s(2, 4));
  double t3 = s(1, 4) * s(2, 3) * (s(1, 2) + s(1, 3) + s(2, 4) + s(3, 4) - s(1, 4) - s(2, 3));
  double f = s(1, 2) * s(1, 3) * s(2, 3) + s(1, 2) * s(1, 4) * s(2, 4) +
             s(1, 3) * s(1, 4) * s(3, 4) + s(2, 3) * s(2, 4) * s(3, 4);
  return t1 + t2 + t3 - f;
}

// d3 of the three opposite-edge products (the sides of the Moebius difference
// triangle when the four points are coplanar).
inline double mobius_d3(const DistanceData& d) {
  return d3(d(1, 2) * d(3, 4), d(1, 3) * d(2, 4), d(1, 4) * d(2, 3));
}

enum class A4Form { sum, face };

inline double a4(const DistanceData& d, A4Form form) {
  double tot = 0;
  for (int l = 1; l <= 4; ++l) {
    auto [i, j, k] = face_of(l);
    double face = face_d3(d, l);
    if (form == A4Form::face) {
      double A = d(i, l), B = d(j, l), C = d(k, l);
      double cone = d3(A, B, C) + 8 * A * B * C + A * (A * A - d(j, k) * d(j, k)) +
                    B * (B * B - d(i, k) * d(i, k)) + C * (C * C - d(i, j) * d(i, j));
      tot += cone * face;
    } else {
      double inner = 0;
      std::array<int, 3> f = {i, j, k};
      for (int u = 0; u < 3; ++u) {
        int p = f[size_t(u)], q = f[size_t((u + 1) % 3)], w = f[size_t((u + 2) % 3)];
        double sum = d(l, q) + d(l, w);
        inner += d(l, p) * (sum * sum - d(q, w) * d(q, w));
      }
      tot += inner * face;
    }
  }
  return tot;
}

// Eastwood-Norbury: Re(D_4) = 64 prod r - 4 d3(opposite-edge products) + A_4
// + 288 V^2.
inline double re_d4(const DistanceData& d) {
  return 64 * prod_r(d) - 4 * mobius_d3(d) + a4(d, A4Form::face) + 2 * vol2(d);
}

// 144 V^2 - 2 d3(opposite-edge products), the grouping of the volume and
// Moebius terms that is manifestly nonpositive for embeddable distances.
inline double volume_mobius_gap(const DistanceData& d) {
  return vol2(d) - 2 * mobius_d3(d);
}

// The same quantity regrouped into squared-difference blocks minus the four
// squared face products.
inline double volume_mobius_gap_regrouped(const DistanceData& d) {
  double p1 = d(1, 2) * d(3, 4), p2 = d(1, 3) * d(2, 4), p3 = d(1, 4) * d(2, 3);
  auto sq = [](double x) { return x * x; };
  double blocks = sq(d(1, 2) - d(3, 4)) * (sq(p2) + sq(p3) - sq(p1)) +
                  sq(d(1, 3) - d(2, 4)) * (sq(p1) + sq(p3) - sq(p2)) +
                  sq(d(1, 4) - d(2, 3)) * (sq(p1) + sq(p2) - sq(p3));
  double faces = 0;
  for (int l = 1; l <= 4; ++l) faces += sq(face_product(d, l));
  return blocks + 4 * prod_r(d) - faces;
}

// Re(D_4) assembled through the regrouped volume and Moebius terms; agrees
// with re_d4 identically.
inline double re_d4_regrouped(const DistanceData& d) {
  return 64 * prod_r(d) + a4(d, A4Form::face) + 2 * volume_mobius_gap_regrouped(d);
}

struct TetraScalars {
  double vol2{};
  double a4{};
  double re_d4{};
  std::array<double, 4> d3_faces{};
  double prod_r{};
};

inline TetraScalars tetra_scalars(const DistanceData& d) {
  d.validate();
  TetraScalars out;
  out.vol2 = vol2(d);
  double af = a4(d, A4Form::face);
  double as = a4(d, A4Form::sum);
  double scale = std::max({std::fabs(af), std::fabs(as), 1e-300});
  if (std::fabs(af - as) > 1e-10 * scale)
    throw std::logic_error("a4 sum-form and face-form disagree");
  out.a4 = af;
  out.re_d4 = re_d4(d);
  for (int l = 1; l <= 4; ++l) out.d3_faces[size_t(l - 1)] = face_d3(d, l);
  out.prod_r = prod_r(d);
  return out;
}

// Right side of the C3 inequality for four points: the product over faces of
// the face Atiyah determinants.
inline double c3_rhs(const DistanceData& d) {
  double p = 1;
  for (int l = 1; l <= 4; ++l) p *= face_d3(d, l) + 8 * face_product(d, l);
  return p;
}

// ---------------------------------------------------------------------------
// Four Points Conjecture gap.

enum class GapMode { weak, strong };

namespace detail {

inline double four_points_rhs(const DistanceData& d, GapMode mode) {
  double rhs = 64 * prod_r(d);
  for (int l = 1; l <= 4; ++l) {
    double delta = mode == GapMode::strong ? 1.0 : face_d3(d, l) / face_product(d, l);
    rhs += (4 + 0.25 * delta) * cone_product(d, l) * face_d3(d, l);
  }
  return rhs;
}

}  // namespace detail

// LHS - RHS of the Four Points Conjecture: Re(D_4) - (4 + 3/4) 288 V^2 minus
// 64 prod r + sum over faces of (4 + delta/4) cone_l d3(face_l), where delta
// is d3(face)/prod(face) in weak mode and 1 in strong mode. Since
// d3(face) <= prod(face) by Schur, the strong gap never exceeds the weak gap,
// which is asserted. In weak mode the right side is cross-checked against its
// half-angle cosine restatement, 4 prod r sum_l c_l^2.
inline double four_points_gap(const DistanceData& d, GapMode mode) {
  d.validate();
  double lhs = re_d4(d) - 4.75 * 2 * vol2(d);
  double weak_rhs = detail::four_points_rhs(d, GapMode::weak);
  double strong_rhs = detail::four_points_rhs(d, GapMode::strong);
  double scale = std::max({std::fabs(weak_rhs), std::fabs(strong_rhs), 1e-300});
  if (weak_rhs - strong_rhs > 1e-9 * scale)
    throw std::logic_error("strong-mode gap exceeds weak-mode gap");
  if (mode == GapMode::weak) {
    double trig = 0;
    for (int l = 1; l <= 4; ++l) {
      double cl = 2 + face_d3(d, l) / (4 * face_product(d, l));
      trig += cl * cl;
    }
    trig *= 4 * prod_r(d);
    if (std::fabs(trig - weak_rhs) > 1e-9 * scale)
      throw std::logic_error("trigonometric restatement of the weak gap disagrees");
    return lhs - weak_rhs;
  }
  return lhs - strong_rhs;
}

// ---------------------------------------------------------------------------
// Trigonometric forms for planar configurations.

// cos^2 of half the angle between two sides adj1, adj2 opposite side opp, by
// the law of cosines.
inline double half_angle_cos2(double adj1, double adj2, double opp) {
  double c = (adj1 * adj1 + adj2 * adj2 - opp * opp) / (2 * adj1 * adj2);
  return (1 + c) / 2;
}

// D_3 of a triangle as 4abc times the sum of squared half-angle cosines.
inline double d3_trig(const Configuration<double>& tri) {
  if (tri.size() != 3) throw std::domain_error("d3_trig needs exactly 3 points");
  double c = distance(tri[0], tri[1]), b = distance(tri[0], tri[2]), a = distance(tri[1], tri[2]);
  double s = half_angle_cos2(b, c, a) + half_angle_cos2(a, c, b) + half_angle_cos2(a, b, c);
  return 4 * a * b * c * s;
}

struct TrigQuantities {
  double c{};                     // Moebius difference-triangle quantity
  std::array<double, 4> c_l{};    // per-face sums of squared half-angle cosines
  std::array<double, 4> c_hat{};  // per-vertex sums across the three incident faces
  double re_d4_trig{};
};

// Angle quantities of a planar four-point configuration and the trigonometric
// form Re(D_4) = 16 prod r (6 - c + sum c_hat_l (c_l - 2)), cross-checked
// against the Eastwood-Norbury evaluation.
inline TrigQuantities trig_quantities(const Configuration<double>& quad) {
  if (quad.size() != 4) throw std::domain_error("trig_quantities needs exactly 4 points");
  DistanceData d = DistanceData::from_points(quad);
  d.validate();
  double scale = 0;
  for (double r : d.as_array()) scale = std::max(scale, r);
  if (std::fabs(vol2(d)) > 1e-7 * std::pow(scale, 6))
    throw std::domain_error("planar-only formula");

  // Angle of the face opposite m at its vertex v.
  auto angle_cos2 = [&d](int m, int v) {
    auto f = face_of(m);
    std::array<int, 2> other{};
    int k = 0;
    for (int u : f)
      if (u != v) other[size_t(k++)] = u;
    return half_angle_cos2(d(v, other[0]), d(v, other[1]), d(other[0], other[1]));
  };

  TrigQuantities out;
  for (int l = 1; l <= 4; ++l) {
    double cl = 0;
    for (int v : face_of(l)) cl += angle_cos2(l, v);
    out.c_l[size_t(l - 1)] = cl;
    double ch = 0;
    for (int m = 1; m <= 4; ++m)
      if (m != l) ch += angle_cos2(m, l);
    out.c_hat[size_t(l - 1)] = ch;
  }
  double pr = prod_r(d);
  out.c = 2 + mobius_d3(d) / (4 * pr);
  double s = 6 - out.c;
  for (int l = 0; l < 4; ++l) s += out.c_hat[size_t(l)] * (out.c_l[size_t(l)] - 2);
  out.re_d4_trig = 16 * pr * s;
  double en = re_d4(d);
  if (std::fabs(out.re_d4_trig - en) > 1e-8 * std::max(std::fabs(en), 1e-300))
    throw std::logic_error("trigonometric form disagrees with the polynomial form");
  return out;
}

// ---------------------------------------------------------------------------
// d3 bound chain and the Schur identity suite.

struct D3BoundChain {
  double d3{};           // d3(a, b, c)
  double schur_bound{};  // 9 a^2 b^2 c^2 / ((a+b+c)(a^2+b^2+c^2))
  double mean_bound{};   // 27 a^2 b^2 c^2 / (a+b+c)^3
  double product{};      // abc
  double power_bound{};  // 4 a^2 b^2 c^2 / (abc + a^3 + b^3 + c^3)
  bool chain_ok{};       // d3 <= schur <= mean <= product and d3 <= power <= product
};

inline D3BoundChain d3_bound_suite(double a, double b, double c) {
  if (!(a >= 0 && b >= 0 && c >= 0)) throw std::domain_error("d3 bounds need nonnegative sides");
  double s1 = a + b + c;
  if (s1 == 0) throw std::domain_error("d3 bounds need a nonzero side");
  double sq = a * a * b * b * c * c;
  D3BoundChain out;
  out.d3 = d3(a, b, c);
  out.schur_bound = 9 * sq / (s1 * (a * a + b * b + c * c));
  out.mean_bound = 27 * sq / (s1 * s1 * s1);
  out.product = a * b * c;
  out.power_bound = 4 * sq / (a * b * c + a * a * a + b * b * b + c * c * c);
  double eps = 1e-12 * std::max(out.product, 1e-300);
  out.chain_ok = out.d3 <= out.schur_bound + eps && out.schur_bound <= out.mean_bound + eps &&
                 out.mean_bound <= out.product + eps && out.d3 <= out.power_bound + eps &&
                 out.power_bound <= out.product + eps;
  return out;
}

// Pass/fail per identity of the Schur suite: the five exact identities, the
// two telescoped positivity certificates, the two-alphabet generalization,
// the half-squares identity, and the sorted-sample product inequality.
inline std::map<std::string, bool> schur_identity_suite(std::uint64_t seed = 2026) {
  std::map<std::string, bool> out;
  SchurIdentitySuite s = schur_identity_suite_sym();
  out["schur_sum"] = s.product_minus_d3;
  out["square_decomposition"] = s.squares_residual;
  out["square_positivity_route"] = s.squares_route;
  out["square_linearization"] = s.squares_linear;
  out["weighted_squares"] = s.weighted_squares;
  out["two_alphabet_identity"] = s.two_alphabet;
  out["half_squares"] = s.half_squares;
  out["schur_power_1"] = schur_power_cert(1).status == CertStatus::pass;
  out["schur_power_2"] = schur_power_cert(2).status == CertStatus::pass;
  out["two_alphabet_schur"] = two_alphabet_h2_cert().status == CertStatus::pass;

  Rng rng(seed);
  bool ok = true;
  for (int t = 0; t < 2000 && ok; ++t) {
    std::array<double, 3> x{}, X{};
    for (auto& v : x) v = rng.uniform(0.05, 1.0);
    for (auto& v : X) v = rng.uniform(0.05, 1.0);
    std::sort(x.begin(), x.end(), std::greater<>());
    std::sort(X.begin(), X.end(), std::greater<>());
    double lhs = d3(x[0], x[1], x[2]) * d3(X[0], X[1], X[2]);
    double rhs = d3(x[0] * X[0], x[1] * X[1], x[2] * X[2]);
    if (lhs < rhs - 1e-10) ok = false;
  }
  out["product_inequality_sorted"] = ok;
  return out;
}

}  // namespace atiyah
