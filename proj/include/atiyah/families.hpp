#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "closed_forms.hpp"
#include "geometry.hpp"

// Generators for the special point families: parallelograms, cyclic
// quadrilaterals, upright pyramids, edge-tangential / trirectangular /
// semiregular / wedge tetrahedra, collinear-plus-one configurations, and
// dihedral configurations. Each generator validates its feasibility
// conditions and the per-family closed forms used by the sweeps live
// alongside.

namespace atiyah {

struct FamilyConfig {
  Configuration<double> points;
  bool degenerate = false;  // boundary case (planar or collinear), not an error
};

// ---------------------------------------------------------------------------
// Parallelogram: vertices in cyclic order, r12 = r34 = a, r23 = r14 = b.

inline FamilyConfig make_parallelogram(double a, double b, double theta) {
  if (!(a > 0) || !(b > 0)) throw std::domain_error("parallelogram needs positive sides");
  if (!(theta > 0) || !(theta < 3.14159265358979323846))
    throw std::domain_error("parallelogram needs 0 < theta < pi");
  double cx = b * std::cos(theta), cy = b * std::sin(theta);
  FamilyConfig out;
  out.points = {{0, 0, 0}, {a, 0, 0}, {a + cx, cy, 0}, {cx, cy, 0}};
  out.degenerate = std::sin(theta) < 1e-9;
  return out;
}

// Margin of the strengthened C3 inequality for parallelograms: the amount by
// which D_4 exceeds 2 d3(a,b,e) d3(a,b,f) + 8[abf d3(a,b,e) + abe d3(a,b,f)]
// + 64 a^2 b^2 e f. Equals 2 [4ab - (a+b-e)(a+b-f)] (a+b+e) d3(a,b,e).
inline double parallelogram_c3_margin(double a, double b, double e, double f, double d4) {
  double de = d3(a, b, e), df = d3(a, b, f);
  return d4 - 2 * de * df - 8 * (a * b * f * de + a * b * e * df) - 64 * a * a * b * b * e * f;
}

inline double parallelogram_c3_margin_closed(double a, double b, double e, double f) {
  double de = d3(a, b, e);
  return 2 * (4 * a * b - (a + b - e) * (a + b - f)) * ((a + b + e) * de);
}

// ---------------------------------------------------------------------------
// Cyclic quadrilateral: four points on a circle at strictly increasing
// angles.

inline FamilyConfig make_cyclic_quad(double radius, std::array<double, 4> phi) {
  if (!(radius > 0)) throw std::domain_error("cyclic quadrilateral needs a positive radius");
  for (int i = 0; i < 3; ++i)
    if (!(phi[size_t(i + 1)] > phi[size_t(i)]))
      throw std::domain_error("cyclic quadrilateral needs strictly increasing angles");
  if (!(phi[3] - phi[0] < 2 * 3.14159265358979323846))
    throw std::domain_error("cyclic quadrilateral angles must fit in one turn");
  FamilyConfig out;
  for (double p : phi) out.points.push_back({radius * std::cos(p), radius * std::sin(p), 0});
  return out;
}

// ---------------------------------------------------------------------------
// Upright pyramid: base triangle with sides r23 = a, r13 = b, r12 = c in the
// z = 0 plane, circumcenter at the origin, apex on the z-axis at distance d
// from every base vertex.

inline double upright_circumradius(double a, double b, double c) {
  double t = d3(a, b, c);
  if (!(t > 0)) throw std::domain_error("upright base needs a strict triangle");
  return a * b * c / std::sqrt((a + b + c) * t);
}

inline FamilyConfig make_upright(double a, double b, double c, double d) {
  if (!(a > 0) || !(b > 0) || !(c > 0) || !(d > 0))
    throw std::domain_error("upright needs positive lengths");
  double circ = upright_circumradius(a, b, c);
  if (d < circ * (1 - 1e-12)) throw std::domain_error("apex below circumradius");
  double x3 = (c * c + b * b - a * a) / (2 * c);
  double y3 = std::sqrt(std::max(0.0, b * b - x3 * x3));
  Vec3<double> p1{0, 0, 0}, p2{c, 0, 0}, p3{x3, y3, 0};
  // circumcenter of the base triangle
  double ox = c / 2;
  double oy = (dot(p3, p3) - c * x3) / (2 * y3);
  Vec3<double> o{ox, oy, 0};
  double h2 = std::max(0.0, d * d - circ * circ);
  FamilyConfig out;
  out.points = {p1 - o, p2 - o, p3 - o, {0, 0, std::sqrt(h2)}};
  out.degenerate = h2 <= 1e-12 * d * d;
  return out;
}

inline DistanceData upright_distances(double a, double b, double c, double d) {
  return {c, b, d, a, d, d};
}

// Re(D_4) - 4*288V^2 minus 64 prod r + (17/4) sum_l cone_l d3(face_l); the
// inequality proven for upright tetrahedra states this is nonnegative for
// d >= circumradius.
inline double upright_gap(double a, double b, double c, double d) {
  DistanceData dd = upright_distances(a, b, c, d);
  double lhs = re_d4(dd) - 4 * 2 * vol2(dd);
  double rhs = 64 * prod_r(dd);
  for (int l = 1; l <= 4; ++l) rhs += 4.25 * cone_product(dd, l) * face_d3(dd, l);
  return lhs - rhs;
}

// The two blocks of the gap identity: upright_gap * (a+b+c) splits into a
// part linear in d and d times (a+b+c) times a quadratic in d.
inline double upright_first_block(double a, double b, double c, double d) {
  double t = d3(a, b, c), per = a + b + c, abc = a * b * c;
  double e2 = a * b + a * c + b * c;
  double sq = a * a + b * b + c * c;
  double mixed = a * b * c * (a * a * b + a * b * b + a * a * c + a * c * c + b * b * c + b * c * c);
  return ((4 * abc * e2 - sq * t) * per - 24 * abc * abc) * d + (6 * abc * abc - mixed) * per;
}

// The quadratic-in-d factor; nonnegative at d = circumradius and increasing
// beyond it, which is the content of Lemma 2.6.
inline double upright_second_quadratic(double a, double b, double c, double d) {
  double t = d3(a, b, c), per = a + b + c, abc = a * b * c;
  double sym31 = a * a * a * b + a * b * b * b + a * a * a * c + a * c * c * c + b * b * b * c +
                 b * c * c * c;
  double quart = a * a * a * a + b * b * b * b + c * c * c * c;
  return 3.75 * t * d * d + per * (3.5 * abc - 4 * t) * d + 24 * abc * abc / per +
         0.25 * abc * (a * a + b * b + c * c) - per * (sym31 - quart);
}

inline double upright_second_quadratic_slope(double a, double b, double c, double d) {
  double t = d3(a, b, c), per = a + b + c, abc = a * b * c;
  return 7.5 * t * d + per * (3.5 * abc - 4 * t);
}

inline double upright_second_block(double a, double b, double c, double d) {
  return d * (a + b + c) * upright_second_quadratic(a, b, c, d);
}

// ---------------------------------------------------------------------------
// Distance embedding: reconstruct four points from a distance set, first
// point at the origin. Fails when the Cayley-Menger conditions are violated.

inline Configuration<double> embed_distances(const DistanceData& d) {
  d.validate();
  double scale = 0;
  for (double r : d.as_array()) scale = std::max(scale, r);
  double tol = 1e-9 * scale * scale;
  double x2 = d.r12;
  double x3 = (d.r12 * d.r12 + d.r13 * d.r13 - d.r23 * d.r23) / (2 * d.r12);
  double y3sq = d.r13 * d.r13 - x3 * x3;
  if (y3sq < -tol)
    throw std::domain_error("Cayley-Menger reconstruction failed: face 123 not a triangle");
  double y3 = std::sqrt(std::max(0.0, y3sq));
  if (y3 <= 1e-12 * scale)
    throw std::domain_error("Cayley-Menger reconstruction failed: face 123 degenerate");
  double x4 = (d.r12 * d.r12 + d.r14 * d.r14 - d.r24 * d.r24) / (2 * d.r12);
  double y4 = (d.r13 * d.r13 + d.r14 * d.r14 - d.r34 * d.r34 - 2 * x3 * x4) / (2 * y3);
  double z4sq = d.r14 * d.r14 - x4 * x4 - y4 * y4;
  if (z4sq < -tol)
    throw std::domain_error("Cayley-Menger reconstruction failed: distances not embeddable");
  return {{0, 0, 0}, {x2, 0, 0}, {x3, y3, 0}, {x4, y4, std::sqrt(std::max(0.0, z4sq))}};
}

// ---------------------------------------------------------------------------
// Edge-tangential tetrahedron: r_ij = t_i + t_j for tangent lengths t_i > 0.

struct EdgeTangential {
  DistanceData distances;
  Configuration<double> points;
  bool degenerate = false;
  std::array<double, 4> e{};  // elementary symmetric values e1..e4 of the t_i
  double m211 = 0;            // monomial symmetric t_i^2 t_j t_k
};

inline EdgeTangential make_edge_tangential(const std::array<double, 4>& t) {
  for (double v : t)
    if (!(v > 0)) throw std::domain_error("edge-tangential needs positive tangent lengths");
  EdgeTangential out;
  out.distances = {t[0] + t[1], t[0] + t[2], t[0] + t[3], t[1] + t[2], t[1] + t[3], t[2] + t[3]};
  out.e[0] = t[0] + t[1] + t[2] + t[3];
  out.e[1] = t[0] * t[1] + t[0] * t[2] + t[0] * t[3] + t[1] * t[2] + t[1] * t[3] + t[2] * t[3];
  out.e[2] = t[0] * t[1] * t[2] + t[0] * t[1] * t[3] + t[0] * t[2] * t[3] + t[1] * t[2] * t[3];
  out.e[3] = t[0] * t[1] * t[2] * t[3];
  for (int i = 0; i < 4; ++i) {
    double others = 0;
    for (int j = 0; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k)
        if (j != i && k != i) others += t[size_t(j)] * t[size_t(k)];
    out.m211 += t[size_t(i)] * t[size_t(i)] * others;
  }

  double v2 = vol2(out.distances);
  double scale6 = std::pow(out.e[0], 6);
  if (v2 < -1e-12 * scale6)
    throw std::domain_error(
        "Cayley-Menger reconstruction failed: tangent lengths not embeddable");

  double e1 = out.e[0], e2 = out.e[1], e3 = out.e[2], e4 = out.e[3];
  auto close = [](double u, double v, double s) { return std::fabs(u - v) <= 1e-10 * s; };
  double pr = prod_r(out.distances);
  if (!close(pr, e3 * e2 * e1 - e4 * e1 * e1 - e3 * e3, std::fabs(pr)))
    throw std::logic_error("edge-tangential product formula disagrees");
  if (!close(2 * v2, 128 * e4 * e2 - 32 * e3 * e3, std::max(std::fabs(2 * v2), scale6 * 1e-4)))
    throw std::logic_error("edge-tangential volume formula disagrees");
  double en = re_d4(out.distances);
  if (!close(en, 64 * e2 * (2 * e4 + out.m211) + 8 * v2, std::fabs(en)))
    throw std::logic_error("edge-tangential determinant formula disagrees");
  for (int l = 1; l <= 4; ++l) {
    auto f = face_of(l);
    double prod_t = 1;
    for (int v : f) prod_t *= t[size_t(v - 1)];
    if (!close(face_d3(out.distances, l), 8 * prod_t, std::fabs(8 * prod_t)))
      throw std::logic_error("edge-tangential face d3 disagrees");
  }

  out.points = embed_distances(out.distances);
  out.degenerate = std::fabs(v2) <= 1e-12 * scale6;
  return out;
}

// ---------------------------------------------------------------------------
// Trirectangular tetrahedron: all face angles at vertex 4 are right angles;
// legs x, y, z along the axes.

inline FamilyConfig make_trirectangular(double x, double y, double z) {
  if (!(x > 0) || !(y > 0) || !(z > 0))
    throw std::domain_error("trirectangular needs positive legs");
  FamilyConfig out;
  out.points = {{x, 0, 0}, {0, y, 0}, {0, 0, z}, {0, 0, 0}};
  return out;
}

// Closed form for Re(D_4) - 64abcxyz - 288V^2 with a, b, c the face
// hypotenuses opposite the x, y, z legs.
inline double trirectangular_excess(double x, double y, double z) {
  double a = std::hypot(y, z), b = std::hypot(x, z), c = std::hypot(x, y);
  double cyc = 2 * d3(a, b, c);
  const double q[3][6] = {{x, y, z, a, b, c}, {y, z, x, b, c, a}, {z, x, y, c, a, b}};
  for (const auto& row : q) {
    double X = row[0], Y = row[1], Z = row[2], A = row[3], B = row[4], C = row[5];
    cyc += (2 * A * B + C * Z + 2 * Z * Z) * (X + Y - C);
  }
  return 4 * x * y * z * cyc;
}

// ---------------------------------------------------------------------------
// Semiregular tetrahedron (isosceles): opposite edges equal; realized as the
// alternate vertices of the box [-u,u] x [-v,v] x [-w,w].

inline FamilyConfig make_semiregular(double u, double v, double w) {
  if (!(u > 0) || !(v > 0) || !(w > 0))
    throw std::domain_error("semiregular needs positive half-edges");
  FamilyConfig out;
  out.points = {{u, v, w}, {u, -v, -w}, {-u, v, -w}, {-u, -v, w}};
  return out;
}

// Gap of the weak Four Points inequality for a semiregular tetrahedron with
// opposite-edge lengths A, B, C, in its two-block form.
inline double semiregular_weak_gap(double A, double B, double C) {
  double t = d3(A, B, C), sq = d3(A * A, B * B, C * C);
  return 3 * (t * t - sq) + 16 * (A * B * C * t - sq);
}

inline double semiregular_strong_gap(double A, double B, double C) {
  double t = d3(A, B, C), sq = d3(A * A, B * B, C * C);
  return 4 * (t * t - sq) + 15 * (A * B * C * t - sq);
}

// ---------------------------------------------------------------------------
// Wedge tetrahedron: two pairs of equal opposite edges, r13 = r24 = a,
// r14 = r23 = b, r12 = x, r34 = y. Realized symmetric under the half-turn
// (X, Y, Z) -> (-X, -Y, Z).

inline bool wedge_feasible(double a, double b, double x, double y, std::string* why = nullptr) {
  double tol = 1e-12 * (a * a + b * b + x * x + y * y);
  if (std::fabs(a * a - b * b) > x * y + tol) {
    if (why) *why = "wedge infeasible: |a^2 - b^2| exceeds x y (opposite-edge bound)";
    return false;
  }
  if (x * x + y * y > 2 * a * a + 2 * b * b + tol) {
    if (why) *why = "wedge infeasible: x^2 + y^2 exceeds 2a^2 + 2b^2 (height bound)";
    return false;
  }
  return true;
}

inline FamilyConfig make_wedge(double a, double b, double x, double y) {
  if (!(a > 0) || !(b > 0) || !(x > 0) || !(y > 0))
    throw std::domain_error("wedge needs positive lengths");
  std::string why;
  if (!wedge_feasible(a, b, x, y, &why)) throw std::domain_error(why);
  double p = (a * a - b * b) / (2 * x);
  double q = std::sqrt(std::max(0.0, y * y / 4 - p * p));
  double h2 = (2 * a * a + 2 * b * b - x * x - y * y) / 4;
  double h = std::sqrt(std::max(0.0, h2));
  FamilyConfig out;
  out.points = {{-x / 2, 0, 0}, {x / 2, 0, 0}, {p, q, h}, {-p, -q, h}};
  out.degenerate = h2 <= 1e-12 * (a * a + b * b);
  return out;
}

// 144 V^2 of the wedge in closed form.
inline double wedge_vol2(double a, double b, double x, double y) {
  return (x * y - a * a + b * b) * (x * y + a * a - b * b) *
         (2 * a * a + 2 * b * b - x * x - y * y);
}

// First explicit Re(D_4) formula for wedges.
inline double wedge_re_d4_first(double a, double b, double x, double y) {
  double dx = d3(a, b, x), dy = d3(a, b, y);
  double ab2 = (a + b) * (a + b), amb2 = (a - b) * (a - b);
  return (dx + 8 * a * b * x) * (dy + 8 * a * b * y) + dx * dy + 2 * x * (ab2 - y * y) * dy +
         2 * y * (ab2 - x * x) * dx +
         4 * (a * a + b * b - x * y) * (2 * a * a + 2 * b * b - x * x - y * y) * amb2 +
         2 * (x * y - amb2) * (x * x - amb2) * (y * y - amb2) + 2 * wedge_vol2(a, b, x, y);
}

// Second explicit Re(D_4) formula for wedges.
inline double wedge_re_d4_second(double a, double b, double x, double y) {
  double dx = d3(a, b, x), dy = d3(a, b, y);
  double ab2 = (a + b) * (a + b), amb2 = (a - b) * (a - b);
  double diag2 = (a * a - b * b) * (a * a - b * b);
  return (dx + 8 * a * b * x) * (dy + 8 * a * b * y) + 3 * dx * dy + 2 * x * (ab2 - y * y) * dy +
         2 * y * (ab2 - x * x) * dx +
         2 * (x * x * y * y - diag2) * (x * (a + b - x) + y * (a + b - y)) +
         2 * amb2 * (x * (a + b - y) + y * (a + b - x)) *
             (2 * a * a + 2 * b * b - x * x - y * y);
}

// Right side of the strengthened C3 inequality for wedges.
inline double wedge_c3_strengthened_rhs(double a, double b, double x, double y) {
  double dx = d3(a, b, x), dy = d3(a, b, y);
  return (dx + 8 * a * b * x) * (dy + 8 * a * b * y) + 3 * dx * dy;
}

// The interchange identity linking the two wedge formulas:
// (x^2-(a-b)^2)(y^2-(a-b)^2) = (xy-a^2+b^2)(xy+a^2-b^2) + (a-b)^2(2a^2+2b^2-x^2-y^2).
inline bool wedge_interchange_identity(double a, double b, double x, double y, double tol = 1e-9) {
  double amb2 = (a - b) * (a - b);
  double lhs = (x * x - amb2) * (y * y - amb2);
  double rhs = (x * y - a * a + b * b) * (x * y + a * a - b * b) +
               amb2 * (2 * a * a + 2 * b * b - x * x - y * y);
  return std::fabs(lhs - rhs) <= tol * (std::fabs(lhs) + std::fabs(rhs) + 1);
}

// ---------------------------------------------------------------------------
// Collinear points plus one off-axis point (type A configurations).

struct CollinearPlus {
  Configuration<double> points;
  std::vector<double> lambda;  // a_i + sqrt(a_i^2 + b^2), positive and increasing
};

inline CollinearPlus make_collinear_plus(const std::vector<double>& abscissae, double b = 1.0) {
  if (abscissae.empty()) throw std::domain_error("collinear-plus needs at least one abscissa");
  if (b == 0) throw std::domain_error("collinear-plus needs a nonzero offset");
  for (size_t i = 0; i + 1 < abscissae.size(); ++i)
    if (!(abscissae[i] < abscissae[i + 1]))
      throw std::domain_error("collinear-plus needs strictly increasing abscissae");
  CollinearPlus out;
  for (double a : abscissae) {
    out.points.push_back({a, 0, 0});
    out.lambda.push_back(a + std::hypot(a, b));
  }
  out.points.push_back({0, 0, b});
  return out;
}

// ---------------------------------------------------------------------------
// Dihedral configuration: m points on the x-axis plus the vertices of a
// regular n-gon in the perpendicular plane through the origin.

inline Configuration<double> make_dihedral(int m, int n, const std::vector<double>& a) {
  if (m < 0 || n < 2) throw std::domain_error("dihedral needs m >= 0 and n >= 2");
  if (a.size() != size_t(m)) throw std::domain_error("dihedral needs one abscissa per axis point");
  for (size_t i = 0; i + 1 < a.size(); ++i)
    if (!(a[i] < a[i + 1]))
      throw std::domain_error("dihedral needs strictly increasing abscissae");
  Configuration<double> pts;
  for (double ai : a) pts.push_back({ai, 0, 0});
  for (int j = 0; j < n; ++j) {
    double ang = 2 * 3.14159265358979323846 * j / n;
    pts.push_back({0, -std::cos(ang), -std::sin(ang)});
  }
  return pts;
}

}  // namespace atiyah
