#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <vector>

#include "atiyah/closed_forms.hpp"
#include "atiyah/families.hpp"
#include "atiyah/geometry.hpp"
#include "atiyah/rng.hpp"

using namespace atiyah;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double kPi = 3.14159265358979323846;

double dist(const Configuration<double>& p, size_t i, size_t j) {
  return distance(p[i], p[j]);
}

}  // namespace

TEST_CASE("parallelogram generator", "[families]") {
  SECTION("unit square") {
    auto fc = make_parallelogram(1, 1, kPi / 2);
    REQUIRE_FALSE(fc.degenerate);
    auto d = DistanceData::from_points(fc.points);
    CHECK_THAT(d.r12, WithinRel(1.0, 1e-12));
    CHECK_THAT(d.r34, WithinRel(1.0, 1e-12));
    CHECK_THAT(d.r23, WithinRel(1.0, 1e-12));
    CHECK_THAT(d.r14, WithinRel(1.0, 1e-12));
    CHECK_THAT(d.r13, WithinRel(std::sqrt(2.0), 1e-12));
    CHECK_THAT(d.r24, WithinRel(std::sqrt(2.0), 1e-12));
    CHECK_THAT(re_d4(d), WithinRel(32 * (3 + 2 * std::sqrt(2.0)), 1e-10));
    auto det = normalized_determinant(fc.points);
    CHECK_THAT(det.normalized_abs, WithinRel((3 + 2 * std::sqrt(2.0)) / 4, 1e-10));
  }

  SECTION("diagonal law") {
    auto fc = make_parallelogram(2, 1, kPi / 3);
    auto d = DistanceData::from_points(fc.points);
    double e = d.r13, f = d.r24;
    CHECK_THAT(e * e + f * f, WithinRel(10.0, 1e-12));
  }

  SECTION("degenerate at flat angles") {
    CHECK(make_parallelogram(1, 2, 1e-10).degenerate);
    CHECK_FALSE(make_parallelogram(1, 2, 0.3).degenerate);
  }

  SECTION("parameter validation") {
    CHECK_THROWS_AS(make_parallelogram(0, 1, 1), std::domain_error);
    CHECK_THROWS_AS(make_parallelogram(1, -2, 1), std::domain_error);
    CHECK_THROWS_AS(make_parallelogram(1, 1, 0), std::domain_error);
    CHECK_THROWS_AS(make_parallelogram(1, 1, kPi), std::domain_error);
  }

  SECTION("distance structure on a grid") {
    Rng rng(11);
    for (int it = 0; it < 200; ++it) {
      double a = rng.uniform(0.3, 2.5), b = rng.uniform(0.3, 2.5);
      double th = rng.uniform(0.1, kPi - 0.1);
      auto fc = make_parallelogram(a, b, th);
      auto d = DistanceData::from_points(fc.points);
      CHECK_THAT(d.r12, WithinRel(a, 1e-12));
      CHECK_THAT(d.r34, WithinRel(a, 1e-12));
      CHECK_THAT(d.r23, WithinRel(b, 1e-12));
      CHECK_THAT(d.r14, WithinRel(b, 1e-12));
      CHECK_THAT(d.r13 * d.r13 + d.r24 * d.r24, WithinRel(2 * (a * a + b * b), 1e-12));
    }
  }
}

TEST_CASE("parallelogram strengthened C3", "[families]") {
  Rng rng(12);
  for (int it = 0; it < 400; ++it) {
    double a = rng.uniform(0.3, 2.5), b = rng.uniform(0.3, 2.5);
    double th = rng.uniform(0.05, kPi - 0.05);
    auto fc = make_parallelogram(a, b, th);
    auto d = DistanceData::from_points(fc.points);
    double e = d.r13, f = d.r24;
    double d4 = re_d4(d);  // planar, so D_4 is real
    double margin = parallelogram_c3_margin(a, b, e, f, d4);
    double closed = parallelogram_c3_margin_closed(a, b, e, f);
    double scale = std::fabs(d4) + 1;
    CHECK_THAT(margin, WithinAbs(closed, 1e-9 * scale));
    CHECK(margin >= -1e-9 * scale);
  }
}

TEST_CASE("cyclic quadrilateral generator", "[families]") {
  SECTION("square on the unit circle") {
    auto fc = make_cyclic_quad(1, {0, kPi / 2, kPi, 3 * kPi / 2});
    auto d = DistanceData::from_points(fc.points);
    CHECK_THAT(d.r12, WithinRel(std::sqrt(2.0), 1e-12));
    CHECK_THAT(d.r13, WithinRel(2.0, 1e-12));
    CHECK_THAT(d.r12 * d.r34 + d.r23 * d.r14, WithinRel(d.r13 * d.r24, 1e-12));
  }

  SECTION("Ptolemy and face bounds on random quadrilaterals") {
    Rng rng(13);
    for (int it = 0; it < 200; ++it) {
      double radius = rng.uniform(0.5, 2.0);
      std::array<double, 4> phi{};
      phi[0] = rng.uniform(0, 0.5);
      for (int i = 1; i < 4; ++i) phi[size_t(i)] = phi[size_t(i - 1)] + rng.uniform(0.2, 1.2);
      auto fc = make_cyclic_quad(radius, phi);
      auto d = DistanceData::from_points(fc.points);
      double scale = d.r13 * d.r24;
      CHECK_THAT(d.r12 * d.r34 + d.r23 * d.r14, WithinAbs(scale, 1e-10 * scale));
      auto tq = trig_quantities(fc.points);
      CHECK_THAT(tq.c, WithinAbs(2.0, 1e-7));
      for (double cl : tq.c_l) {
        CHECK(cl >= 2.0 - 1e-9);
        CHECK(cl <= 2.25 + 1e-9);
      }
    }
  }

  SECTION("parameter validation") {
    CHECK_THROWS_AS(make_cyclic_quad(0, {0, 1, 2, 3}), std::domain_error);
    CHECK_THROWS_WITH(make_cyclic_quad(1, {0, 1, 1, 3}), ContainsSubstring("increasing"));
    CHECK_THROWS_AS(make_cyclic_quad(1, {0, 1, 2, 7.0}), std::domain_error);
  }
}

TEST_CASE("upright pyramid generator", "[families]") {
  SECTION("unit equilateral base with unit apex distance is regular") {
    auto fc = make_upright(1, 1, 1, 1);
    REQUIRE_FALSE(fc.degenerate);
    CHECK_THAT(upright_circumradius(1, 1, 1), WithinRel(1 / std::sqrt(3.0), 1e-12));
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = i + 1; j < 4; ++j) CHECK_THAT(dist(fc.points, i, j), WithinRel(1.0, 1e-12));
    auto det = normalized_determinant(fc.points);
    CHECK_THAT(det.normalized_abs, WithinRel(25.0 / 16.0, 1e-10));
  }

  SECTION("3-4-5 base at the circumradius is planar and flagged") {
    auto fc = make_upright(3, 4, 5, 2.5);
    CHECK(fc.degenerate);
    CHECK_THAT(fc.points[3].z, WithinAbs(0.0, 1e-9));
    for (size_t i = 0; i < 3; ++i) CHECK_THAT(dist(fc.points, i, 3), WithinRel(2.5, 1e-12));
  }

  SECTION("squat pyramid above the unit triangle") {
    auto fc = make_upright(1, 1, 1, std::sqrt(2.0 / 3.0));
    REQUIRE_FALSE(fc.degenerate);
    CHECK_THAT(fc.points[3].z, WithinRel(1 / std::sqrt(3.0), 1e-10));
    for (size_t i = 0; i < 3; ++i)
      CHECK_THAT(dist(fc.points, i, 3), WithinRel(std::sqrt(2.0 / 3.0), 1e-12));
  }

  SECTION("parameter validation") {
    CHECK_THROWS_WITH(make_upright(1, 1, 1, 0.5), ContainsSubstring("apex below circumradius"));
    CHECK_THROWS_WITH(make_upright(1, 1, 2, 3), ContainsSubstring("triangle"));
    CHECK_THROWS_AS(make_upright(1, 1, 1, -1), std::domain_error);
  }

  SECTION("distance structure on a grid") {
    Rng rng(14);
    for (int it = 0; it < 200; ++it) {
      double x = rng.uniform(0.2, 1.5), y = rng.uniform(0.2, 1.5), z = rng.uniform(0.2, 1.5);
      double a = y + z, b = x + z, c = x + y;
      double circ = upright_circumradius(a, b, c);
      double d = circ * rng.uniform(1.0, 3.0);
      auto fc = make_upright(a, b, c, d);
      auto dd = DistanceData::from_points(fc.points);
      auto want = upright_distances(a, b, c, d);
      auto got = dd.as_array(), exp = want.as_array();
      for (size_t k = 0; k < 6; ++k) CHECK_THAT(got[k], WithinRel(exp[k], 1e-11));
    }
  }
}

TEST_CASE("upright gap decomposition and Lemma 2.6 quantities", "[families]") {
  Rng rng(15);
  for (int it = 0; it < 400; ++it) {
    double x = rng.uniform(0.2, 1.5), y = rng.uniform(0.2, 1.5), z = rng.uniform(0.2, 1.5);
    double a = y + z, b = x + z, c = x + y;
    double circ = upright_circumradius(a, b, c);
    double d = circ * rng.uniform(1.0, 4.0);

    double gap = upright_gap(a, b, c, d);
    double blocks = upright_first_block(a, b, c, d) + upright_second_block(a, b, c, d);
    double scale = std::fabs(gap * (a + b + c)) + std::pow(a + b + c, 7) * 1e-3;
    CHECK_THAT(gap * (a + b + c), WithinAbs(blocks, 1e-9 * scale));
    CHECK(gap >= -1e-9 * scale);

    CHECK(upright_second_quadratic(a, b, c, circ) >= -1e-9 * scale);
    CHECK(upright_second_quadratic_slope(a, b, c, d) >= -1e-9 * scale);
  }
}

TEST_CASE("edge-tangential generator", "[families]") {
  SECTION("unit tangent lengths give the regular tetrahedron of edge 2") {
    auto et = make_edge_tangential({1, 1, 1, 1});
    REQUIRE_FALSE(et.degenerate);
    for (double r : et.distances.as_array()) CHECK_THAT(r, WithinRel(2.0, 1e-12));
    CHECK_THAT(et.e[0], WithinRel(4.0, 1e-12));
    CHECK_THAT(et.e[1], WithinRel(6.0, 1e-12));
    CHECK_THAT(et.e[2], WithinRel(4.0, 1e-12));
    CHECK_THAT(et.e[3], WithinRel(1.0, 1e-12));
    CHECK_THAT(et.m211, WithinRel(12.0, 1e-12));
    CHECK_THAT(re_d4(et.distances), WithinRel(6400.0, 1e-10));
    auto det = normalized_determinant(et.points);
    CHECK_THAT(det.normalized_abs, WithinRel(25.0 / 16.0, 1e-10));
  }

  SECTION("volume formula against the Cayley-Menger route") {
    auto et = make_edge_tangential({1, 1, 1, 2});
    double e2 = et.e[1], e3 = et.e[2], e4 = et.e[3];
    CHECK_THAT(2 * vol2(et.distances), WithinRel(128 * e4 * e2 - 32 * e3 * e3, 1e-10));
    for (int l = 1; l <= 4; ++l) {
      auto f = face_of(l);
      std::array<double, 4> t{1, 1, 1, 2};
      double prod_t = 1;
      for (int v : f) prod_t *= t[size_t(v - 1)];
      CHECK_THAT(face_d3(et.distances, l), WithinRel(8 * prod_t, 1e-10));
    }
  }

  SECTION("non-embeddable tangent lengths are rejected") {
    CHECK_THROWS_WITH(make_edge_tangential({1, 1, 1, 0.01}),
                      ContainsSubstring("Cayley-Menger"));
    CHECK_THROWS_AS(make_edge_tangential({1, 1, 1, 0}), std::domain_error);
  }

  SECTION("volume boundary is flagged degenerate") {
    double s = (-3 + 2 * std::sqrt(3.0)) / 3;  // root of 4 e2 e4 = e3^2 for t=(1,1,1,s)
    auto et = make_edge_tangential({1, 1, 1, s});
    CHECK(et.degenerate);
  }

  SECTION("embedding reproduces the distances") {
    Rng rng(16);
    for (int it = 0; it < 200; ++it) {
      std::array<double, 4> t{};
      for (double& v : t) v = rng.uniform(0.3, 2.0);
      EdgeTangential et;
      try {
        et = make_edge_tangential(t);
      } catch (const std::domain_error&) {
        continue;  // legitimately non-embeddable
      }
      auto got = DistanceData::from_points(et.points).as_array();
      auto exp = et.distances.as_array();
      for (size_t k = 0; k < 6; ++k) CHECK_THAT(got[k], WithinRel(exp[k], 1e-11));
    }
  }
}

TEST_CASE("trirectangular generator", "[families]") {
  SECTION("symmetric corner") {
    auto fc = make_trirectangular(1, 1, 1);
    auto d = DistanceData::from_points(fc.points);
    CHECK_THAT(d.r12, WithinRel(std::sqrt(2.0), 1e-12));
    CHECK_THAT(d.r14, WithinRel(1.0, 1e-12));
    CHECK_THAT(vol2(d), WithinRel(4.0, 1e-10));  // 144 V^2 with V = 1/6
  }

  SECTION("3-4-12 corner hypotenuses") {
    auto fc = make_trirectangular(3, 4, 12);
    auto d = DistanceData::from_points(fc.points);
    CHECK_THAT(d.r23, WithinRel(std::sqrt(160.0), 1e-12));  // a opposite the x leg
    CHECK_THAT(d.r13, WithinRel(std::sqrt(153.0), 1e-12));  // b opposite the y leg
    CHECK_THAT(d.r12, WithinRel(5.0, 1e-12));               // c opposite the z leg
  }

  SECTION("closed excess formula and determinant bound") {
    Rng rng(17);
    for (int it = 0; it < 300; ++it) {
      double x = rng.uniform(0.3, 2.0), y = rng.uniform(0.3, 2.0), z = rng.uniform(0.3, 2.0);
      auto fc = make_trirectangular(x, y, z);
      auto d = DistanceData::from_points(fc.points);
      double a = std::hypot(y, z), b = std::hypot(x, z), c = std::hypot(x, y);
      CHECK_THAT(d3(x, y, c), WithinAbs(2 * x * y * (x + y - c), 1e-10 * (x + y + c)));
      double excess = re_d4(d) - 64 * a * b * c * x * y * z - 2 * vol2(d);
      double closed = trirectangular_excess(x, y, z);
      double scale = std::fabs(re_d4(d)) + 1;
      CHECK_THAT(excess, WithinAbs(closed, 1e-9 * scale));
      CHECK(excess >= -1e-9 * scale);
      CHECK(re_d4(d) >= 64 * a * b * c * x * y * z - 1e-9 * scale);
    }
  }

  SECTION("parameter validation") {
    CHECK_THROWS_AS(make_trirectangular(0, 1, 1), std::domain_error);
  }
}

TEST_CASE("semiregular generator", "[families]") {
  SECTION("half-cube gives the regular tetrahedron of edge 2") {
    double s = 1 / std::sqrt(2.0);
    auto fc = make_semiregular(s, s, s);
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = i + 1; j < 4; ++j) CHECK_THAT(dist(fc.points, i, j), WithinRel(2.0, 1e-12));
    auto det = normalized_determinant(fc.points);
    CHECK_THAT(det.normalized_abs, WithinRel(25.0 / 16.0, 1e-10));
  }

  SECTION("box edge lengths") {
    auto fc = make_semiregular(1, 1, 2);
    auto d = DistanceData::from_points(fc.points);
    CHECK_THAT(d.r12, WithinRel(2 * std::sqrt(5.0), 1e-12));  // a = 2 sqrt(v^2+w^2)
    CHECK_THAT(d.r34, WithinRel(2 * std::sqrt(5.0), 1e-12));
    CHECK_THAT(d.r13, WithinRel(2 * std::sqrt(5.0), 1e-12));  // b = 2 sqrt(u^2+w^2)
    CHECK_THAT(d.r14, WithinRel(2 * std::sqrt(2.0), 1e-12));  // c = 2 sqrt(u^2+v^2)
  }

  SECTION("volume identity and Four Points gaps on a grid") {
    Rng rng(18);
    for (int it = 0; it < 300; ++it) {
      double u = rng.uniform(0.3, 1.8), v = rng.uniform(0.3, 1.8), w = rng.uniform(0.3, 1.8);
      auto fc = make_semiregular(u, v, w);
      auto d = DistanceData::from_points(fc.points);
      double a = d.r12, b = d.r13, c = d.r14;
      double scale = std::pow(a + b + c, 6);
      CHECK_THAT(2 * vol2(d), WithinAbs(4 * d3(a * a, b * b, c * c), 1e-11 * scale));

      double weak = semiregular_weak_gap(a, b, c);
      double strong = semiregular_strong_gap(a, b, c);
      CHECK_THAT(four_points_gap(d, GapMode::weak), WithinAbs(weak, 1e-9 * scale));
      CHECK_THAT(four_points_gap(d, GapMode::strong), WithinAbs(strong, 1e-9 * scale));
      CHECK(weak >= -1e-9 * scale);
      CHECK(strong >= -1e-9 * scale);
    }
  }
}

TEST_CASE("wedge generator", "[families]") {
  SECTION("equal parameters give a planar square, flagged") {
    auto fc = make_wedge(1, 1, std::sqrt(2.0), std::sqrt(2.0));
    CHECK(fc.degenerate);
    auto d = DistanceData::from_points(fc.points);
    CHECK_THAT(d.r13, WithinRel(1.0, 1e-12));
    CHECK_THAT(d.r24, WithinRel(1.0, 1e-12));
  }

  SECTION("a = b specializes to the semiregular pattern") {
    auto fc = make_wedge(1.2, 1.2, 1.0, 1.4);
    auto d = DistanceData::from_points(fc.points);
    CHECK_THAT(d.r13, WithinRel(d.r24, 1e-12));
    CHECK_THAT(d.r14, WithinRel(d.r23, 1e-12));
    CHECK_THAT(d.r13, WithinRel(d.r14, 1e-12));
  }

  SECTION("infeasible parameters raise named errors") {
    CHECK_THROWS_WITH(make_wedge(2, 1, 0.5, 0.5), ContainsSubstring("opposite-edge bound"));
    CHECK_THROWS_WITH(make_wedge(1, 1, 2, 2), ContainsSubstring("height bound"));
    CHECK_THROWS_AS(make_wedge(0, 1, 1, 1), std::domain_error);
  }

  SECTION("distance structure, closed formulas, strengthened C3") {
    Rng rng(19);
    int kept = 0;
    for (int it = 0; it < 2000 && kept < 300; ++it) {
      double a = rng.uniform(0.5, 2.0), b = rng.uniform(0.5, 2.0);
      double x = rng.uniform(0.3, 2.5), y = rng.uniform(0.3, 2.5);
      if (!wedge_feasible(a, b, x, y)) continue;
      auto fc = make_wedge(a, b, x, y);
      if (fc.degenerate) continue;
      ++kept;
      auto d = DistanceData::from_points(fc.points);
      CHECK_THAT(d.r13, WithinRel(a, 1e-11));
      CHECK_THAT(d.r24, WithinRel(a, 1e-11));
      CHECK_THAT(d.r14, WithinRel(b, 1e-11));
      CHECK_THAT(d.r23, WithinRel(b, 1e-11));
      CHECK_THAT(d.r12, WithinRel(x, 1e-11));
      CHECK_THAT(d.r34, WithinRel(y, 1e-11));

      double en = re_d4(d);
      double scale = std::fabs(en) + 1;
      CHECK_THAT(wedge_re_d4_first(a, b, x, y), WithinAbs(en, 1e-9 * scale));
      CHECK_THAT(wedge_re_d4_second(a, b, x, y), WithinAbs(en, 1e-9 * scale));
      CHECK_THAT(wedge_vol2(a, b, x, y), WithinAbs(vol2(d), 1e-9 * scale));
      CHECK(wedge_interchange_identity(a, b, x, y));
      CHECK(en >= wedge_c3_strengthened_rhs(a, b, x, y) - 1e-9 * scale);
    }
    REQUIRE(kept >= 300);
  }
}

TEST_CASE("collinear-plus generator", "[families]") {
  SECTION("single point on the axis") {
    auto cp = make_collinear_plus({0}, 1);
    REQUIRE(cp.lambda.size() == 1);
    CHECK_THAT(cp.lambda[0], WithinRel(1.0, 1e-12));
    REQUIRE(cp.points.size() == 2);
  }

  SECTION("symmetric pair") {
    auto cp = make_collinear_plus({-1, 1}, 1);
    CHECK_THAT(cp.lambda[0], WithinRel(std::sqrt(2.0) - 1, 1e-12));
    CHECK_THAT(cp.lambda[1], WithinRel(std::sqrt(2.0) + 1, 1e-12));
  }

  SECTION("parameter validation") {
    CHECK_THROWS_WITH(make_collinear_plus({1, 1}, 1), ContainsSubstring("increasing"));
    CHECK_THROWS_AS(make_collinear_plus({0, 1}, 0), std::domain_error);
    CHECK_THROWS_AS(make_collinear_plus({}, 1), std::domain_error);
  }

  SECTION("lambda is positive increasing and C2 holds numerically") {
    Rng rng(20);
    for (int it = 0; it < 50; ++it) {
      int m = 2 + int(rng.bits() % 3);
      std::vector<double> a;
      double cur = rng.uniform(-2, -1);
      for (int i = 0; i < m; ++i) {
        a.push_back(cur);
        cur += rng.uniform(0.2, 1.5);
      }
      double b = rng.uniform(0.3, 2.0) * (rng.bits() % 2 ? 1 : -1);
      auto cp = make_collinear_plus(a, b);
      for (size_t i = 0; i < cp.lambda.size(); ++i) {
        CHECK(cp.lambda[i] > 0);
        if (i + 1 < cp.lambda.size()) CHECK(cp.lambda[i] < cp.lambda[i + 1]);
      }
      auto det = normalized_determinant(cp.points);
      CHECK(det.normalized_abs >= 1 - 1e-9);
    }
  }
}

TEST_CASE("dihedral configuration generator", "[families]") {
  SECTION("bare 2-gon is an antipodal pair") {
    auto pts = make_dihedral(0, 2, {});
    REQUIRE(pts.size() == 2);
    CHECK_THAT(distance(pts[0], pts[1]), WithinRel(2.0, 1e-12));
    auto det = normalized_determinant(pts);
    CHECK_THAT(det.normalized_abs, WithinRel(1.0, 1e-12));
  }

  SECTION("triangle plus center") {
    auto pts = make_dihedral(1, 3, {0});
    REQUIRE(pts.size() == 4);
    for (size_t j = 1; j < 4; ++j) CHECK_THAT(distance(pts[0], pts[j]), WithinRel(1.0, 1e-12));
    CHECK_THAT(distance(pts[1], pts[2]), WithinRel(std::sqrt(3.0), 1e-12));
    auto det = normalized_determinant(pts);
    CHECK(det.normalized_abs >= 1 - 1e-9);
  }

  SECTION("five point configuration") {
    auto pts = make_dihedral(2, 3, {-0.5, 0.5});
    REQUIRE(pts.size() == 5);
    auto det = normalized_determinant(pts);
    CHECK(det.normalized_abs >= 1 - 1e-9);
  }

  SECTION("parameter validation") {
    CHECK_THROWS_AS(make_dihedral(0, 1, {}), std::domain_error);
    CHECK_THROWS_AS(make_dihedral(2, 3, {0}), std::domain_error);
    CHECK_THROWS_AS(make_dihedral(2, 3, {1, 0}), std::domain_error);
  }
}
