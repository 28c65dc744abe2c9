#include <catch2/catch_amalgamated.hpp>

#include <atiyah/closed_forms.hpp>
#include <atiyah/geometry.hpp>
#include <atiyah/rng.hpp>

#include <cmath>

using namespace atiyah;

namespace {

DistanceData regular_edge(double e) { return {e, e, e, e, e, e}; }

Configuration<double> random_quad(Rng& rng, double min_sep = 0.1) {
  for (;;) {
    Configuration<double> pts;
    for (int i = 0; i < 4; ++i) pts.push_back({rng.normal(), rng.normal(), rng.normal()});
    bool ok = true;
    for (size_t i = 0; i < 4 && ok; ++i)
      for (size_t j = i + 1; j < 4 && ok; ++j)
        if (distance(pts[i], pts[j]) < min_sep) ok = false;
    if (ok) return pts;
  }
}

DistanceData random_embeddable(Rng& rng) { return DistanceData::from_points(random_quad(rng)); }

// Four points on a circle of radius rad at sorted angles.
Configuration<double> cyclic_quad(Rng& rng, double rad) {
  for (;;) {
    std::array<double, 4> ang{};
    for (auto& a : ang) a = rng.uniform(0.0, 2 * 3.14159265358979323846);
    std::sort(ang.begin(), ang.end());
    bool ok = true;
    for (int i = 0; i < 4; ++i) {
      double next = i == 3 ? ang[0] + 2 * 3.14159265358979323846 : ang[size_t(i) + 1];
      if (next - ang[size_t(i)] < 0.15) ok = false;
    }
    if (!ok) continue;
    Configuration<double> pts;
    for (double a : ang) pts.push_back({rad * std::cos(a), rad * std::sin(a), 0});
    return pts;
  }
}

}  // namespace

TEST_CASE("d3 matches its defining product") {
  CHECK(d3(1.0, 1.0, 1.0) == 1.0);
  CHECK(d3(1.0, 2.0, 3.0) == 0.0);
  CHECK(d3(3.0, 4.0, 5.0) == 48.0);
}

TEST_CASE("d3 bound chain") {
  SECTION("equality at the symmetric point") {
    auto b = d3_bound_suite(1, 1, 1);
    CHECK(b.d3 == 1.0);
    CHECK(b.schur_bound == Catch::Approx(1.0));
    CHECK(b.mean_bound == Catch::Approx(1.0));
    CHECK(b.product == 1.0);
    CHECK(b.power_bound == Catch::Approx(1.0));
    CHECK(b.chain_ok);
  }
  SECTION("pinned 3-4-5 values") {
    auto b = d3_bound_suite(3, 4, 5);
    CHECK(b.d3 == 48.0);
    CHECK(b.schur_bound == Catch::Approx(54.0));
    CHECK(b.mean_bound == Catch::Approx(56.25));
    CHECK(b.product == 60.0);
    CHECK(b.chain_ok);
  }
  SECTION("degenerate direction still bounded") {
    auto b = d3_bound_suite(2, 2, 3);
    CHECK(b.d3 == Catch::Approx(9.0));
    CHECK(b.product == 12.0);
    CHECK(b.chain_ok);
  }
  SECTION("zero triple rejected") {
    CHECK_THROWS_AS(d3_bound_suite(0, 0, 0), std::domain_error);
  }
  SECTION("holds on random triangles") {
    Rng rng(31);
    for (int t = 0; t < 100000; ++t) {
      double x = rng.uniform(0.01, 1.0), y = rng.uniform(0.01, 1.0), z = rng.uniform(0.01, 1.0);
      double a = y + z, b = x + z, c = x + y;
      REQUIRE(d3_bound_suite(a, b, c).chain_ok);
    }
  }
}

TEST_CASE("schur identity suite passes throughout") {
  auto suite = schur_identity_suite();
  REQUIRE(suite.size() == 11);
  for (const auto& [name, ok] : suite) {
    INFO(name);
    CHECK(ok);
  }
}

TEST_CASE("vol2 matches known volumes") {
  CHECK(vol2(regular_edge(1)) == Catch::Approx(2.0).epsilon(1e-12));
  DistanceData square{1, std::sqrt(2.0), 1, 1, std::sqrt(2.0), 1};
  CHECK(vol2(square) == Catch::Approx(0.0).margin(1e-12));
  double s2 = std::sqrt(2.0);
  DistanceData tri_rect{s2, s2, 1, s2, 1, 1};
  CHECK(vol2(tri_rect) == Catch::Approx(4.0).epsilon(1e-12));
  Rng rng(32);
  for (int t = 0; t < 200; ++t) {
    auto pts = random_quad(rng);
    Vec3<double> u = pts[1] - pts[0], v = pts[2] - pts[0], w = pts[3] - pts[0];
    double vol6 = dot(cross(u, v), w);
    CHECK(vol2(DistanceData::from_points(pts)) == Catch::Approx(4 * vol6 * vol6).epsilon(1e-8));
  }
}

TEST_CASE("a4 forms agree and hit the pinned values") {
  CHECK(a4(regular_edge(2), A4Form::face) == Catch::Approx(2304.0).epsilon(1e-12));
  CHECK(a4(regular_edge(2), A4Form::sum) == Catch::Approx(2304.0).epsilon(1e-12));
  DistanceData line{1, 2, 3, 1, 2, 1};
  CHECK(a4(line, A4Form::face) == Catch::Approx(a4(line, A4Form::sum)).margin(1e-9));
  Rng rng(33);
  for (int t = 0; t < 10000; ++t) {
    auto d = random_embeddable(rng);
    double f = a4(d, A4Form::face), s = a4(d, A4Form::sum);
    REQUIRE(std::fabs(f - s) <= 1e-10 * std::max({std::fabs(f), std::fabs(s), 1.0}));
  }
}

TEST_CASE("re_d4 anchors and regrouping") {
  CHECK(re_d4(regular_edge(2)) == Catch::Approx(6400.0).epsilon(1e-12));
  DistanceData square{1, std::sqrt(2.0), 1, 1, std::sqrt(2.0), 1};
  CHECK(re_d4(square) == Catch::Approx(96 + 64 * std::sqrt(2.0)).epsilon(1e-12));
  Rng rng(34);
  for (int t = 0; t < 10000; ++t) {
    auto d = random_embeddable(rng);
    double a = re_d4(d), b = re_d4_regrouped(d);
    REQUIRE(std::fabs(a - b) <= 1e-10 * std::max(std::fabs(a), 1.0));
    REQUIRE(volume_mobius_gap(d) <= 1e-10 * std::fabs(mobius_d3(d)) + 1e-12);
    REQUIRE(a >= 60 * prod_r(d));
  }
}

TEST_CASE("tetra scalars bundle is self-consistent") {
  auto ts = tetra_scalars(regular_edge(2));
  CHECK(ts.vol2 == Catch::Approx(128.0).epsilon(1e-12));
  CHECK(ts.a4 == Catch::Approx(2304.0).epsilon(1e-12));
  CHECK(ts.re_d4 == Catch::Approx(6400.0).epsilon(1e-12));
  CHECK(ts.prod_r == Catch::Approx(64.0).epsilon(1e-12));
  for (double f : ts.d3_faces) CHECK(f == Catch::Approx(8.0).epsilon(1e-12));
  CHECK_THROWS_AS(tetra_scalars(DistanceData{1, 1, 1, 1, 1, 0}), std::domain_error);
}

TEST_CASE("c3 right side") {
  CHECK(c3_rhs(regular_edge(2)) == Catch::Approx(26873856.0).epsilon(1e-12));
  CHECK(c3_rhs(regular_edge(1)) == Catch::Approx(6561.0).epsilon(1e-12));
  DistanceData line{1, 2, 3, 1, 2, 1};
  double expect = 1;
  for (int l = 1; l <= 4; ++l) expect *= 8 * face_product(line, l);
  CHECK(c3_rhs(line) == Catch::Approx(expect).epsilon(1e-12));
}

TEST_CASE("four points gap") {
  SECTION("regular tetrahedron is the equality case") {
    CHECK(four_points_gap(regular_edge(2), GapMode::weak) == Catch::Approx(0.0).margin(1e-9));
    CHECK(four_points_gap(regular_edge(2), GapMode::strong) == Catch::Approx(0.0).margin(1e-9));
    CHECK(four_points_gap(regular_edge(2), GapMode::weak) >= 0);
  }
  SECTION("unit square satisfies the weak conjecture") {
    DistanceData square{1, std::sqrt(2.0), 1, 1, std::sqrt(2.0), 1};
    CHECK(four_points_gap(square, GapMode::weak) >= 0);
  }
  SECTION("strong gap never exceeds weak gap") {
    Rng rng(35);
    for (int t = 0; t < 2000; ++t) {
      auto d = random_embeddable(rng);
      double w = four_points_gap(d, GapMode::weak);
      double s = four_points_gap(d, GapMode::strong);
      REQUIRE(s <= w + 1e-9 * (std::fabs(w) + 1));
    }
  }
  SECTION("weak gap implies the squared C3 bound") {
    Rng rng(36);
    for (int t = 0; t < 2000; ++t) {
      auto d = random_embeddable(rng);
      double w = four_points_gap(d, GapMode::weak);
      if (w < 0) continue;
      double adj = re_d4(d) - 4.75 * 2 * vol2(d);
      REQUIRE(adj * adj >= c3_rhs(d) * (1 - 1e-9));
    }
  }
}

TEST_CASE("trigonometric quantities") {
  SECTION("unit square values") {
    Configuration<double> sq{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
    auto tq = trig_quantities(sq);
    CHECK(tq.c == Catch::Approx(2.0).margin(1e-12));
    for (int l = 0; l < 4; ++l) {
      CHECK(tq.c_l[size_t(l)] == Catch::Approx((3 + std::sqrt(2.0)) / 2).epsilon(1e-12));
      CHECK(tq.c_hat[size_t(l)] == Catch::Approx((3 + std::sqrt(2.0)) / 2).epsilon(1e-12));
    }
    CHECK(tq.re_d4_trig == Catch::Approx(32 * (3 + 2 * std::sqrt(2.0))).epsilon(1e-12));
  }
  SECTION("cyclic quadrilaterals have c = 2 and bounded c_l") {
    Rng rng(37);
    for (int t = 0; t < 300; ++t) {
      auto pts = cyclic_quad(rng, rng.uniform(0.5, 3.0));
      auto tq = trig_quantities(pts);
      REQUIRE(tq.c == Catch::Approx(2.0).margin(1e-7));
      for (double cl : tq.c_l) {
        REQUIRE(cl >= 2.0 - 1e-9);
        REQUIRE(cl <= 2.25 + 1e-9);
      }
      DistanceData d = DistanceData::from_points(pts);
      double lhs = re_d4(d);
      REQUIRE(lhs * lhs >= c3_rhs(d) * (1 - 1e-8));
    }
  }
  SECTION("random planar quadrilaterals agree with the polynomial form") {
    Rng rng(38);
    int done = 0;
    while (done < 500) {
      Configuration<double> pts;
      for (int i = 0; i < 4; ++i) pts.push_back({rng.normal(), rng.normal(), 0});
      bool ok = true;
      for (size_t i = 0; i < 4 && ok; ++i)
        for (size_t j = i + 1; j < 4 && ok; ++j)
          if (distance(pts[i], pts[j]) < 0.1) ok = false;
      if (!ok) continue;
      ++done;
      auto tq = trig_quantities(pts);
      REQUIRE(tq.re_d4_trig ==
              Catch::Approx(re_d4(DistanceData::from_points(pts))).epsilon(1e-8));
    }
  }
  SECTION("nonplanar input is refused") {
    Configuration<double> tetra{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    CHECK_THROWS_WITH(trig_quantities(tetra), Catch::Matchers::ContainsSubstring("planar-only"));
  }
}

TEST_CASE("triangle trig identity") {
  Configuration<double> equi{{0, 0, 0}, {1, 0, 0}, {0.5, std::sqrt(3.0) / 2, 0}};
  CHECK(d3_trig(equi) == Catch::Approx(9.0).epsilon(1e-12));
  Rng rng(39);
  for (int t = 0; t < 2000; ++t) {
    Configuration<double> tri;
    for (int i = 0; i < 3; ++i) tri.push_back({rng.normal(), rng.normal(), rng.normal()});
    double a = distance(tri[1], tri[2]), b = distance(tri[0], tri[2]), c = distance(tri[0], tri[1]);
    if (std::min({a, b, c}) < 0.05) continue;
    REQUIRE(d3_trig(tri) == Catch::Approx(d3(a, b, c) + 8 * a * b * c).epsilon(1e-10));
  }
}

TEST_CASE("distance data plumbing") {
  DistanceData d{1, 2, 3, 4, 5, 6};
  CHECK(d(1, 2) == 1);
  CHECK(d(2, 1) == 1);
  CHECK(d(1, 3) == 2);
  CHECK(d(1, 4) == 3);
  CHECK(d(2, 3) == 4);
  CHECK(d(2, 4) == 5);
  CHECK(d(3, 4) == 6);
  CHECK_THROWS_AS(d(1, 1), std::out_of_range);
  CHECK_THROWS_AS(d(0, 2), std::out_of_range);
  CHECK(face_of(1) == std::array<int, 3>{2, 3, 4});
  CHECK(face_of(3) == std::array<int, 3>{1, 2, 4});
  DistanceData bad{1, 1, 1, 1, 1, -1};
  CHECK_THROWS_AS(bad.validate(), std::domain_error);
  CHECK(faces_valid(regular_edge(1)));
  CHECK_FALSE(faces_valid(DistanceData{1, 1, 1, 1, 1, 10}));
}
