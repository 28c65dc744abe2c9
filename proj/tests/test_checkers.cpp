#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "atiyah/checkers.hpp"
#include "atiyah/families.hpp"
#include "atiyah/geometry.hpp"
#include "atiyah/rng.hpp"

using namespace atiyah;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

Configuration<double> random_points(int n, Rng& rng, double min_sep = 0.05) {
  for (;;) {
    Configuration<double> pts;
    for (int i = 0; i < n; ++i) pts.push_back({rng.normal(), rng.normal(), rng.normal()});
    bool ok = true;
    for (size_t i = 0; i < pts.size() && ok; ++i)
      for (size_t j = i + 1; j < pts.size() && ok; ++j)
        if (distance(pts[i], pts[j]) < min_sep) ok = false;
    if (ok) return pts;
  }
}

Configuration<double> regular_tetrahedron() {
  return {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
}

Configuration<double> equilateral() {
  return {{0, 0, 0}, {1, 0, 0}, {0.5, std::sqrt(3.0) / 2, 0}};
}

}  // namespace

TEST_CASE("check_c1 verdicts", "[checkers]") {
  SECTION("collinear sets hold with margin near 1") {
    Configuration<double> pts{{0, 0, 0}, {1, 0, 0}, {2.5, 0, 0}, {4, 0, 0}};
    auto v = check_c1(pts);
    CHECK(v.holds);
    CHECK(v.conjecture == Conjecture::c1);
    CHECK_THAT(v.margin, WithinAbs(1.0, 1e-7));
    CHECK(v.precision_used == Precision::double_prec);
    CHECK(v.config_fingerprint == config_fingerprint(pts));
  }

  SECTION("random tetrahedra hold") {
    Rng rng(31);
    for (int it = 0; it < 100; ++it) {
      auto v = check_c1(random_points(4, rng));
      CHECK(v.holds);
      CHECK(v.margin > 0);
    }
  }

  SECTION("near-coincident pairs escalate to extended precision") {
    Configuration<double> pts{{0, 0, 0}, {1e-8, 0, 0}, {1, 1, 0}, {0, 1, 1}};
    auto v = check_c1(pts);
    CHECK(v.precision_used == Precision::extended);
    CHECK(v.holds);
  }

  SECTION("coincident points are an error") {
    Configuration<double> pts{{0, 0, 0}, {0, 0, 0}, {1, 1, 0}};
    CHECK_THROWS_AS(check_c1(pts), std::domain_error);
  }
}

TEST_CASE("check_c2 verdicts", "[checkers]") {
  SECTION("pinned margins") {
    CHECK_THAT(check_c2(equilateral()).margin, WithinRel(1.0 / 8.0, 1e-9));
    CHECK_THAT(check_c2(regular_tetrahedron()).margin, WithinRel(9.0 / 16.0, 1e-9));
  }

  SECTION("collinear margin is exactly zero after escalation") {
    Configuration<double> pts{{-1, 0, 0}, {0.3, 0, 0}, {2, 0, 0}};
    auto v = check_c2(pts);
    CHECK(v.holds);
    CHECK(v.margin == 0.0);
    CHECK(v.precision_used == Precision::extended);
    CHECK(v.band > 0);
  }

  SECTION("random configurations hold") {
    Rng rng(32);
    for (int n = 3; n <= 6; ++n)
      for (int it = 0; it < 50; ++it) {
        auto v = check_c2(random_points(n, rng));
        CHECK(v.holds);
      }
  }
}

TEST_CASE("check_c3 verdicts", "[checkers]") {
  SECTION("needs three points") {
    Configuration<double> pts{{0, 0, 0}, {1, 0, 0}};
    CHECK_THROWS_AS(check_c3(pts), std::invalid_argument);
  }

  SECTION("n=3 degenerates to C2") {
    Rng rng(33);
    for (int it = 0; it < 50; ++it) {
      auto pts = random_points(3, rng);
      auto c3 = check_c3(pts);
      auto c2 = check_c2(pts);
      CHECK_THAT(c3.margin, WithinAbs(c2.margin, 1e-10 * (1 + std::fabs(c2.margin))));
    }
  }

  SECTION("regular tetrahedron pinned margin") {
    auto v = check_c3(regular_tetrahedron());
    CHECK(v.holds);
    CHECK_THAT(v.margin, WithinRel(0.839599609375, 1e-9));  // (25/16)^2 - (9/8)^4
  }

  SECTION("subdeterminant route vs closed form on random tetrahedra") {
    Rng rng(34);
    for (int it = 0; it < 1000; ++it) CHECK_NOTHROW(check_c3(random_points(4, rng)));
  }

  SECTION("collinear-plus-one five point configurations hold") {
    Rng rng(35);
    for (int it = 0; it < 40; ++it) {
      std::vector<double> a;
      double cur = rng.uniform(-2, -1);
      for (int i = 0; i < 4; ++i) {
        a.push_back(cur);
        cur += rng.uniform(0.3, 1.2);
      }
      auto cp = make_collinear_plus(a, rng.uniform(0.4, 1.6));
      auto v = check_c3(cp.points);
      CHECK(v.holds);
    }
  }
}

TEST_CASE("check_four_points verdicts", "[checkers]") {
  SECTION("regular tetrahedron sits at the equality case") {
    auto fps = check_four_points(regular_tetrahedron());
    CHECK(fps.weak.holds);
    CHECK(fps.strong.holds);
    CHECK(fps.weak.margin == 0.0);
    CHECK(fps.strong.margin == 0.0);
    CHECK(fps.weak.band > 0);
  }

  SECTION("random tetrahedra satisfy the chain") {
    Rng rng(36);
    for (int it = 0; it < 300; ++it) {
      auto fps = check_four_points(random_points(4, rng));
      CHECK(fps.weak.conjecture == Conjecture::fp_weak);
      CHECK(fps.strong.conjecture == Conjecture::fp_strong);
      if (fps.strong.holds) CHECK(fps.weak.holds);
    }
  }

  SECTION("wrong point count is an error") {
    CHECK_THROWS_AS(check_four_points(equilateral()), std::invalid_argument);
  }
}

TEST_CASE("scan_random", "[checkers]") {
  SECTION("deterministic for a fixed seed") {
    auto r1 = scan_random(4, 50, 2026, Distribution::gaussian, 1e-3, true);
    auto r2 = scan_random(4, 50, 2026, Distribution::gaussian, 1e-3, true);
    REQUIRE(r1.verdicts.size() == r2.verdicts.size());
    for (size_t i = 0; i < r1.verdicts.size(); ++i) {
      CHECK(r1.verdicts[i].margin == r2.verdicts[i].margin);
      CHECK(r1.verdicts[i].config_fingerprint == r2.verdicts[i].config_fingerprint);
    }
    CHECK(r1.min_margin == r2.min_margin);
  }

  SECTION("report bookkeeping") {
    auto r = scan_random(3, 40, 7, Distribution::uniform_ball, 1e-3, true);
    CHECK(r.sample_count == 40);
    CHECK(r.seed == 7);
    REQUIRE(r.verdicts.size() == 40 * 3);  // C1, C2, C3 per sample
    double lo = std::numeric_limits<double>::infinity();
    for (const auto& v : r.verdicts) lo = std::min(lo, v.margin);
    CHECK(r.min_margin == lo);
  }

  SECTION("gaussian and ball scans are violation free") {
    for (auto dist : {Distribution::gaussian, Distribution::uniform_ball}) {
      auto r = scan_random(4, 2000, 11, dist);
      CHECK(r.violation_count == 0);
      CHECK(r.min_margin > 0);
    }
  }

  SECTION("near-collinear C2 margins shrink with the jitter") {
    double m_prev = std::numeric_limits<double>::infinity();
    for (double jitter : {1e-1, 1e-3, 1e-5}) {
      auto r = scan_random(4, 300, 13, Distribution::near_collinear, jitter);
      CHECK(r.violation_count == 0);
      CHECK(r.min_margin < m_prev);
      m_prev = r.min_margin;
    }
    CHECK(m_prev < 1e-4);  // approaching the collinear limit margin 0
  }

  SECTION("parameter validation") {
    CHECK_THROWS_AS(scan_random(1, 10, 0, Distribution::gaussian), std::invalid_argument);
    CHECK_THROWS_AS(scan_random(3, 0, 0, Distribution::gaussian), std::invalid_argument);
  }
}

TEST_CASE("family sweeps hold on default grids", "[checkers][sweep]") {
  const Family all[] = {Family::parallelogram, Family::cyclic_quad,    Family::upright,
                        Family::edge_tangential, Family::trirectangular, Family::semiregular,
                        Family::wedge};
  for (Family f : all) {
    DYNAMIC_SECTION("family " << family_name(f)) {
      auto sweep = family_sweep(f);
      INFO("evaluated " << sweep.points_evaluated << ", skipped " << sweep.points_skipped
                        << ", min margin " << sweep.report.min_margin);
      CHECK(sweep.points_evaluated >= 200);
      CHECK(sweep.report.violation_count == 0);
      CHECK(sweep.strengthened_ok);
      CHECK(sweep.all_hold());
      CHECK(int64_t(sweep.report.verdicts.size()) == 4 * sweep.points_evaluated);
    }
  }
}
