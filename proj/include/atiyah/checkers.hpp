#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "closed_forms.hpp"
#include "families.hpp"
#include "geometry.hpp"
#include "rng.hpp"

// Verdict engine for the conjectures C1 (nonvanishing), C2 (|D_n| >= 1),
// C3 (|D_n|^(n-2) >= prod of deleted-point subdeterminants) and the weak and
// strong Four Points inequalities, plus random scans and family sweeps.

namespace atiyah {

enum class Conjecture { c1, c2, c3, fp_weak, fp_strong, eq_4_35 };
enum class Precision { double_prec, extended };
enum class Distribution { gaussian, uniform_ball, near_collinear };
enum class Family {
  parallelogram,
  cyclic_quad,
  upright,
  edge_tangential,
  trirectangular,
  semiregular,
  wedge
};

inline const char* conjecture_name(Conjecture c) {
  switch (c) {
    case Conjecture::c1: return "C1";
    case Conjecture::c2: return "C2";
    case Conjecture::c3: return "C3";
    case Conjecture::fp_weak: return "FP-weak";
    case Conjecture::fp_strong: return "FP-strong";
    case Conjecture::eq_4_35: return "Eq-4.35";
  }
  return "?";
}

inline const char* family_name(Family f) {
  switch (f) {
    case Family::parallelogram: return "parallelogram";
    case Family::cyclic_quad: return "cyclic_quad";
    case Family::upright: return "upright";
    case Family::edge_tangential: return "edge_tangential";
    case Family::trirectangular: return "trirectangular";
    case Family::semiregular: return "semiregular";
    case Family::wedge: return "wedge";
  }
  return "?";
}

inline const char* distribution_name(Distribution d) {
  switch (d) {
    case Distribution::gaussian: return "gaussian";
    case Distribution::uniform_ball: return "uniform-ball";
    case Distribution::near_collinear: return "near-collinear";
  }
  return "?";
}

struct Verdict {
  Conjecture conjecture = Conjecture::c1;
  bool holds = false;
  double margin = 0;       // signed slack; >= 0 iff holds
  double band = 0;         // numerical noise level; |margin| <= band was clamped to 0
  Precision precision_used = Precision::double_prec;
  uint64_t config_fingerprint = 0;
};

struct Report {
  std::vector<Verdict> verdicts;
  double min_margin = std::numeric_limits<double>::infinity();
  Configuration<double> argmin_config;
  uint64_t seed = 0;
  int64_t sample_count = 0;
  int64_t violation_count = 0;

  void absorb(const Verdict& v, const Configuration<double>& pts, bool keep) {
    if (keep) verdicts.push_back(v);
    if (v.margin < min_margin) {
      min_margin = v.margin;
      argmin_config = pts;
    }
    if (!v.holds) ++violation_count;
  }
};

inline uint64_t config_fingerprint(const Configuration<double>& pts) {
  uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](double v) {
    uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    for (int i = 0; i < 8; ++i) {
      h ^= (bits >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  for (const auto& p : pts) {
    mix(p.x);
    mix(p.y);
    mix(p.z);
  }
  return h;
}

namespace detail {

// C1 decides against this threshold; the margin is shifted by it so that
// margin >= 0 exactly when the verdict holds.
constexpr double kC1Threshold = 1e-8;
// escalate to extended precision when a double-precision margin is this close
// to the decision boundary
constexpr double kEscalationBand = 1e-6;
// noise band for clamping extended-precision margins, scaled to the working
// mantissa so a narrower --precision keeps equality cases inside the band:
// 10^(-5/8 of the decimal digit budget), which is 1e-50 at the default
// 256-bit / 80-digit setting
inline double extended_band() {
  return std::pow(10.0, -0.625 * static_cast<double>(ExtReal::default_precision()));
}

inline double min_separation(const Configuration<double>& pts) {
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) best = std::min(best, distance(pts[i], pts[j]));
  return best;
}

inline double diameter(const Configuration<double>& pts) {
  double best = 0;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, distance(pts[i], pts[j]));
  return best;
}

inline bool nearly_coincident(const Configuration<double>& pts) {
  return min_separation(pts) < 1e-6 * std::max(1e-300, diameter(pts));
}

// clamp a margin that sits inside the noise band to exactly zero so the
// holds/margin invariant stays consistent at equality cases
inline void apply_band(Verdict& v, double band) {
  v.band = band;
  if (std::fabs(v.margin) <= band) v.margin = 0;
  v.holds = v.margin >= 0;
}

inline double extended_normalized_abs(const Configuration<double>& pts) {
  auto ext = to_extended(pts);
  auto det = normalized_determinant(ext);
  return static_cast<double>(det.normalized_abs);
}

}  // namespace detail

inline Verdict check_c1(const Configuration<double>& pts) {
  auto det = normalized_determinant(pts);
  Verdict v;
  v.conjecture = Conjecture::c1;
  v.config_fingerprint = config_fingerprint(pts);
  double value = det.normalized_abs;
  bool marginal = value < detail::kEscalationBand ||
                  cx_abs(det.raw) < 1e-10 * det.condition_hint || detail::nearly_coincident(pts);
  if (marginal) {
    value = detail::extended_normalized_abs(pts);
    v.precision_used = Precision::extended;
  }
  v.margin = value - detail::kC1Threshold;
  detail::apply_band(v, v.precision_used == Precision::extended ? detail::extended_band() : 0.0);
  return v;
}

inline Verdict check_c2(const Configuration<double>& pts) {
  auto det = normalized_determinant(pts);
  Verdict v;
  v.conjecture = Conjecture::c2;
  v.config_fingerprint = config_fingerprint(pts);
  v.margin = det.normalized_abs - 1;
  if (std::fabs(v.margin) < detail::kEscalationBand) {
    v.margin = detail::extended_normalized_abs(pts) - 1;
    v.precision_used = Precision::extended;
    detail::apply_band(v, detail::extended_band());
  } else {
    detail::apply_band(v, 0.0);
  }
  return v;
}

namespace detail {

template <typename R>
struct C3Parts {
  R lhs;   // |D_n|^(n-2)
  R prod;  // product of deleted-point subdeterminant moduli
};

template <typename R>
C3Parts<R> c3_parts(const Configuration<R>& pts) {
  using std::pow;
  const int n = int(pts.size());
  auto det = normalized_determinant(pts);
  C3Parts<R> parts{pow(det.normalized_abs, n - 2), R(1)};
  for (int k = 0; k < n; ++k) {
    Configuration<R> sub;
    sub.reserve(size_t(n - 1));
    for (int i = 0; i < n; ++i)
      if (i != k) sub.push_back(pts[size_t(i)]);
    parts.prod *= normalized_determinant(sub).normalized_abs;
  }
  return parts;
}

}  // namespace detail

inline Verdict check_c3(const Configuration<double>& pts) {
  const int n = int(pts.size());
  if (n < 3) throw std::invalid_argument("C3 needs at least 3 points");
  Verdict v;
  v.conjecture = Conjecture::c3;
  v.config_fingerprint = config_fingerprint(pts);
  auto parts = detail::c3_parts(pts);
  v.margin = parts.lhs - parts.prod;

  if (n == 4) {
    // cross-check the subdeterminant product against the closed-form route:
    // prod_faces |D_3| = prod_faces (d3 + 8 face_product) / (8 face_product)
    auto dd = DistanceData::from_points(pts);
    double closed = c3_rhs(dd) / (4096 * prod_r(dd) * prod_r(dd));
    if (std::fabs(parts.prod - closed) > 1e-8 * std::max(1.0, std::fabs(closed)))
      throw std::logic_error("C3 subdeterminant route disagrees with the face closed form");
  }

  if (std::fabs(v.margin) < detail::kEscalationBand) {
    auto ext = detail::c3_parts(to_extended(pts));
    v.margin = static_cast<double>(ext.lhs - ext.prod);
    v.precision_used = Precision::extended;
    detail::apply_band(v, detail::extended_band());
  } else {
    detail::apply_band(v, 0.0);
  }
  return v;
}

struct FourPointsVerdicts {
  Verdict weak;
  Verdict strong;
};

inline FourPointsVerdicts check_four_points(const Configuration<double>& pts) {
  if (pts.size() != 4) throw std::invalid_argument("Four Points checks need exactly 4 points");
  auto dd = DistanceData::from_points(pts);
  double mean_r = 0;
  for (double r : dd.as_array()) mean_r += r / 6;
  double band = 1e-9 * std::max(1.0, std::pow(mean_r, 6));

  FourPointsVerdicts out;
  uint64_t fp = config_fingerprint(pts);
  out.weak.conjecture = Conjecture::fp_weak;
  out.weak.config_fingerprint = fp;
  out.weak.margin = four_points_gap(dd, GapMode::weak);
  detail::apply_band(out.weak, band);
  out.strong.conjecture = Conjecture::fp_strong;
  out.strong.config_fingerprint = fp;
  out.strong.margin = four_points_gap(dd, GapMode::strong);
  detail::apply_band(out.strong, band);

  // implication chain: strong => weak => C3 (Prop 2.2)
  if (out.strong.holds && !out.weak.holds)
    throw std::logic_error("strong Four Points verdict holds but weak fails");
  if (out.weak.holds && !check_c3(pts).holds)
    throw std::logic_error("weak Four Points verdict holds but C3 fails");
  return out;
}

// ---------------------------------------------------------------------------
// Random scans.

namespace detail {

inline Configuration<double> sample_config(int n, Distribution dist, double jitter, Rng& rng) {
  for (;;) {
    Configuration<double> pts;
    pts.reserve(size_t(n));
    for (int i = 0; i < n; ++i) {
      Vec3<double> p{};
      switch (dist) {
        case Distribution::gaussian:
          p = {rng.normal(), rng.normal(), rng.normal()};
          break;
        case Distribution::uniform_ball:
          do {
            p = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
          } while (norm2(p) > 1);
          break;
        case Distribution::near_collinear:
          p = {rng.uniform(-1.5, 1.5), jitter * rng.normal(), jitter * rng.normal()};
          break;
      }
      pts.push_back(p);
    }
    if (min_separation(pts) >= 1e-9) return pts;
  }
}

}  // namespace detail

inline Report scan_random(int n, int64_t samples, uint64_t seed, Distribution dist,
                          double jitter = 1e-3, bool keep_verdicts = false) {
  if (n < 2) throw std::invalid_argument("scan_random needs n >= 2");
  if (samples < 1) throw std::invalid_argument("scan_random needs at least one sample");
  Report report;
  report.seed = seed;
  for (int64_t s = 0; s < samples; ++s) {
    Rng rng(seed, uint64_t(s));
    auto pts = detail::sample_config(n, dist, jitter, rng);
    report.absorb(check_c1(pts), pts, keep_verdicts);
    report.absorb(check_c2(pts), pts, keep_verdicts);
    if (n >= 3) report.absorb(check_c3(pts), pts, keep_verdicts);
    ++report.sample_count;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Family sweeps over default parameter grids (>= 200 points per family).
// Any violated verdict or failed strengthened inequality marks the sweep as
// an implementation bug.

struct SweepReport {
  Family family = Family::parallelogram;
  Report report;
  int points_evaluated = 0;
  int points_skipped = 0;  // infeasible or degenerate grid corners
  bool strengthened_ok = true;

  bool all_hold() const { return report.violation_count == 0 && strengthened_ok; }
};

namespace detail {

inline void sweep_tetra_point(SweepReport& out, const Configuration<double>& pts,
                              double strengthened_margin, double strengthened_scale) {
  out.report.absorb(check_c2(pts), pts, true);
  out.report.absorb(check_c3(pts), pts, true);
  auto fp = check_four_points(pts);
  out.report.absorb(fp.weak, pts, true);
  out.report.absorb(fp.strong, pts, true);
  if (strengthened_margin < -1e-9 * std::max(1.0, strengthened_scale)) out.strengthened_ok = false;
  ++out.points_evaluated;
}

inline std::vector<double> linear_grid(double lo, double hi, int steps) {
  std::vector<double> g;
  for (int i = 0; i < steps; ++i) g.push_back(lo + (hi - lo) * i / (steps - 1));
  return g;
}

}  // namespace detail

inline SweepReport family_sweep(Family family) {
  SweepReport out;
  out.family = family;
  switch (family) {
    case Family::parallelogram: {
      auto sides = detail::linear_grid(0.5, 2.2, 4);
      auto angles = detail::linear_grid(0.15, 3.0, 13);
      for (double a : sides)
        for (double b : sides)
          for (double th : angles) {
            auto fc = make_parallelogram(a, b, th);
            if (fc.degenerate) {
              ++out.points_skipped;
              continue;
            }
            auto dd = DistanceData::from_points(fc.points);
            double d4 = re_d4(dd);
            double margin = parallelogram_c3_margin(a, b, dd.r13, dd.r24, d4);
            detail::sweep_tetra_point(out, fc.points, margin, std::fabs(d4));
          }
      break;
    }
    case Family::cyclic_quad: {
      auto radii = detail::linear_grid(0.7, 1.6, 4);
      auto gaps = detail::linear_grid(0.4, 1.9, 4);
      for (double radius : radii)
        for (double g1 : gaps)
          for (double g2 : gaps)
            for (double g3 : gaps) {
              auto fc = make_cyclic_quad(radius, {0, g1, g1 + g2, g1 + g2 + g3});
              auto dd = DistanceData::from_points(fc.points);
              // Ptolemy strengthening: Re(D_4)^2 >= c3 right side on the circle
              double en = re_d4(dd);
              double margin = en * en - c3_rhs(dd);
              detail::sweep_tetra_point(out, fc.points, margin, en * en);
              auto tq = trig_quantities(fc.points);
              for (double cl : tq.c_l)
                if (cl < 2 - 1e-9 || cl > 2.25 + 1e-9) out.strengthened_ok = false;
            }
      break;
    }
    case Family::upright: {
      auto legs = detail::linear_grid(0.4, 1.9, 4);
      auto factors = detail::linear_grid(1.05, 3.8, 4);
      for (double x : legs)
        for (double y : legs)
          for (double z : legs)
            for (double f : factors) {
              double a = y + z, b = x + z, c = x + y;
              double d = f * upright_circumradius(a, b, c);
              auto fc = make_upright(a, b, c, d);
              if (fc.degenerate) {
                ++out.points_skipped;
                continue;
              }
              double gap = upright_gap(a, b, c, d);
              detail::sweep_tetra_point(out, fc.points, gap, std::pow(a + b + c, 6));
            }
      break;
    }
    case Family::edge_tangential: {
      auto ts = detail::linear_grid(0.4, 2.1, 4);
      for (double t1 : ts)
        for (double t2 : ts)
          for (double t3 : ts)
            for (double t4 : ts) {
              EdgeTangential et;
              try {
                et = make_edge_tangential({t1, t2, t3, t4});
              } catch (const std::domain_error&) {
                ++out.points_skipped;
                continue;
              }
              if (et.degenerate) {
                ++out.points_skipped;
                continue;
              }
              // the strong Four Points inequality is the proven statement here;
              // its margin doubles as the strengthened check
              double gap = four_points_gap(et.distances, GapMode::strong);
              detail::sweep_tetra_point(out, et.points, gap, std::pow(et.e[0], 6));
            }
      break;
    }
    case Family::trirectangular: {
      auto legs = detail::linear_grid(0.4, 2.5, 6);
      for (double x : legs)
        for (double y : legs)
          for (double z : legs) {
            auto fc = make_trirectangular(x, y, z);
            auto dd = DistanceData::from_points(fc.points);
            double a = std::hypot(y, z), b = std::hypot(x, z), c = std::hypot(x, y);
            double floor_term = 64 * a * b * c * x * y * z;
            double margin = re_d4(dd) - floor_term;
            detail::sweep_tetra_point(out, fc.points, margin, floor_term);
            double excess = trirectangular_excess(x, y, z);
            if (excess < -1e-9 * floor_term) out.strengthened_ok = false;
          }
      break;
    }
    case Family::semiregular: {
      auto half = detail::linear_grid(0.3, 1.8, 6);
      for (double u : half)
        for (double v : half)
          for (double w : half) {
            auto fc = make_semiregular(u, v, w);
            auto dd = DistanceData::from_points(fc.points);
            double a = dd.r12, b = dd.r13, c = dd.r14;
            double scale = std::pow(a + b + c, 6);
            double margin = std::min(semiregular_weak_gap(a, b, c),
                                     semiregular_strong_gap(a, b, c));
            detail::sweep_tetra_point(out, fc.points, margin, scale);
          }
      break;
    }
    case Family::wedge: {
      auto ab = detail::linear_grid(0.8, 1.5, 4);
      auto xy = detail::linear_grid(0.5, 1.9, 5);
      for (double a : ab)
        for (double b : ab)
          for (double x : xy)
            for (double y : xy) {
              if (!wedge_feasible(a, b, x, y)) {
                ++out.points_skipped;
                continue;
              }
              auto fc = make_wedge(a, b, x, y);
              if (fc.degenerate) {
                ++out.points_skipped;
                continue;
              }
              auto dd = DistanceData::from_points(fc.points);
              double en = re_d4(dd);
              double margin = en - wedge_c3_strengthened_rhs(a, b, x, y);
              detail::sweep_tetra_point(out, fc.points, margin, std::fabs(en));
              if (std::fabs(wedge_re_d4_first(a, b, x, y) - en) > 1e-9 * (std::fabs(en) + 1) ||
                  std::fabs(wedge_re_d4_second(a, b, x, y) - en) > 1e-9 * (std::fabs(en) + 1))
                out.strengthened_ok = false;
            }
      break;
    }
  }
  return out;
}

}  // namespace atiyah
