#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <vector>

#include "checkers.hpp"
#include "families.hpp"
#include "geometry.hpp"

// Djokovic's closed determinant formula for dihedral configurations (m points
// on a line through the center of a regular n-gon, perpendicular to its
// plane) and the strengthened bounds of Theorem 4.2.

namespace atiyah {

struct DihedralSpec {
  int m = 0;
  int n = 2;
  std::vector<double> lambda;  // 0 < lambda_1 < ... < lambda_m
};

inline void validate(const DihedralSpec& spec) {
  if (spec.n < 2) throw std::domain_error("dihedral spec needs n >= 2");
  if (spec.m < 0 || spec.lambda.size() != size_t(spec.m))
    throw std::domain_error("dihedral spec needs one lambda per line point");
  for (size_t i = 0; i < spec.lambda.size(); ++i) {
    if (!(spec.lambda[i] > 0)) throw std::domain_error("dihedral lambdas must be positive");
    if (i + 1 < spec.lambda.size() && !(spec.lambda[i] < spec.lambda[i + 1]))
      throw std::domain_error("dihedral lambdas must be strictly increasing");
  }
}

inline uint64_t spec_fingerprint(const DihedralSpec& spec) {
  uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](uint64_t bits) {
    for (int i = 0; i < 8; ++i) {
      h ^= (bits >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(uint64_t(spec.m));
  mix(uint64_t(spec.n));
  for (double v : spec.lambda) {
    uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    mix(bits);
  }
  return h;
}

inline double cot(double x) { return std::cos(x) / std::sin(x); }

// ---------------------------------------------------------------------------
// Proposition 4.1 coefficients c_j = prod_{k=1}^{j} cot(k pi / 2n), validated
// against the direct expansion of h(y) = prod_{s=1}^{n-1} (y - i e^{i pi s/n}).

struct CotCoeffs {
  std::vector<double> c;
  double max_deviation = 0;  // worst relative gap to the h(y) expansion
};

namespace detail {

// descending-power coefficients of h(y); index k holds the coefficient of
// y^{n-1-k}
inline std::vector<std::complex<double>> h_poly(int n) {
  constexpr double kPi = 3.14159265358979323846;
  std::vector<std::complex<double>> h{1.0};
  for (int s = 1; s < n; ++s) {
    std::complex<double> root =
        std::complex<double>(0, 1) * std::exp(std::complex<double>(0, kPi * s / n));
    std::vector<std::complex<double>> next(h.size() + 1, 0.0);
    for (size_t k = 0; k < h.size(); ++k) {
      next[k] += h[k];
      next[k + 1] -= root * h[k];
    }
    h = next;
  }
  return h;
}

}  // namespace detail

inline CotCoeffs cot_coeffs(int n) {
  constexpr double kPi = 3.14159265358979323846;
  if (n < 2) throw std::domain_error("cot_coeffs needs n >= 2");
  CotCoeffs out;
  out.c.resize(size_t(n));
  double run = 1;
  for (int j = 0; j < n; ++j) {
    if (j > 0) run *= cot(j * kPi / (2 * n));
    out.c[size_t(j)] = run;
  }
  auto h = detail::h_poly(n);
  for (int j = 0; j < n; ++j) {
    double scale = std::max(1.0, std::fabs(out.c[size_t(j)]));
    double dev = std::max(std::fabs(h[size_t(j)].real() - out.c[size_t(j)]),
                          std::fabs(h[size_t(j)].imag())) /
                 scale;
    out.max_deviation = std::max(out.max_deviation, dev);
  }
  if (out.max_deviation > 1e-9)
    throw std::logic_error("cotangent coefficients disagree with the h(y) expansion");
  return out;
}

// power sum of the h(y) roots per the Proposition 4.1 case split
inline double power_sum_formula(int n, int s) {
  constexpr double kPi = 3.14159265358979323846;
  if (s % 2 == 0) return (s / 2 - 1) % 2 == 0 ? 1.0 : -1.0;
  double sign = ((s + 1) / 2) % 2 == 0 ? 1.0 : -1.0;
  return sign * cot(s * kPi / (2 * n));
}

inline std::complex<double> h_root_power_sum(int n, int s) {
  constexpr double kPi = 3.14159265358979323846;
  std::complex<double> tot = 0;
  for (int r = 1; r < n; ++r) {
    std::complex<double> root =
        std::complex<double>(0, 1) * std::exp(std::complex<double>(0, kPi * r / n));
    tot += std::pow(root, s);
  }
  return tot;
}

// ---------------------------------------------------------------------------
// Elementary symmetric values and the tilde coefficients.

inline std::vector<double> elementary_values(const std::vector<double>& lambda) {
  std::vector<double> e(lambda.size() + 1, 0.0);
  e[0] = 1;
  for (size_t i = 0; i < lambda.size(); ++i)
    for (size_t k = std::min(i + 1, lambda.size()); k >= 1; --k)
      e[k] += lambda[i] * e[k - 1];
  return e;
}

inline std::vector<double> e_tilde(const DihedralSpec& spec) {
  validate(spec);
  const int N = spec.m + spec.n;
  auto f = detail::h_poly(spec.n);
  for (double l : spec.lambda) {
    std::vector<std::complex<double>> next(f.size() + 1, 0.0);
    for (size_t k = 0; k < f.size(); ++k) {
      next[k] += f[k];
      next[k + 1] += l * f[k];
    }
    f = next;
  }

  auto c = cot_coeffs(spec.n).c;
  auto e = elementary_values(spec.lambda);
  std::vector<double> out(static_cast<size_t>(N));
  for (int k = 0; k < N; ++k) {
    double scale = std::max(1.0, std::fabs(f[size_t(k)].real()));
    if (std::fabs(f[size_t(k)].imag()) > 1e-9 * scale)
      throw std::logic_error("tilde coefficients picked up an imaginary part");
    out[size_t(k)] = f[size_t(k)].real();
    // convolution route c_i E_{k-i} must agree with the direct product
    double conv = 0;
    for (int i = 0; i < spec.n; ++i)
      if (k - i >= 0 && k - i <= spec.m) conv += c[size_t(i)] * e[size_t(k - i)];
    if (std::fabs(conv - out[size_t(k)]) > 1e-8 * scale)
      throw std::logic_error("tilde convolution disagrees with the polynomial product");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Eq 4.36 values and the closed determinant.

inline std::vector<double> f_values(const DihedralSpec& spec) {
  validate(spec);
  const int N = spec.m + spec.n, n = spec.n;
  auto et = e_tilde(spec);
  std::vector<double> f(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    double tot = 0, coef = 1;
    for (int s = 0; k + s * n <= N - 1; ++s) {
      if (s >= 1) coef *= std::pow(spec.lambda[size_t(N - s * n - k - 1)], n);
      tot += coef * et[size_t(k + s * n)];
    }
    if (!(tot > 0)) throw std::logic_error("Eq 4.36 produced a nonpositive f_k");
    f[size_t(k)] = tot;
  }
  return f;
}

inline double closed_det(const DihedralSpec& spec) {
  auto f = f_values(spec);
  double out = std::pow(double(spec.n), spec.n / 2.0);
  for (double v : f) out *= v;
  return out;
}

// ---------------------------------------------------------------------------
// The phi decomposition f_k = sum_l phi_kl E_l and Lemma 4.3.

inline double phi(const DihedralSpec& spec, int k, int l) {
  validate(spec);
  if (k < 0 || k >= spec.n || l < 0 || l > spec.m)
    throw std::invalid_argument("phi indices out of range");
  const int N = spec.m + spec.n, n = spec.n;
  // unique s >= 0 and 0 <= i < n with l = k + s n - i
  int diff = l - k;
  int s = diff <= 0 ? 0 : (diff + n - 1) / n;
  int i = s * n - diff;
  double val = cot_coeffs(n).c[size_t(i)];
  for (int j = 1; j <= s; ++j) val *= std::pow(spec.lambda[size_t(N - j * n - k - 1)], n);
  return val;
}

inline bool lemma_4_3(const DihedralSpec& spec, double tol = 1e-10) {
  validate(spec);
  auto c = cot_coeffs(spec.n).c;
  auto e = elementary_values(spec.lambda);
  auto f = f_values(spec);
  double prod_c = 1;
  for (double v : c) prod_c *= v;
  for (int l = 0; l <= spec.m; ++l) {
    double lhs = 1;
    for (int k = 0; k < spec.n; ++k) lhs *= phi(spec, k, l);
    double rhs = prod_c;
    for (int j = 0; j < l; ++j) rhs *= std::pow(spec.lambda[size_t(spec.m - j - 1)], spec.n);
    if (std::fabs(lhs - rhs) > tol * std::max(1.0, std::fabs(rhs))) return false;
  }
  // the decomposition must also reproduce Eq 4.36
  for (int k = 0; k < spec.n; ++k) {
    double sum = 0;
    for (int l = 0; l <= spec.m; ++l) sum += phi(spec, k, l) * e[size_t(l)];
    if (std::fabs(sum - f[size_t(k)]) > tol * std::max(1.0, std::fabs(f[size_t(k)])))
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Theorem 4.2 bounds and the Eq 4.35 margin.

struct Theorem42 {
  double prod_f = 0;
  double bound1 = 0;  // Hoelder bound prod c_k (sum_l prod_{j<l} lambda_{m-j} E_l)^n
  double bound2 = 0;  // prod c_k prod (1+lambda_i^2)^n
  bool chain_ok = false;
};

inline Theorem42 theorem_4_2_bounds(const DihedralSpec& spec) {
  auto f = f_values(spec);
  auto c = cot_coeffs(spec.n).c;
  auto e = elementary_values(spec.lambda);
  Theorem42 out;
  out.prod_f = 1;
  for (double v : f) out.prod_f *= v;
  double prod_c = 1;
  for (double v : c) prod_c *= v;

  double sum = 0, top = 1;
  for (int l = 0; l <= spec.m; ++l) {
    if (l > 0) top *= spec.lambda[size_t(spec.m - l)];  // descending: largest first
    sum += (l > 0 ? top : 1.0) * e[size_t(l)];
  }
  out.bound1 = prod_c * std::pow(sum, spec.n);

  double prod_norm = 1;
  for (double l : spec.lambda) prod_norm *= std::pow(1 + l * l, spec.n);
  out.bound2 = prod_c * prod_norm;

  out.chain_ok = out.prod_f >= out.bound1 * (1 - 1e-12) && out.bound1 >= out.bound2 * (1 - 1e-12);
  return out;
}

inline Verdict check_4_35(const DihedralSpec& spec) {
  double closed = closed_det(spec);
  double rhs = std::pow(2.0, spec.n * (spec.n - 1) / 2.0);
  for (double l : spec.lambda) rhs *= std::pow(1 + l * l, spec.n);
  Verdict v;
  v.conjecture = Conjecture::eq_4_35;
  v.config_fingerprint = spec_fingerprint(spec);
  v.margin = closed - rhs;
  detail::apply_band(v, 1e-12 * std::max(1.0, rhs));
  return v;
}

// ---------------------------------------------------------------------------
// Geometry bridge: the closed determinant over the unit-spinor determinant of
// the embedded configuration, divided by prod (1+lambda_i^2)^n. Constant in
// lambda for fixed (m, n); the measured constant is 2^C(n,2).

inline double calibration_ratio(const DihedralSpec& spec) {
  validate(spec);
  std::vector<double> a;
  for (double l : spec.lambda) a.push_back((l * l - 1) / (2 * l));
  auto pts = make_dihedral(spec.m, spec.n, a);
  double numeric = normalized_determinant(pts).normalized_abs;
  double denom = numeric;
  for (double l : spec.lambda) denom *= std::pow(1 + l * l, spec.n);
  return closed_det(spec) / denom;
}

}  // namespace atiyah
