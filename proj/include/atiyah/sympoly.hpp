#pragma once

// Exact multivariate polynomials over arbitrary-precision rationals.
// Variables are slots 0..kMaxVars-1 of a dense exponent vector; callers
// assign meaning to slots (distance symbols, xi/X alphabets, ...).

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace atiyah {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kMaxVars = 16;

struct Monomial {
  std::array<uint8_t, kMaxVars> e{};

  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }

  int degree() const {
    int d = 0;
    for (int v : e) d += v;
    return d;
  }

  bool divides(const Monomial& m) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      int s = e[i] + m.e[i];
      if (s > 255) throw std::overflow_error("monomial exponent overflow");
      r.e[i] = static_cast<uint8_t>(s);
    }
    return r;
  }

  Monomial operator/(const Monomial& m) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      if (e[i] < m.e[i]) throw std::domain_error("monomial division underflow");
      r.e[i] = static_cast<uint8_t>(e[i] - m.e[i]);
    }
    return r;
  }
};

class SymPoly {
 public:
  std::map<Monomial, Rational> terms;  // no zero coefficients stored

  SymPoly() = default;

  static SymPoly constant(const Rational& c) {
    SymPoly p;
    if (c != 0) p.terms.emplace(Monomial{}, c);
    return p;
  }
  static SymPoly constant(long c) { return constant(Rational(c)); }

  static SymPoly var(int slot, int power = 1) {
    if (slot < 0 || slot >= kMaxVars) throw std::out_of_range("variable slot");
    SymPoly p;
    Monomial m;
    m.e[slot] = static_cast<uint8_t>(power);
    p.terms.emplace(m, Rational(1));
    return p;
  }

  static SymPoly monomial_term(const Monomial& m, const Rational& c) {
    SymPoly p;
    if (c != 0) p.terms.emplace(m, c);
    return p;
  }

  bool is_zero() const { return terms.empty(); }
  size_t size() const { return terms.size(); }

  bool is_constant() const {
    return terms.empty() || (terms.size() == 1 && terms.begin()->first == Monomial{});
  }

  Rational constant_value() const {
    if (terms.empty()) return Rational(0);
    if (!is_constant()) throw std::domain_error("not a constant polynomial");
    return terms.begin()->second;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  SymPoly& operator+=(const SymPoly& o) {
    for (const auto& [m, c] : o.terms) add_term(m, c);
    return *this;
  }
  SymPoly& operator-=(const SymPoly& o) {
    for (const auto& [m, c] : o.terms) add_term(m, -c);
    return *this;
  }
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }

  SymPoly operator-() const {
    SymPoly r;
    for (const auto& [m, c] : terms) r.terms.emplace(m, -c);
    return r;
  }

  friend SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    SymPoly r;
    for (const auto& [ma, ca] : a.terms)
      for (const auto& [mb, cb] : b.terms) r.add_term(ma * mb, ca * cb);
    return r;
  }
  SymPoly& operator*=(const SymPoly& o) { return *this = *this * o; }

  friend SymPoly operator*(const Rational& c, const SymPoly& p) {
    SymPoly r;
    if (c == 0) return r;
    for (const auto& [m, pc] : p.terms) r.terms.emplace(m, c * pc);
    return r;
  }
  friend SymPoly operator*(const SymPoly& p, const Rational& c) { return c * p; }
  friend SymPoly operator*(long c, const SymPoly& p) { return Rational(c) * p; }

  SymPoly pow(int n) const {
    if (n < 0) throw std::domain_error("negative power");
    SymPoly r = constant(1);
    SymPoly base = *this;
    while (n > 0) {
      if (n & 1) r = r * base;
      base = (n >>= 1) ? base * base : base;
    }
    return r;
  }

  friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.terms == b.terms; }

  SymPoly derivative(int slot) const {
    SymPoly r;
    for (const auto& [m, c] : terms) {
      if (m.e[slot] == 0) continue;
      Monomial d = m;
      d.e[slot]--;
      r.add_term(d, c * m.e[slot]);
    }
    return r;
  }

  // substitute variable `slot` by `repl` (slot may reappear inside repl)
  SymPoly substitute(int slot, const SymPoly& repl) const {
    // cache powers of repl
    int maxp = 0;
    for (const auto& [m, c] : terms) maxp = std::max(maxp, int(m.e[slot]));
    std::vector<SymPoly> powers(maxp + 1);
    powers[0] = constant(1);
    for (int k = 1; k <= maxp; ++k) powers[k] = powers[k - 1] * repl;
    SymPoly r;
    for (const auto& [m, c] : terms) {
      Monomial rest = m;
      int p = rest.e[slot];
      rest.e[slot] = 0;
      for (const auto& [pm, pc] : powers[p].terms) r.add_term(rest * pm, c * pc);
    }
    return r;
  }

  // set variable `slot` to an exact rational value
  SymPoly substitute_value(int slot, const Rational& v) const {
    SymPoly r;
    for (const auto& [m, c] : terms) {
      Monomial rest = m;
      int p = rest.e[slot];
      rest.e[slot] = 0;
      Rational f = c;
      for (int k = 0; k < p; ++k) f *= v;
      r.add_term(rest, f);
    }
    return r;
  }

  // replace even powers: x^(2q+s) -> sq^q * x^s  (used for quadric relations
  // like e^2 = a^2 + b^2 - 2abt, keeping odd powers of e symbolic)
  SymPoly reduce_square(int slot, const SymPoly& sq) const {
    SymPoly r;
    for (const auto& [m, c] : terms) {
      int q = m.e[slot] / 2, s = m.e[slot] % 2;
      Monomial rest = m;
      rest.e[slot] = static_cast<uint8_t>(s);
      SymPoly piece = monomial_term(rest, c);
      for (int k = 0; k < q; ++k) piece = piece * sq;
      r += piece;
    }
    return r;
  }

  Rational eval(const std::vector<Rational>& xs) const {
    Rational acc = 0;
    for (const auto& [m, c] : terms) {
      Rational t = c;
      for (int i = 0; i < kMaxVars; ++i)
        for (int k = 0; k < m.e[i]; ++k) {
          if (size_t(i) >= xs.size()) throw std::out_of_range("eval: missing value");
          t *= xs[i];
        }
      acc += t;
    }
    return acc;
  }

  double eval_double(const std::vector<double>& xs) const {
    double acc = 0;
    for (const auto& [m, c] : terms) {
      double t = static_cast<double>(c);
      for (int i = 0; i < kMaxVars; ++i)
        for (int k = 0; k < m.e[i]; ++k) t *= xs[size_t(i)];
      acc += t;
    }
    return acc;
  }

  bool all_coeffs_nonneg() const {
    for (const auto& [m, c] : terms)
      if (c < 0) return false;
    return true;
  }

  // first negative-coefficient term, if any
  const std::pair<const Monomial, Rational>* first_negative() const {
    for (const auto& t : terms)
      if (t.second < 0) return &t;
    return nullptr;
  }

  // componentwise-min exponent over all terms (the trivial monomial factor)
  Monomial monomial_gcd() const {
    if (terms.empty()) return Monomial{};
    Monomial g = terms.begin()->first;
    for (const auto& [m, c] : terms)
      for (int i = 0; i < kMaxVars; ++i) g.e[i] = std::min(g.e[i], m.e[i]);
    return g;
  }

  SymPoly divide_monomial(const Monomial& g) const {
    SymPoly r;
    for (const auto& [m, c] : terms) r.terms.emplace(m / g, c);
    return r;
  }

  // exact division by a polynomial known to divide *this (lex leading-term
  // elimination); throws if it does not
  SymPoly divide_exact(const SymPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    SymPoly rem = *this, quot;
    const auto& [dlm, dlc] = *d.terms.rbegin();  // lex-leading term
    while (!rem.is_zero()) {
      const auto& [rlm, rlc] = *rem.terms.rbegin();
      if (!dlm.divides(rlm)) throw std::domain_error("inexact polynomial division");
      Monomial q = rlm / dlm;
      Rational qc = rlc / dlc;
      quot.add_term(q, qc);
      rem -= monomial_term(q, qc) * d;
    }
    return quot;
  }

  // restrict attention to variables in `slots`: map from the sub-monomial on
  // those slots to the polynomial in the remaining variables
  std::map<Monomial, SymPoly> split_by(const std::vector<int>& slots) const {
    std::array<bool, kMaxVars> pick{};
    for (int s : slots) pick[size_t(s)] = true;
    std::map<Monomial, SymPoly> out;
    for (const auto& [m, c] : terms) {
      Monomial key, rest;
      for (int i = 0; i < kMaxVars; ++i)
        (pick[size_t(i)] ? key : rest).e[i] = m.e[i];
      out[key].add_term(rest, c);
    }
    return out;
  }

  int max_exponent(int slot) const {
    int mx = 0;
    for (const auto& [m, c] : terms) mx = std::max(mx, int(m.e[slot]));
    return mx;
  }

  std::string str(const std::vector<std::string>& names) const {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms) {
      Rational a = c;
      if (first) {
        if (a < 0) { out += "-"; a = -a; }
      } else {
        out += (a < 0) ? " - " : " + ";
        if (a < 0) a = -a;
      }
      first = false;
      std::string mono;
      for (int i = 0; i < kMaxVars; ++i) {
        if (!m.e[i]) continue;
        if (!mono.empty()) mono += "*";
        mono += (size_t(i) < names.size()) ? names[size_t(i)] : "v" + std::to_string(i);
        if (m.e[i] > 1) mono += "^" + std::to_string(int(m.e[i]));
      }
      if (mono.empty()) out += a.str();
      else if (a == 1) out += mono;
      else out += a.str() + "*" + mono;
    }
    return out;
  }
};

}  // namespace atiyah
