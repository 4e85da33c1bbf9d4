#ifndef HOMOG_SERIES_HPP
#define HOMOG_SERIES_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "homog/automaton.hpp"
#include "homog/presentation.hpp"  // BigInt

namespace homog {

/// Dense univariate polynomial with integer coefficients, ascending powers,
/// no trailing zeros.
struct Poly {
  std::vector<BigInt> c;

  Poly() = default;
  explicit Poly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { trim(); }
  static Poly constant(long v) { return Poly({BigInt(v)}); }
  static Poly monomial(BigInt coeff, std::size_t power) {
    std::vector<BigInt> v(power + 1, BigInt(0));
    v[power] = std::move(coeff);
    return Poly(std::move(v));
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool zero() const noexcept { return c.empty(); }
  std::size_t degree() const { return c.empty() ? 0 : c.size() - 1; }
  BigInt at(std::size_t i) const { return i < c.size() ? c[i] : BigInt(0); }
  BigInt eval0() const { return at(0); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<BigInt> v(std::max(a.c.size(), b.c.size()), BigInt(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.at(i) + b.at(i);
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<BigInt> v(std::max(a.c.size(), b.c.size()), BigInt(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.at(i) - b.at(i);
    return Poly(std::move(v));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.zero() || b.zero()) return Poly();
    std::vector<BigInt> v(a.c.size() + b.c.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      for (std::size_t j = 0; j < b.c.size(); ++j) v[i + j] += a.c[i] * b.c[j];
    }
    return Poly(std::move(v));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

  BigInt content() const {
    BigInt g = 0;
    for (const auto& x : c) g = boost::multiprecision::gcd(g, x);
    return g;
  }
  Poly primitive() const {
    BigInt g = content();
    if (g == 0 || g == 1) return *this;
    Poly r = *this;
    for (auto& x : r.c) x /= g;
    return r;
  }

  /// Exact division; throws if the division leaves a remainder.
  friend Poly divide_exact(const Poly& a, const Poly& b) {
    if (b.zero()) throw std::invalid_argument("poly division by zero");
    if (a.zero()) return Poly();
    std::vector<Rat> rem(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) rem[i] = Rat(a.c[i]);
    std::vector<Rat> q(a.c.size(), Rat(0));
    Rat lead(b.c.back());
    for (std::size_t i = a.c.size(); i-- >= b.c.size() && i + 1 >= b.c.size();) {
      std::size_t shift = i + 1 - b.c.size();
      Rat f = rem[i] / lead;
      q[shift] = f;
      for (std::size_t j = 0; j < b.c.size(); ++j) {
        rem[shift + j] -= f * Rat(b.c[j]);
      }
      if (shift == 0) break;
    }
    for (const auto& r : rem) {
      if (r != Rat(0)) throw std::logic_error("poly division not exact");
    }
    std::vector<BigInt> out;
    out.reserve(q.size());
    for (const auto& x : q) {
      if (x.denominator() != 1) {
        throw std::logic_error("poly division not integral");
      }
      out.push_back(x.numerator());
    }
    return Poly(std::move(out));
  }
};

/// Primitive polynomial gcd via pseudo-remainders.
inline Poly poly_gcd(Poly a, Poly b) {
  a = a.primitive();
  b = b.primitive();
  while (!b.zero()) {
    // pseudo-remainder of a by b
    Poly r = a;
    BigInt lead = b.c.back();
    while (!r.zero() && r.c.size() >= b.c.size()) {
      std::size_t shift = r.c.size() - b.c.size();
      BigInt f = r.c.back();
      for (auto& x : r.c) x *= lead;
      Poly sub = Poly::monomial(f, shift) * b;
      r = r - sub;
      r = r.primitive();
    }
    a = b;
    b = r.primitive();
  }
  return a.primitive();
}

/// num/den with integer coefficients, reduced, den(0) > 0. For the series
/// of an automaton the reduced denominator has constant term exactly 1
/// (integer power series with rational sum).
struct GeneratingSeries {
  Poly numerator;
  Poly denominator;

  void reduce() {
    if (numerator.zero()) {
      denominator = Poly::constant(1);
      return;
    }
    Poly g = poly_gcd(numerator, denominator);
    if (!g.zero() && g.degree() > 0) {
      numerator = divide_exact(numerator, g);
      denominator = divide_exact(denominator, g);
    }
    BigInt cg = boost::multiprecision::gcd(numerator.content(),
                                           denominator.content());
    if (cg > 1) {
      for (auto& x : numerator.c) x /= cg;
      for (auto& x : denominator.c) x /= cg;
    }
    if (denominator.eval0() < 0) {
      for (auto& x : numerator.c) x = -x;
      for (auto& x : denominator.c) x = -x;
    }
  }

  /// Power-series coefficients c_0..c_n of numerator/denominator.
  std::vector<BigInt> expand(unsigned n) const {
    BigInt d0 = denominator.eval0();
    if (d0 != 1 && d0 != -1) {
      throw std::logic_error("series expansion needs unit constant term");
    }
    std::vector<BigInt> out(n + 1, 0);
    for (unsigned i = 0; i <= n; ++i) {
      BigInt acc = numerator.at(i);
      for (unsigned j = 1; j <= i; ++j) {
        acc -= denominator.at(j) * out[i - j];
      }
      out[i] = d0 == 1 ? acc : -acc;
    }
    return out;
  }

  friend bool operator==(const GeneratingSeries& a, const GeneratingSeries& b) {
    return a.numerator == b.numerator && a.denominator == b.denominator;
  }
};

inline std::string poly_to_string(const Poly& p) {
  if (p.zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    if (p.c[i] == 0) continue;
    BigInt a = p.c[i];
    if (s.empty()) {
      if (a < 0) s += "-";
    } else {
      s += a < 0 ? " - " : " + ";
    }
    BigInt mag = boost::multiprecision::abs(a);
    if (i == 0) {
      s += mag.str();
    } else {
      if (mag != 1) s += mag.str() + "*";
      s += i == 1 ? "t" : "t^" + std::to_string(i);
    }
  }
  return s;
}

inline std::string series_to_string(const GeneratingSeries& g) {
  return "(" + poly_to_string(g.numerator) + ") / (" +
         poly_to_string(g.denominator) + ")";
}

namespace detail {

struct RatFun {
  Poly num, den;

  static RatFun from(Poly p) { return {std::move(p), Poly::constant(1)}; }
  bool zero() const { return num.zero(); }
  void normalize() {
    if (num.zero()) {
      den = Poly::constant(1);
      return;
    }
    Poly g = poly_gcd(num, den);
    if (!g.zero() && g.degree() > 0) {
      num = divide_exact(num, g);
      den = divide_exact(den, g);
    }
    BigInt cg = boost::multiprecision::gcd(num.content(), den.content());
    if (cg > 1) {
      for (auto& x : num.c) x /= cg;
      for (auto& x : den.c) x /= cg;
    }
  }
  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    RatFun r{a.num * b.den + b.num * a.den, a.den * b.den};
    r.normalize();
    return r;
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) {
    RatFun r{a.num * b.den - b.num * a.den, a.den * b.den};
    r.normalize();
    return r;
  }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    RatFun r{a.num * b.num, a.den * b.den};
    r.normalize();
    return r;
  }
  friend RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.zero()) throw std::invalid_argument("rational function div by 0");
    RatFun r{a.num * b.den, a.den * b.num};
    r.normalize();
    return r;
  }
};

}  // namespace detail

/// Solves the transfer system g_s = 1 + sum over edges s->t of t^w * g_t by
/// Gaussian elimination over exact rational functions; the initial state's
/// component is the weight generating series of the accepted language.
inline GeneratingSeries generating_series(const NormalWordAutomaton& dfa) {
  using detail::RatFun;
  const std::size_t n = dfa.num_states();
  const AlphabetPtr& alpha = dfa.alphabet();
  // A[s] row over unknowns g_0..g_{n-1} plus the constant column.
  std::vector<std::vector<RatFun>> mat(
      n, std::vector<RatFun>(n + 1, RatFun::from(Poly())));
  for (std::size_t s = 0; s < n; ++s) {
    mat[s][s] = mat[s][s] + RatFun::from(Poly::constant(1));
    mat[s][n] = RatFun::from(Poly::constant(1));
    for (std::size_t l = 0; l < alpha->size(); ++l) {
      int t = dfa.delta(static_cast<int>(s), static_cast<Letter>(l));
      if (t == NormalWordAutomaton::kDead) continue;
      unsigned w = alpha->letter_weight(static_cast<Letter>(l));
      mat[s][t] = mat[s][t] - RatFun::from(Poly::monomial(BigInt(1), w));
    }
  }
  // Forward elimination with first-nonzero pivoting.
  std::vector<std::size_t> pivot_row(n);
  std::vector<bool> used(n, false);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = n;
    for (std::size_t r = 0; r < n; ++r) {
      if (!used[r] && !mat[r][col].zero()) {
        sel = r;
        break;
      }
    }
    if (sel == n) throw std::logic_error("generating_series: singular system");
    used[sel] = true;
    pivot_row[col] = sel;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == sel || mat[r][col].zero()) continue;
      RatFun f = mat[r][col] / mat[sel][col];
      for (std::size_t c2 = col; c2 <= n; ++c2) {
        mat[r][c2] = mat[r][c2] - f * mat[sel][c2];
      }
    }
  }
  RatFun g0 = mat[pivot_row[0]][n] / mat[pivot_row[0]][0];
  g0.normalize();
  GeneratingSeries out{g0.num, g0.den};
  out.reduce();
  return out;
}

}  // namespace homog

#endif  // HOMOG_SERIES_HPP
