#ifndef HOMOG_SANDWICH_HPP
#define HOMOG_SANDWICH_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "homog/word.hpp"

namespace homog {

/// The set { a w^n b : n >= 0 }. An empty w encodes the singleton {ab}.
/// In a free monoid a nonempty w makes the members' weights strictly
/// increase, so the sandwich is automatically free.
struct Sandwich {
  Word a, w, b;

  bool singleton() const noexcept { return w.empty(); }

  Word member(std::uint64_t n) const { return a + w.pow(n) + b; }

  std::uint64_t base_weight() const { return a.weight() + b.weight(); }
  std::uint64_t step_weight() const { return w.weight(); }

  std::string str() const {
    return a.str() + "<" + w.str() + ">" + b.str();
  }

  friend bool operator==(const Sandwich& s, const Sandwich& t) {
    return s.a == t.a && s.w == t.w && s.b == t.b;
  }
};

/// Number of members of weight <= bound. Exact for free sandwiches, and
/// never above (bound - base)/step + 1.
inline std::uint64_t count_up_to(const Sandwich& s, std::uint64_t bound) {
  if (s.singleton()) return s.base_weight() <= bound ? 1 : 0;
  if (s.base_weight() > bound) return 0;
  return (bound - s.base_weight()) / s.step_weight() + 1;
}

/// All members of weight <= bound, in index order.
inline std::vector<Word> enumerate_up_to_weight(const Sandwich& s,
                                                std::uint64_t bound) {
  std::vector<Word> out;
  std::uint64_t n = count_up_to(s, bound);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(s.member(i));
  return out;
}

/// Internal normal form of an infinite sandwich: { a u^{t0 + k p} b },
/// with u primitive and the phase pushed out of a (and full u-copies out of
/// the front of b) into the exponent. Equal member sets of the shapes the
/// algebra produces land on equal families, which is what the merge pass
/// keys on.
struct SandwichFamily {
  Word a, u, b;
  std::uint64_t t0 = 0;
  std::uint64_t p = 1;

  friend bool operator==(const SandwichFamily& f, const SandwichFamily& g) {
    return f.a == g.a && f.u == g.u && f.b == g.b && f.t0 == g.t0 && f.p == g.p;
  }
};

inline SandwichFamily to_family(const Sandwich& s) {
  if (s.singleton()) throw std::invalid_argument("to_family: singleton");
  auto [root, exponent] = primitive_root(s.w);
  SandwichFamily f{s.a, root, s.b, 0, exponent};
  bool progress = true;
  while (progress) {
    progress = false;
    // Fold whole u-copies from the tail of a into the exponent.
    while (f.a.length() >= f.u.length() &&
           f.a.suffix(f.u.length()) == f.u) {
      f.a = f.a.prefix(f.a.length() - f.u.length());
      f.t0 += 1;
      progress = true;
    }
    // Rotate the cycle to shorten a further: a = a0 s, u = v s gives
    // a u^t b = a0 (s v)^t (s b).
    std::size_t best = 0;
    for (std::size_t len = std::min(f.a.length(), f.u.length() - 1); len >= 1;
         --len) {
      if (f.a.suffix(len) == f.u.suffix(len)) {
        best = len;
        break;
      }
      if (len == 1) break;
    }
    if (f.u.length() >= 2 && best > 0) {
      Word s_part = f.u.suffix(best);
      Word v_part = f.u.prefix(f.u.length() - best);
      f.a = f.a.prefix(f.a.length() - best);
      f.u = s_part + v_part;
      f.b = s_part + f.b;
      progress = true;
    }
  }
  // Fold whole u-copies from the front of b.
  while (f.b.length() >= f.u.length() && f.b.prefix(f.u.length()) == f.u) {
    f.b = f.b.suffix(f.b.length() - f.u.length());
    f.t0 += 1;
  }
  return f;
}

/// The canonical reported triple: (a u^{t0}) <u^p> b.
inline Sandwich from_family(const SandwichFamily& f) {
  return Sandwich{f.a + f.u.pow(f.t0), f.u.pow(f.p), f.b};
}

inline Sandwich canonical_sandwich(const Sandwich& s) {
  if (s.singleton()) return s;
  return from_family(to_family(s));
}

struct IndexPair {
  std::int64_t n, m;

  friend bool operator==(const IndexPair& x, const IndexPair& y) {
    return x.n == y.n && x.m == y.m;
  }
};

/// The index pairs (n0 + k p, m0 + k q) for all k >= 0.
struct IndexAP {
  std::int64_t n0, m0, p, q;
};

/// Solutions of a w^n b = a' w'^m b'. Either a finite list, or finitely many
/// sporadic low solutions followed by a full arithmetic family.
struct IntersectionResult {
  std::vector<IndexPair> sporadic;
  std::optional<IndexAP> family;

  bool empty() const noexcept { return sporadic.empty() && !family; }
};

/// Index subset of one sandwich: sporadic indices plus an optional full
/// arithmetic tail {start + k*step}.
struct IndexSubset {
  std::vector<std::int64_t> sporadic;
  std::optional<std::pair<std::int64_t, std::int64_t>> tail;  // start, step

  bool empty() const noexcept { return sporadic.empty() && !tail; }
  bool contains(std::int64_t n) const {
    if (std::find(sporadic.begin(), sporadic.end(), n) != sporadic.end()) {
      return true;
    }
    return tail && n >= tail->first && (n - tail->first) % tail->second == 0;
  }
};

inline IndexSubset restrict_to_first(const IntersectionResult& r) {
  IndexSubset s;
  for (const auto& pr : r.sporadic) s.sporadic.push_back(pr.n);
  if (r.family) s.tail = {{r.family->n0, r.family->p}};
  return s;
}

inline IndexSubset restrict_to_second(const IntersectionResult& r) {
  IndexSubset s;
  for (const auto& pr : r.sporadic) s.sporadic.push_back(pr.m);
  if (r.family) s.tail = {{r.family->m0, r.family->q}};
  return s;
}

namespace detail {

/// Membership test of a fixed word in a sandwich; the index when present.
inline std::optional<std::int64_t> sandwich_index_of(const Sandwich& s,
                                                     const Word& target) {
  if (s.singleton()) {
    return s.member(0) == target ? std::optional<std::int64_t>(0)
                                 : std::nullopt;
  }
  std::uint64_t tw = target.weight();
  if (tw < s.base_weight()) return std::nullopt;
  std::uint64_t diff = tw - s.base_weight();
  if (diff % s.step_weight() != 0) return std::nullopt;
  std::uint64_t n = diff / s.step_weight();
  if (s.member(n) != target) return std::nullopt;
  return static_cast<std::int64_t>(n);
}

}  // namespace detail

/// Intersection by bounded scan plus pumping: the weight equation restricts
/// candidate index pairs to one lattice line; candidates are checked by
/// direct word comparison up to a scan bound wide enough that an infinite
/// intersection must show two solutions, at which point the aligned periodic
/// middle pumps and the tail is a full arithmetic family. The family is
/// spot-verified past the scan window before being returned.
inline IntersectionResult intersect(const Sandwich& s1, const Sandwich& s2) {
  Word::check_same_alphabet(s1.a, s2.a);
  IntersectionResult result;

  if (s1.singleton() && s2.singleton()) {
    if (s1.member(0) == s2.member(0)) result.sporadic.push_back({0, 0});
    return result;
  }
  if (s1.singleton()) {
    if (auto m = detail::sandwich_index_of(s2, s1.member(0))) {
      result.sporadic.push_back({0, *m});
    }
    return result;
  }
  if (s2.singleton()) {
    if (auto n = detail::sandwich_index_of(s1, s2.member(0))) {
      result.sporadic.push_back({*n, 0});
    }
    return result;
  }

  const std::int64_t w1 = static_cast<std::int64_t>(s1.step_weight());
  const std::int64_t w2 = static_cast<std::int64_t>(s2.step_weight());
  const std::int64_t delta = static_cast<std::int64_t>(s2.base_weight()) -
                             static_cast<std::int64_t>(s1.base_weight());
  const std::int64_t g = std::gcd(w1, w2);
  if (delta % g != 0) return result;
  const std::int64_t lcm = w1 / g * w2;
  const std::int64_t cand_step = w2 / g;

  // Smallest n >= 0 on the line with m >= 0.
  std::optional<std::int64_t> n_start;
  for (std::int64_t n = 0; n < cand_step; ++n) {
    if ((w1 * n - delta) % w2 == 0) {
      std::int64_t n0 = n;
      while (w1 * n0 - delta < 0) n0 += cand_step;
      n_start = n0;
      break;
    }
  }
  if (!n_start) return result;

  const std::int64_t scan =
      static_cast<std::int64_t>(
          (s1.base_weight() + s2.base_weight() +
           4 * static_cast<std::uint64_t>(lcm) + s1.step_weight() - 1) /
          s1.step_weight()) +
      2;

  std::vector<IndexPair> solutions;
  for (std::int64_t n = *n_start; n <= scan; n += cand_step) {
    std::int64_t m = (w1 * n - delta) / w2;
    if (s1.member(n) == s2.member(m)) {
      solutions.push_back({n, m});
    }
  }

  if (solutions.size() < 2) {
    result.sporadic = std::move(solutions);
    return result;
  }

  // Read the eventual period off the last two solutions and extend it
  // backwards; anything in front stays sporadic.
  std::size_t last = solutions.size() - 1;
  std::int64_t p = solutions[last].n - solutions[last - 1].n;
  std::int64_t q = solutions[last].m - solutions[last - 1].m;
  std::size_t start = last;
  while (start > 0 && solutions[start - 1].n == solutions[start].n - p &&
         solutions[start - 1].m == solutions[start].m - q) {
    --start;
  }
  result.family = IndexAP{solutions[start].n, solutions[start].m, p, q};
  result.sporadic.assign(solutions.begin(), solutions.begin() + start);

  // Certify past the window: pumping must keep the words equal.
  for (std::int64_t k = 1; k <= 3; ++k) {
    std::int64_t n = solutions[last].n + k * p;
    std::int64_t m = solutions[last].m + k * q;
    if (s1.member(n) != s2.member(m)) {
      throw std::logic_error("intersect: arithmetic family failed to pump");
    }
  }
  return result;
}

/// Removes an index subset from a sandwich. Remaining indices split into
/// finitely many singletons and full residue classes a w^t <w^p> b.
inline std::vector<Sandwich> subtract(const Sandwich& s,
                                      const IndexSubset& removed) {
  std::vector<Sandwich> pieces;
  const AlphabetPtr& alpha = s.a.alphabet();
  if (s.singleton()) {
    if (!removed.contains(0)) pieces.push_back(s);
    return pieces;
  }
  if (removed.empty()) {
    pieces.push_back(s);
    return pieces;
  }
  std::int64_t horizon = 0;
  for (std::int64_t n : removed.sporadic) horizon = std::max(horizon, n + 1);
  if (removed.tail) horizon = std::max(horizon, removed.tail->first);
  for (std::int64_t n = 0; n < horizon; ++n) {
    if (!removed.contains(n)) {
      pieces.push_back(
          Sandwich{s.member(static_cast<std::uint64_t>(n)), Word(alpha),
                   Word(alpha)});
    }
  }
  if (!removed.tail) {
    pieces.push_back(Sandwich{
        s.a + s.w.pow(static_cast<std::uint64_t>(horizon)), s.w, s.b});
    return pieces;
  }
  const std::int64_t step = removed.tail->second;
  for (std::int64_t r = 0; r < step; ++r) {
    std::int64_t t = horizon + r;
    if (removed.contains(t)) continue;
    pieces.push_back(Sandwich{s.a + s.w.pow(static_cast<std::uint64_t>(t)),
                              s.w.pow(static_cast<std::uint64_t>(step)), s.b});
  }
  return pieces;
}

}  // namespace homog

#endif  // HOMOG_SANDWICH_HPP
