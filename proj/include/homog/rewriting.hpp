#ifndef HOMOG_REWRITING_HPP
#define HOMOG_REWRITING_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "homog/presentation.hpp"
#include "homog/word.hpp"

namespace homog {

/// An oriented rule lhs -> rhs, or lhs -> 0 when rhs is absent.
/// Invariant: rhs < lhs in graded-lex order, and in a finished system no
/// rule's lhs contains another rule's lhs as a factor.
struct Rule {
  Word lhs;
  std::optional<Word> rhs;

  bool is_zero() const noexcept { return !rhs.has_value(); }
};

/// A weight-graded string rewriting system. status() distinguishes a fully
/// confluent system from one whose completion was cut off: a truncated
/// system still answers correctly for words of weight <= truncation_degree(),
/// because a critical pair of overlap weight n only ever spawns rules of
/// weight n.
class RewritingSystem {
 public:
  enum class Status { Complete, Truncated };

  RewritingSystem(AlphabetPtr alpha, std::vector<Rule> rules, Status status,
                  unsigned truncation_degree)
      : alpha_(std::move(alpha)),
        rules_(std::move(rules)),
        status_(status),
        truncation_degree_(truncation_degree) {}

  const AlphabetPtr& alphabet() const noexcept { return alpha_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  Status status() const noexcept { return status_; }
  bool complete() const noexcept { return status_ == Status::Complete; }
  unsigned truncation_degree() const noexcept { return truncation_degree_; }

  struct NormalForm {
    std::optional<Word> value;  // absent: the word is zero
    bool certified = true;

    bool is_zero() const noexcept { return !value.has_value(); }
  };

  /// Leftmost-innermost exhaustive rewriting: letters are shifted onto an
  /// output buffer one at a time and every completed rule head is replaced
  /// as soon as it appears as a suffix.
  NormalForm normal_form(const Word& w) const {
    Word::check_same_alphabet(w, Word(alpha_));
    bool certified = complete() || w.weight() <= truncation_degree_;
    std::vector<Letter> out;
    std::vector<Letter> stack(w.letters().rbegin(), w.letters().rend());
    while (!stack.empty()) {
      out.push_back(stack.back());
      stack.pop_back();
      // A replaced right-hand side re-enters letter by letter, so every
      // rule head is caught the moment it completes.
      for (const Rule& r : rules_) {
        std::size_t len = r.lhs.length();
        if (len > out.size()) continue;
        if (!std::equal(r.lhs.letters().begin(), r.lhs.letters().end(),
                        out.end() - len)) {
          continue;
        }
        if (r.is_zero()) return {std::nullopt, certified};
        out.resize(out.size() - len);
        stack.insert(stack.end(), r.rhs->letters().rbegin(),
                     r.rhs->letters().rend());
        break;
      }
    }
    return {Word(alpha_, std::move(out)), certified};
  }

  /// The rule heads; a word is normal iff it avoids all of them as factors.
  /// Only meaningful for complete systems.
  std::vector<Word> obstruction_set() const {
    if (!complete()) {
      throw std::logic_error(
          "obstruction_set: rewriting system is truncated, not complete");
    }
    std::vector<Word> obs;
    obs.reserve(rules_.size());
    for (const Rule& r : rules_) obs.push_back(r.lhs);
    return obs;
  }

 private:
  AlphabetPtr alpha_;
  std::vector<Rule> rules_;
  Status status_;
  unsigned truncation_degree_;
};

namespace detail {

struct Equation {
  std::optional<Word> a, b;
  std::uint64_t weight;
};

struct EquationLess {
  static int side_cmp(const std::optional<Word>& x,
                      const std::optional<Word>& y) {
    if (!x && !y) return 0;
    if (!x) return -1;  // zero sorts first
    if (!y) return 1;
    auto c = compare_graded_lex(*x, *y);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  bool operator()(const Equation& p, const Equation& q) const {
    if (p.weight != q.weight) return p.weight < q.weight;
    if (int c = side_cmp(p.a, q.a); c != 0) return c < 0;
    return side_cmp(p.b, q.b) < 0;
  }
};

inline std::optional<Word> concat_or_zero(const std::optional<Word>& x,
                                          const Word& tail) {
  if (!x) return std::nullopt;
  return *x + tail;
}
inline std::optional<Word> concat_or_zero(const Word& head,
                                          const std::optional<Word>& x) {
  if (!x) return std::nullopt;
  return head + *x;
}

/// All critical-pair equations from proper overlaps (a suffix of l1 equal to
/// a prefix of l2). Containments cannot occur between interreduced heads.
inline void push_overlap_equations(const Rule& r1, const Rule& r2,
                                   std::multiset<Equation, EquationLess>& queue) {
  const Word& l1 = r1.lhs;
  const Word& l2 = r2.lhs;
  std::size_t maxs = std::min(l1.length(), l2.length());
  for (std::size_t s = 1; s < maxs; ++s) {
    if (!std::equal(l2.letters().begin(), l2.letters().begin() + s,
                    l1.letters().end() - s)) {
      continue;
    }
    Word tail = l2.suffix(l2.length() - s);
    Word head = l1.prefix(l1.length() - s);
    std::optional<Word> red1 =
        r1.is_zero() ? std::nullopt : std::optional<Word>(*r1.rhs + tail);
    std::optional<Word> red2 =
        r2.is_zero() ? std::nullopt : std::optional<Word>(head + *r2.rhs);
    std::uint64_t w = l1.weight() + tail.weight();
    queue.insert({std::move(red1), std::move(red2), w});
  }
}

}  // namespace detail

/// Knuth-Bendix completion graded by weight. Relations are oriented by
/// graded-lex, critical pairs are processed in ascending overlap weight, and
/// the first pair that would demand a rule of weight above max_degree stops
/// the run with Status::Truncated. An emptied queue certifies confluence.
inline RewritingSystem complete(const Presentation& p, unsigned max_degree) {
  using detail::Equation;
  if (!p.weights_final()) {
    throw std::logic_error("complete: weights not finalized");
  }
  const AlphabetPtr& alpha = p.alphabet();
  std::vector<Rule> rules;
  std::multiset<Equation, detail::EquationLess> queue;

  for (const auto& r : p.relations()) {
    std::optional<Word> rhs = r.rhs;
    queue.insert({r.lhs, std::move(rhs), r.lhs.weight()});
  }

  auto nf = [&](const std::optional<Word>& w) -> std::optional<Word> {
    if (!w) return std::nullopt;
    RewritingSystem tmp(alpha, rules, RewritingSystem::Status::Complete, 0);
    return tmp.normal_form(*w).value;
  };

  bool truncated = false;
  std::size_t guard = 0;
  while (!queue.empty()) {
    if (++guard > 200000) {
      throw std::runtime_error("completion failed to settle (internal guard)");
    }
    Equation eq = *queue.begin();
    queue.erase(queue.begin());
    std::optional<Word> a = nf(eq.a);
    std::optional<Word> b = nf(eq.b);
    if (!a && !b) continue;
    if (a && b && *a == *b) continue;
    // Orient: zero is the least element, otherwise graded-lex decides.
    Word lhs = Word(alpha);
    std::optional<Word> rhs;
    if (!a || !b) {
      lhs = a ? *a : *b;
      rhs = std::nullopt;
    } else if (compare_graded_lex(*a, *b) > 0) {
      lhs = *a;
      rhs = *b;
    } else {
      lhs = *b;
      rhs = *a;
    }
    if (lhs.weight() > max_degree) {
      truncated = true;
      break;
    }
    // Interreduce: rules whose head contains the new head go back to the
    // queue as equations; surviving right-hand sides are re-normalized
    // after the new rule lands.
    std::vector<Rule> kept;
    for (auto& r : rules) {
      if (r.lhs.contains_factor(lhs)) {
        queue.insert({r.lhs, std::move(r.rhs), r.lhs.weight()});
      } else {
        kept.push_back(std::move(r));
      }
    }
    rules = std::move(kept);
    rules.push_back({std::move(lhs), std::move(rhs)});
    const Rule& added = rules.back();
    for (std::size_t i = 0; i + 1 < rules.size(); ++i) {
      if (!rules[i].is_zero()) {
        rules[i].rhs = nf(rules[i].rhs);
      }
    }
    for (const Rule& r : rules) {
      detail::push_overlap_equations(added, r, queue);
      if (&r != &added) detail::push_overlap_equations(r, added, queue);
    }
  }

  std::sort(rules.begin(), rules.end(), [](const Rule& x, const Rule& y) {
    return compare_graded_lex(x.lhs, y.lhs) < 0;
  });
  return RewritingSystem(alpha, std::move(rules),
                         truncated ? RewritingSystem::Status::Truncated
                                   : RewritingSystem::Status::Complete,
                         max_degree);
}

/// Re-verifies every critical pair of a finished system from scratch.
inline bool verify_confluent(const RewritingSystem& rs) {
  std::multiset<detail::Equation, detail::EquationLess> queue;
  for (const Rule& r1 : rs.rules()) {
    for (const Rule& r2 : rs.rules()) {
      detail::push_overlap_equations(r1, r2, queue);
    }
  }
  for (const auto& eq : queue) {
    auto a = eq.a ? rs.normal_form(*eq.a) : RewritingSystem::NormalForm{};
    auto b = eq.b ? rs.normal_form(*eq.b) : RewritingSystem::NormalForm{};
    if (a.is_zero() != b.is_zero()) return false;
    if (!a.is_zero() && *a.value != *b.value) return false;
  }
  return true;
}

}  // namespace homog

#endif  // HOMOG_REWRITING_HPP
