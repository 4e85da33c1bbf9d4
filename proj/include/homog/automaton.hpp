#ifndef HOMOG_AUTOMATON_HPP
#define HOMOG_AUTOMATON_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homog/presentation.hpp"  // BigInt
#include "homog/word.hpp"

namespace homog {

/// Trim deterministic automaton of the words avoiding a finite set of
/// forbidden factors. The language is factor-closed, so every state accepts
/// and "trim" just means dead states are gone. State 0 is initial and ids
/// are breadth-first from it, which keeps output stable across runs.
class NormalWordAutomaton {
 public:
  static constexpr int kDead = -1;

  NormalWordAutomaton(AlphabetPtr alpha, std::vector<std::vector<int>> delta)
      : alpha_(std::move(alpha)), delta_(std::move(delta)) {}

  const AlphabetPtr& alphabet() const noexcept { return alpha_; }
  std::size_t num_states() const noexcept { return delta_.size(); }

  int delta(int state, Letter l) const { return delta_.at(state).at(l); }

  bool accepts(const Word& w) const {
    int s = 0;
    for (Letter l : w.letters()) {
      s = delta(s, l);
      if (s == kDead) return false;
    }
    return true;
  }

  /// All accepted words of weight <= max_weight, graded-lex sorted.
  std::vector<Word> enumerate_words(std::uint64_t max_weight) const {
    std::vector<Word> out;
    struct Item {
      int state;
      std::vector<Letter> letters;
      std::uint64_t weight;
    };
    std::deque<Item> queue;
    queue.push_back({0, {}, 0});
    while (!queue.empty()) {
      Item it = std::move(queue.front());
      queue.pop_front();
      out.emplace_back(alpha_, it.letters);
      for (std::size_t l = 0; l < alpha_->size(); ++l) {
        int t = delta(it.state, static_cast<Letter>(l));
        std::uint64_t w2 =
            it.weight + alpha_->letter_weight(static_cast<Letter>(l));
        if (t == kDead || w2 > max_weight) continue;
        Item next{t, it.letters, w2};
        next.letters.push_back(static_cast<Letter>(l));
        queue.push_back(std::move(next));
      }
    }
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
      return compare_graded_lex(a, b) < 0;
    });
    return out;
  }

  std::string to_dot() const {
    std::string s = "digraph normal_words {\n  rankdir=LR;\n";
    s += "  node [shape=circle];\n";
    s += "  0 [shape=doublecircle];\n";
    for (std::size_t q = 0; q < delta_.size(); ++q) {
      for (std::size_t l = 0; l < alpha_->size(); ++l) {
        int t = delta_[q][l];
        if (t == kDead) continue;
        s += "  " + std::to_string(q) + " -> " + std::to_string(t) +
             " [label=\"" + alpha_->name(static_cast<Letter>(l)) + ":" +
             std::to_string(alpha_->letter_weight(static_cast<Letter>(l))) +
             "\"];\n";
      }
    }
    s += "}\n";
    return s;
  }

 private:
  AlphabetPtr alpha_;
  std::vector<std::vector<int>> delta_;  // [state][letter] -> state or kDead
};

/// Aho-Corasick style construction: states are the factor-matching
/// automaton's live nodes, a transition is absent exactly when taking it
/// completes an occurrence of an obstruction.
inline NormalWordAutomaton build_automaton(const std::vector<Word>& obstructions,
                                           const AlphabetPtr& alpha) {
  const std::size_t nl = alpha->size();
  struct Node {
    std::vector<int> child;
    int fail = 0;
    bool terminal = false;
  };
  std::vector<Node> trie(1, Node{std::vector<int>(nl, -1), 0, false});
  for (const Word& obs : obstructions) {
    if (obs.empty()) {
      throw std::invalid_argument("build_automaton: empty obstruction");
    }
    int cur = 0;
    for (Letter l : obs.letters()) {
      if (trie[cur].child[l] < 0) {
        trie[cur].child[l] = static_cast<int>(trie.size());
        trie.emplace_back(Node{std::vector<int>(nl, -1), 0, false});
      }
      cur = trie[cur].child[l];
    }
    trie[cur].terminal = true;
  }

  // Breadth-first failure links and goto-completion.
  std::deque<int> bfs;
  std::vector<std::vector<int>> go(trie.size(), std::vector<int>(nl, 0));
  for (std::size_t l = 0; l < nl; ++l) {
    int c = trie[0].child[l];
    if (c >= 0) {
      trie[c].fail = 0;
      go[0][l] = c;
      bfs.push_back(c);
    } else {
      go[0][l] = 0;
    }
  }
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop_front();
    if (trie[trie[u].fail].terminal) trie[u].terminal = true;
    for (std::size_t l = 0; l < nl; ++l) {
      int c = trie[u].child[l];
      if (c >= 0) {
        trie[c].fail = go[trie[u].fail][l];
        go[u][l] = c;
        bfs.push_back(c);
      } else {
        go[u][l] = go[trie[u].fail][l];
      }
    }
  }

  // Keep live nodes reachable from the root, renumbered breadth-first.
  std::vector<int> id(trie.size(), -1);
  std::vector<int> order;
  if (!trie[0].terminal) {
    id[0] = 0;
    order.push_back(0);
    for (std::size_t head = 0; head < order.size(); ++head) {
      int u = order[head];
      for (std::size_t l = 0; l < nl; ++l) {
        int t = go[u][l];
        if (trie[t].terminal || id[t] >= 0) continue;
        id[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }
  } else {
    throw std::invalid_argument("build_automaton: empty obstruction");
  }

  std::vector<std::vector<int>> delta(order.size(), std::vector<int>(nl, -1));
  for (std::size_t q = 0; q < order.size(); ++q) {
    for (std::size_t l = 0; l < nl; ++l) {
      int t = go[order[q]][l];
      delta[q][l] = trie[t].terminal ? NormalWordAutomaton::kDead : id[t];
    }
  }
  return NormalWordAutomaton(alpha, std::move(delta));
}

enum class GrowthKind { Finite, Polynomial, Exponential };

struct GrowthClass {
  GrowthKind kind = GrowthKind::Finite;
  unsigned degree = 0;  // meaningful for Polynomial

  bool linear() const noexcept {
    return kind == GrowthKind::Finite ||
           (kind == GrowthKind::Polynomial && degree == 1);
  }
  std::string str() const {
    switch (kind) {
      case GrowthKind::Finite:
        return "finite";
      case GrowthKind::Polynomial:
        return "polynomial:" + std::to_string(degree);
      case GrowthKind::Exponential:
        return "exponential";
    }
    return "?";
  }
  friend bool operator==(const GrowthClass& a, const GrowthClass& b) {
    return a.kind == b.kind &&
           (a.kind != GrowthKind::Polynomial || a.degree == b.degree);
  }
};

/// Strongly connected component structure of the automaton, specialized to
/// the slender case: for each cyclic component we record whether it is one
/// simple cycle and, per state, the unique in-cycle step.
struct CycleInfo {
  std::vector<int> scc_of;
  std::vector<bool> state_on_cycle;
  bool all_cycles_simple = true;
  unsigned max_cycles_on_path = 0;
  // For states on a simple cycle: the unique (letter, target) staying inside.
  std::vector<std::optional<std::pair<Letter, int>>> cycle_step;
};

inline CycleInfo analyze_cycles(const NormalWordAutomaton& dfa) {
  const int n = static_cast<int>(dfa.num_states());
  const std::size_t nl = dfa.alphabet()->size();
  CycleInfo info;
  info.scc_of.assign(n, -1);
  info.state_on_cycle.assign(n, false);
  info.cycle_step.assign(n, std::nullopt);

  // Iterative Tarjan.
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int next_index = 0, next_scc = 0;
  struct Frame {
    int state;
    std::size_t letter;
  };
  for (int s0 = 0; s0 < n; ++s0) {
    if (index[s0] >= 0) continue;
    std::vector<Frame> frames{{s0, 0}};
    index[s0] = low[s0] = next_index++;
    stack.push_back(s0);
    on_stack[s0] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.letter < nl) {
        int t = dfa.delta(f.state, static_cast<Letter>(f.letter));
        ++f.letter;
        if (t == NormalWordAutomaton::kDead) continue;
        if (index[t] < 0) {
          index[t] = low[t] = next_index++;
          stack.push_back(t);
          on_stack[t] = true;
          frames.push_back({t, 0});
        } else if (on_stack[t]) {
          low[f.state] = std::min(low[f.state], index[t]);
        }
      } else {
        int v = f.state;
        frames.pop_back();
        if (!frames.empty()) {
          low[frames.back().state] = std::min(low[frames.back().state], low[v]);
        }
        if (low[v] == index[v]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            info.scc_of[w] = next_scc;
            if (w == v) break;
          }
          ++next_scc;
        }
      }
    }
  }

  // Classify each component: trivial, a single simple cycle, or bigger.
  std::vector<std::vector<int>> members(next_scc);
  for (int s = 0; s < n; ++s) members[info.scc_of[s]].push_back(s);
  std::vector<bool> cyclic(next_scc, false);
  for (int c = 0; c < next_scc; ++c) {
    std::size_t internal_edges = 0;
    bool branching = false;
    for (int s : members[c]) {
      std::size_t out_here = 0;
      for (std::size_t l = 0; l < nl; ++l) {
        int t = dfa.delta(s, static_cast<Letter>(l));
        if (t != NormalWordAutomaton::kDead && info.scc_of[t] == c) {
          ++out_here;
          ++internal_edges;
          info.cycle_step[s] = {static_cast<Letter>(l), t};
        }
      }
      if (out_here > 1) branching = true;
    }
    if (internal_edges == 0) {
      for (int s : members[c]) info.cycle_step[s] = std::nullopt;
      continue;
    }
    cyclic[c] = true;
    for (int s : members[c]) info.state_on_cycle[s] = true;
    // Strongly connected + out-degree one inside = one simple cycle.
    if (branching || internal_edges != members[c].size()) {
      info.all_cycles_simple = false;
    }
  }

  // Longest chain of cyclic components over any path from the initial state.
  std::vector<int> memo(next_scc, -1);
  std::vector<std::vector<int>> scc_succ(next_scc);
  for (int s = 0; s < n; ++s) {
    for (std::size_t l = 0; l < nl; ++l) {
      int t = dfa.delta(s, static_cast<Letter>(l));
      if (t != NormalWordAutomaton::kDead && info.scc_of[t] != info.scc_of[s]) {
        scc_succ[info.scc_of[s]].push_back(info.scc_of[t]);
      }
    }
  }
  auto chain = [&](auto&& self, int c) -> int {
    if (memo[c] >= 0) return memo[c];
    int best = 0;
    for (int d : scc_succ[c]) best = std::max(best, self(self, d));
    memo[c] = best + (cyclic[c] ? 1 : 0);
    return memo[c];
  };
  if (n > 0) {
    info.max_cycles_on_path = static_cast<unsigned>(chain(chain, info.scc_of[0]));
  }
  return info;
}

/// Growth of the accepted language by total weight: exponential iff two
/// distinct cycles meet, else polynomial of degree = the longest chain of
/// cycles along a path, finite when there is no cycle at all.
inline GrowthClass classify_growth(const NormalWordAutomaton& dfa) {
  CycleInfo info = analyze_cycles(dfa);
  if (!info.all_cycles_simple) return {GrowthKind::Exponential, 0};
  if (info.max_cycles_on_path == 0) return {GrowthKind::Finite, 0};
  return {GrowthKind::Polynomial, info.max_cycles_on_path};
}

/// c_n = number of accepted words of weight exactly n, 0 <= n <= max_degree.
inline std::vector<BigInt> count_words(const NormalWordAutomaton& dfa,
                                       unsigned max_degree) {
  const std::size_t n = dfa.num_states();
  const AlphabetPtr& alpha = dfa.alphabet();
  std::vector<std::vector<BigInt>> reach(max_degree + 1,
                                         std::vector<BigInt>(n, 0));
  reach[0][0] = 1;
  std::vector<BigInt> counts(max_degree + 1, 0);
  counts[0] = 1;
  for (unsigned deg = 1; deg <= max_degree; ++deg) {
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t l = 0; l < alpha->size(); ++l) {
        unsigned w = alpha->letter_weight(static_cast<Letter>(l));
        if (w > deg) continue;
        int t = dfa.delta(static_cast<int>(s), static_cast<Letter>(l));
        if (t == NormalWordAutomaton::kDead) continue;
        reach[deg][t] += reach[deg - w][s];
      }
    }
    for (std::size_t s = 0; s < n; ++s) counts[deg] += reach[deg][s];
  }
  return counts;
}

}  // namespace homog

#endif  // HOMOG_AUTOMATON_HPP
