#ifndef HOMOG_ORACLE_HPP
#define HOMOG_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "homog/errors.hpp"
#include "homog/presentation.hpp"
#include "homog/word.hpp"

namespace homog {

/// Degree-by-degree congruence classes computed by undirected relation
/// rewriting, with the zero ideal folded into a distinguished class.
/// This is the independent ground truth the rewriting/automaton pipeline is
/// validated against; it deliberately shares no machinery with it.
struct DegreeCensus {
  unsigned max_degree = 0;
  // classes[n]: the non-zero congruence classes of weight-n words, each
  // sorted, classes ordered by their smallest member.
  std::vector<std::vector<std::vector<Word>>> classes;
  // zero_words[n]: weight-n words whose class collapsed to zero, sorted.
  std::vector<std::vector<Word>> zero_words;
};

inline std::vector<std::uint64_t> census_counts(const DegreeCensus& census) {
  std::vector<std::uint64_t> counts;
  counts.reserve(census.classes.size());
  for (const auto& degree_classes : census.classes) {
    counts.push_back(degree_classes.size());
  }
  return counts;
}

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Enumerates all words of weight <= max_degree and partitions each degree
/// into congruence classes (connected components under single-factor
/// replacement by a non-zero relation), then merges every class that touches
/// the zero ideal into the zero class. Aborts with BudgetExceeded before a
/// degree whose words would push the total past the budget.
inline DegreeCensus enumerate_census(const Presentation& p, unsigned max_degree,
                                     std::uint64_t budget = 2'000'000) {
  if (!p.weights_final()) {
    throw std::logic_error("enumerate_census: weights not finalized");
  }
  const AlphabetPtr& alpha = p.alphabet();
  const std::size_t nletters = alpha->size();

  // Word counts per degree, to enforce the budget up front.
  std::vector<std::uint64_t> word_count(max_degree + 1, 0);
  word_count[0] = 1;
  for (unsigned n = 1; n <= max_degree; ++n) {
    for (std::size_t l = 0; l < nletters; ++l) {
      unsigned w = alpha->letter_weight(static_cast<Letter>(l));
      if (w <= n) {
        std::uint64_t add = word_count[n - w];
        if (word_count[n] > budget - std::min<std::uint64_t>(add, budget)) {
          word_count[n] = budget + 1;  // saturate
        } else {
          word_count[n] += add;
        }
      }
    }
  }

  using Key = std::vector<Letter>;
  struct DegreeData {
    std::vector<Word> words;       // sorted lex
    std::map<Key, std::size_t> index;
    std::vector<bool> dead;        // in the zero class
  };
  std::vector<DegreeData> degrees(max_degree + 1);

  std::vector<Word> zero_rel_lhs;
  std::vector<std::pair<Word, Word>> edges_rel;  // non-zero relations
  for (const auto& r : p.relations()) {
    if (r.is_zero()) {
      zero_rel_lhs.push_back(r.lhs);
    } else if (r.lhs != *r.rhs) {
      edges_rel.emplace_back(r.lhs, *r.rhs);
    }
  }

  DegreeCensus census;
  census.max_degree = max_degree;
  census.classes.resize(max_degree + 1);
  census.zero_words.resize(max_degree + 1);

  std::uint64_t total = 0;
  for (unsigned n = 0; n <= max_degree; ++n) {
    if (total + word_count[n] > budget) {
      census.max_degree = n == 0 ? 0 : n - 1;
      census.classes.resize(n);
      census.zero_words.resize(n);
      throw BudgetExceeded("oracle word budget exceeded",
                           census.max_degree);
    }
    total += word_count[n];

    DegreeData& dd = degrees[n];
    if (n == 0) {
      dd.words.emplace_back(alpha);
    } else {
      for (std::size_t l = 0; l < nletters; ++l) {
        unsigned w = alpha->letter_weight(static_cast<Letter>(l));
        if (w > n) continue;
        for (const Word& base : degrees[n - w].words) {
          Key key = base.letters();
          key.push_back(static_cast<Letter>(l));
          dd.words.emplace_back(alpha, std::move(key));
        }
      }
      std::sort(dd.words.begin(), dd.words.end(), WordLexLess{});
    }
    for (std::size_t i = 0; i < dd.words.size(); ++i) {
      dd.index.emplace(dd.words[i].letters(), i);
    }

    // Taint: a word is marked if a proper factor already died at a lower
    // degree (such a factor sits inside the prefix or the suffix), or if it
    // is itself a zero-relation head.
    std::vector<bool> marked(dd.words.size(), false);
    auto factor_dead = [&](const Word& w) -> bool {
      if (w.empty()) return false;
      std::uint64_t dw = w.weight();
      auto it = degrees[dw].index.find(w.letters());
      return it != degrees[dw].index.end() && degrees[dw].dead[it->second];
    };
    for (std::size_t i = 0; i < dd.words.size(); ++i) {
      const Word& w = dd.words[i];
      if (!w.empty()) {
        if (factor_dead(w.prefix(w.length() - 1)) ||
            factor_dead(w.suffix(w.length() - 1))) {
          marked[i] = true;
          continue;
        }
      }
      for (const Word& z : zero_rel_lhs) {
        if (w.weight() == z.weight() && w == z) {
          marked[i] = true;
          break;
        }
      }
    }

    // Merge classes along single-factor replacements.
    detail::UnionFind uf(dd.words.size());
    for (std::size_t i = 0; i < dd.words.size(); ++i) {
      const Word& w = dd.words[i];
      for (const auto& [u, v] : edges_rel) {
        for (int dir = 0; dir < 2; ++dir) {
          const Word& from = dir == 0 ? u : v;
          const Word& to = dir == 0 ? v : u;
          std::size_t pos = w.find_factor(from);
          while (pos != Word::npos) {
            Key key;
            key.reserve(w.length() - from.length() + to.length());
            key.insert(key.end(), w.letters().begin(),
                       w.letters().begin() + pos);
            key.insert(key.end(), to.letters().begin(), to.letters().end());
            key.insert(key.end(), w.letters().begin() + pos + from.length(),
                       w.letters().end());
            auto it = dd.index.find(key);
            if (it == dd.index.end()) {
              throw std::logic_error("oracle: replacement left the degree");
            }
            uf.unite(i, it->second);
            pos = w.find_factor(from, pos + 1);
          }
        }
      }
    }

    // A class dies if any member is marked.
    std::map<std::size_t, bool> class_dead;
    for (std::size_t i = 0; i < dd.words.size(); ++i) {
      class_dead[uf.find(i)] = false;
    }
    for (std::size_t i = 0; i < dd.words.size(); ++i) {
      if (marked[i]) class_dead[uf.find(i)] = true;
    }
    dd.dead.assign(dd.words.size(), false);
    std::map<std::size_t, std::vector<Word>> live_classes;
    for (std::size_t i = 0; i < dd.words.size(); ++i) {
      std::size_t root = uf.find(i);
      if (class_dead[root]) {
        dd.dead[i] = true;
        census.zero_words[n].push_back(dd.words[i]);
      } else {
        live_classes[root].push_back(dd.words[i]);
      }
    }
    for (auto& [root, members] : live_classes) {
      census.classes[n].push_back(std::move(members));
    }
    // Members are generated sorted; classes keyed by smallest member.
    std::sort(census.classes[n].begin(), census.classes[n].end(),
              [](const std::vector<Word>& a, const std::vector<Word>& b) {
                return lex_less(a.front(), b.front());
              });
  }
  return census;
}

}  // namespace homog

#endif  // HOMOG_ORACLE_HPP
