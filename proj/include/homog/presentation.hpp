#ifndef HOMOG_PRESENTATION_HPP
#define HOMOG_PRESENTATION_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "homog/errors.hpp"
#include "homog/word.hpp"

namespace homog {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::rational<BigInt>;

/// One defining relation: lhs = rhs, or lhs = 0 when rhs is absent.
struct Relation {
  Word lhs;
  std::optional<Word> rhs;

  bool is_zero() const noexcept { return !rhs.has_value(); }
};

/// A parsed monoid presentation. Weights on the alphabet are only
/// meaningful once weights_final() holds (all declared in the input, or
/// re-applied after inference); until then undeclared letters carry a
/// placeholder weight of 1.
class Presentation {
 public:
  Presentation(AlphabetPtr alpha, std::vector<Relation> relations,
               bool has_zero, std::vector<bool> declared, bool weights_final)
      : alpha_(std::move(alpha)),
        relations_(std::move(relations)),
        has_zero_(has_zero),
        declared_(std::move(declared)),
        weights_final_(weights_final) {}

  const AlphabetPtr& alphabet() const noexcept { return alpha_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  bool has_zero() const noexcept { return has_zero_; }
  const std::vector<bool>& declared() const noexcept { return declared_; }
  bool weights_final() const noexcept { return weights_final_; }

  unsigned max_relation_weight() const {
    std::uint64_t m = 0;
    for (const auto& r : relations_) m = std::max<std::uint64_t>(m, r.lhs.weight());
    return static_cast<unsigned>(m);
  }

  /// Canonical one-line echo in the input format.
  std::string echo() const {
    std::string s = "gens:";
    for (std::size_t i = 0; i < alpha_->size(); ++i) {
      s += " " + alpha_->name(static_cast<Letter>(i));
      s += ":" + std::to_string(alpha_->letter_weight(static_cast<Letter>(i)));
    }
    s += "; rels:";
    for (std::size_t i = 0; i < relations_.size(); ++i) {
      s += i == 0 ? " " : ", ";
      s += relations_[i].lhs.str() + " = " +
           (relations_[i].is_zero() ? "0" : relations_[i].rhs->str());
    }
    return s;
  }

 private:
  AlphabetPtr alpha_;
  std::vector<Relation> relations_;
  bool has_zero_;
  std::vector<bool> declared_;
  bool weights_final_;
};

namespace detail {

inline bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
inline bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

inline bool valid_generator_name(const std::string& n) {
  if (n.empty() || !is_name_start(n[0])) return false;
  return std::all_of(n.begin(), n.end(), is_name_char);
}

struct Segment {
  std::string text;
  std::size_t line;
  std::size_t col;  // 1-based column of text[0] in the original line
};

inline std::vector<Segment> split_segments(const std::string& input) {
  std::vector<Segment> out;
  std::size_t line_no = 1;
  std::size_t start = 0;
  while (start <= input.size()) {
    std::size_t eol = input.find('\n', start);
    std::string line = input.substr(
        start, eol == std::string::npos ? std::string::npos : eol - start);
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    std::size_t seg_start = 0;
    while (seg_start <= line.size()) {
      std::size_t semi = line.find(';', seg_start);
      std::string seg = line.substr(
          seg_start, semi == std::string::npos ? std::string::npos
                                               : semi - seg_start);
      out.push_back({seg, line_no, seg_start + 1});
      if (semi == std::string::npos) break;
      seg_start = semi + 1;
    }
    if (eol == std::string::npos) break;
    start = eol + 1;
    ++line_no;
  }
  return out;
}

/// Parses one side of a relation into a word. Dot-separated segments are
/// resolved as exact generator names first, then letter by letter.
inline Word parse_word_text(const AlphabetPtr& alpha, const std::string& raw,
                            std::size_t line, std::size_t col) {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  }
  if (text.empty()) throw ParseError("missing word", line, col);
  if (text == "1") return Word(alpha);
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t dot = text.find('.', pos);
    std::string seg =
        text.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
    if (seg.empty()) throw ParseError("empty '.'-segment in word", line, col);
    if (auto l = alpha->index_of(seg)) {
      letters.push_back(*l);
    } else {
      for (char c : seg) {
        auto cl = alpha->index_of(std::string(1, c));
        if (!cl) {
          throw ParseError("undeclared generator \"" + std::string(1, c) +
                               "\" in \"" + text + "\"",
                           line, col);
        }
        letters.push_back(*cl);
      }
    }
    pos = dot == std::string::npos ? text.size() : dot + 1;
  }
  return Word(alpha, std::move(letters));
}

}  // namespace detail

/// Parses the line-oriented presentation format:
///   gens: x y:2 z
///   rels: xy = yx, xx = 0
/// '#' starts a comment, ';' acts as a line break.
inline Presentation parse_presentation(const std::string& input) {
  using detail::Segment;
  std::vector<std::string> names;
  std::vector<unsigned> weights;
  std::vector<bool> declared;
  struct RawRel {
    std::string text;
    std::size_t line, col;
  };
  std::vector<RawRel> raw_rels;
  bool saw_gens = false;
  bool saw_rels = false;

  for (const Segment& seg : detail::split_segments(input)) {
    std::size_t i = 0;
    while (i < seg.text.size() &&
           std::isspace(static_cast<unsigned char>(seg.text[i]))) {
      ++i;
    }
    if (i == seg.text.size()) continue;
    std::string rest = seg.text.substr(i);
    std::size_t col = seg.col + i;
    if (rest.rfind("gens:", 0) == 0) {
      saw_gens = true;
      std::string body = rest.substr(5);
      std::size_t p = 0;
      while (p < body.size()) {
        while (p < body.size() &&
               std::isspace(static_cast<unsigned char>(body[p]))) {
          ++p;
        }
        if (p >= body.size()) break;
        std::size_t q = p;
        while (q < body.size() &&
               !std::isspace(static_cast<unsigned char>(body[q]))) {
          ++q;
        }
        std::string tok = body.substr(p, q - p);
        std::size_t tok_col = col + 5 + p;
        std::string name = tok;
        unsigned w = 1;
        bool has_w = false;
        if (auto colon = tok.find(':'); colon != std::string::npos) {
          name = tok.substr(0, colon);
          std::string wtext = tok.substr(colon + 1);
          if (wtext.empty() ||
              !std::all_of(wtext.begin(), wtext.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c));
              })) {
            throw ParseError("bad weight \"" + wtext + "\"", seg.line, tok_col);
          }
          unsigned long v = std::stoul(wtext);
          if (v == 0 || v > 1'000'000) {
            throw ParseError("weight of \"" + name + "\" must be a positive integer",
                             seg.line, tok_col);
          }
          w = static_cast<unsigned>(v);
          has_w = true;
        }
        if (!detail::valid_generator_name(name)) {
          throw ParseError("invalid generator name \"" + name + "\"", seg.line,
                           tok_col);
        }
        if (std::find(names.begin(), names.end(), name) != names.end()) {
          throw ParseError("duplicate generator \"" + name + "\"", seg.line,
                           tok_col);
        }
        names.push_back(name);
        weights.push_back(w);
        declared.push_back(has_w);
        p = q;
      }
    } else if (rest.rfind("rels:", 0) == 0) {
      saw_rels = true;
      std::string body = rest.substr(5);
      std::size_t p = 0;
      while (p <= body.size()) {
        std::size_t comma = body.find(',', p);
        std::string item = body.substr(
            p, comma == std::string::npos ? std::string::npos : comma - p);
        bool blank = std::all_of(item.begin(), item.end(), [](char c) {
          return std::isspace(static_cast<unsigned char>(c));
        });
        if (!blank) {
          raw_rels.push_back({item, seg.line, col + 5 + p});
        } else if (comma != std::string::npos) {
          throw ParseError("empty relation", seg.line, col + 5 + p);
        }
        if (comma == std::string::npos) break;
        p = comma + 1;
      }
    } else {
      throw ParseError("expected 'gens:' or 'rels:'", seg.line, col);
    }
  }

  if (!saw_gens) throw ParseError("missing 'gens:' section", 1, 1);
  (void)saw_rels;
  if (names.empty()) throw ParseError("no generators declared", 1, 1);

  AlphabetPtr alpha = make_alphabet(names, weights);
  std::vector<Relation> relations;
  bool has_zero = false;
  for (const auto& rr : raw_rels) {
    std::size_t eq = rr.text.find('=');
    if (eq == std::string::npos) {
      throw ParseError("relation needs '='", rr.line, rr.col);
    }
    if (rr.text.find('=', eq + 1) != std::string::npos) {
      throw ParseError("relation has more than one '='", rr.line, rr.col);
    }
    std::string left = rr.text.substr(0, eq);
    std::string right = rr.text.substr(eq + 1);
    auto strip = [](std::string s) {
      std::string t;
      for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
      }
      return t;
    };
    std::string ls = strip(left), rs = strip(right);
    bool lzero = ls == "0", rzero = rs == "0";
    if (lzero && rzero) {
      throw ParseError("malformed relation 0 = 0", rr.line, rr.col);
    }
    if (lzero || rzero) {
      const std::string& wtext = lzero ? rs : ls;
      Word w = detail::parse_word_text(alpha, wtext, rr.line, rr.col);
      if (w.empty()) {
        throw ParseError("relation 1 = 0 would kill the unit", rr.line, rr.col);
      }
      relations.push_back({std::move(w), std::nullopt});
      has_zero = true;
    } else {
      Word u = detail::parse_word_text(alpha, ls, rr.line, rr.col);
      Word v = detail::parse_word_text(alpha, rs, rr.line, rr.col);
      if (u.empty() && v.empty()) continue;  // vacuous 1 = 1
      if (u.empty()) std::swap(u, v);        // keep lhs nonempty
      relations.push_back({std::move(u), std::optional<Word>(std::move(v))});
    }
  }

  bool all_declared =
      std::all_of(declared.begin(), declared.end(), [](bool b) { return b; });
  return Presentation(std::move(alpha), std::move(relations), has_zero,
                      std::move(declared), all_declared);
}

/// Rebuilds the presentation over an alphabet carrying the given weights.
inline Presentation apply_weights(const Presentation& p,
                                  const std::vector<unsigned>& weights) {
  if (weights.size() != p.alphabet()->size()) {
    throw std::invalid_argument("apply_weights: size mismatch");
  }
  AlphabetPtr alpha = make_alphabet(p.alphabet()->names(), weights);
  std::vector<Relation> rels;
  rels.reserve(p.relations().size());
  for (const auto& r : p.relations()) {
    Word lhs(alpha, r.lhs.letters());
    std::optional<Word> rhs;
    if (r.rhs) rhs = Word(alpha, r.rhs->letters());
    rels.push_back({std::move(lhs), std::move(rhs)});
  }
  return Presentation(std::move(alpha), std::move(rels), p.has_zero(),
                      std::vector<bool>(weights.size(), true), true);
}

/// Permutes the generator order: position i of the new alphabet holds the
/// old generator perm[i]. Relations are re-indexed accordingly.
inline Presentation reorder_generators(const Presentation& p,
                                       const std::vector<std::size_t>& perm) {
  std::size_t n = p.alphabet()->size();
  if (perm.size() != n) throw std::invalid_argument("reorder: bad permutation");
  std::vector<std::string> names(n);
  std::vector<unsigned> weights(n);
  std::vector<bool> declared(n);
  std::vector<Letter> inverse(n);
  for (std::size_t i = 0; i < n; ++i) {
    names[i] = p.alphabet()->name(static_cast<Letter>(perm[i]));
    weights[i] = p.alphabet()->letter_weight(static_cast<Letter>(perm[i]));
    declared[i] = p.declared()[perm[i]];
    inverse[perm[i]] = static_cast<Letter>(i);
  }
  AlphabetPtr alpha = make_alphabet(names, weights);
  auto remap = [&](const Word& w) {
    std::vector<Letter> ls;
    ls.reserve(w.length());
    for (Letter l : w.letters()) ls.push_back(inverse[l]);
    return Word(alpha, std::move(ls));
  };
  std::vector<Relation> rels;
  for (const auto& r : p.relations()) {
    std::optional<Word> rhs;
    if (r.rhs) rhs = remap(*r.rhs);
    rels.push_back({remap(r.lhs), std::move(rhs)});
  }
  return Presentation(std::move(alpha), std::move(rels), p.has_zero(),
                      std::move(declared), p.weights_final());
}

struct WeightInference {
  std::optional<std::vector<unsigned>> weights;
  std::string reason;  // set when weights is empty

  bool ok() const noexcept { return weights.has_value(); }
};

struct HomogeneityReport {
  bool ok = true;
  std::vector<std::size_t> violations;  // indices of unbalanced relations
};

/// Checks d(lhs) == d(rhs) for every non-zero relation under the given
/// weights. Zero relations impose nothing.
inline HomogeneityReport validate_homogeneous(const Presentation& p,
                                              const std::vector<unsigned>& d) {
  if (d.size() != p.alphabet()->size()) {
    throw std::invalid_argument("validate_homogeneous: size mismatch");
  }
  HomogeneityReport rep;
  auto weigh = [&](const Word& w) {
    std::uint64_t s = 0;
    for (Letter l : w.letters()) s += d[l];
    return s;
  };
  for (std::size_t i = 0; i < p.relations().size(); ++i) {
    const auto& r = p.relations()[i];
    if (r.is_zero()) continue;
    if (weigh(r.lhs) != weigh(*r.rhs)) {
      rep.ok = false;
      rep.violations.push_back(i);
    }
  }
  return rep;
}

namespace detail {

inline BigInt rat_floor(const Rat& r) {
  BigInt q = r.numerator() / r.denominator();
  if (r.numerator() < 0 && q * r.denominator() != r.numerator()) --q;
  return q;
}
inline BigInt rat_ceil(const Rat& r) { return -rat_floor(-r); }

// One affine inequality sum(coef[i] * v[i]) + c >= 0.
struct LinIneq {
  std::vector<Rat> coef;
  Rat c;
};

/// Fourier-Motzkin feasibility over the rationals. Returns a witness
/// assignment when the system is satisfiable.
inline std::optional<std::vector<Rat>> fm_solve(std::vector<LinIneq> sys,
                                                std::size_t nvars) {
  std::vector<std::vector<LinIneq>> stage(nvars + 1);
  stage[nvars] = std::move(sys);
  for (std::size_t v = nvars; v-- > 0;) {
    std::vector<LinIneq>& cur = stage[v + 1];
    std::vector<LinIneq> next;
    std::vector<const LinIneq*> pos, neg;
    for (const auto& q : cur) {
      if (q.coef[v] > Rat(0)) {
        pos.push_back(&q);
      } else if (q.coef[v] < Rat(0)) {
        neg.push_back(&q);
      } else {
        next.push_back(q);
      }
    }
    for (const auto* a : pos) {
      for (const auto* b : neg) {
        LinIneq combined;
        combined.coef.assign(nvars, Rat(0));
        Rat ma = -b->coef[v];  // > 0
        Rat mb = a->coef[v];   // > 0
        for (std::size_t i = 0; i < nvars; ++i) {
          combined.coef[i] = ma * a->coef[i] + mb * b->coef[i];
        }
        combined.c = ma * a->c + mb * b->c;
        next.push_back(std::move(combined));
      }
    }
    stage[v] = std::move(next);
  }
  for (const auto& q : stage[0]) {
    if (q.c < Rat(0)) return std::nullopt;
  }
  // Back-substitute, preferring small positive integers.
  std::vector<Rat> vals(nvars, Rat(0));
  for (std::size_t v = 0; v < nvars; ++v) {
    std::optional<Rat> lo, hi;
    for (const auto& q : stage[v + 1]) {
      if (q.coef[v] == Rat(0)) continue;
      Rat rest = q.c;
      for (std::size_t i = 0; i < v; ++i) rest += q.coef[i] * vals[i];
      Rat bound = -rest / q.coef[v];
      if (q.coef[v] > Rat(0)) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    // Prefer 1, else the smallest integer in range, else a rational point.
    Rat pick(1);
    if (lo && hi) {
      if (*lo <= Rat(1) && Rat(1) <= *hi) {
        pick = Rat(1);
      } else {
        BigInt c = rat_ceil(*lo);
        pick = Rat(c) <= *hi ? Rat(c) : (*lo + *hi) / Rat(2);
      }
    } else if (lo) {
      pick = *lo <= Rat(1) ? Rat(1) : Rat(rat_ceil(*lo));
    } else if (hi) {
      pick = Rat(1) <= *hi ? Rat(1) : *hi;
    }
    vals[v] = pick;
  }
  return vals;
}

}  // namespace detail

/// Solves for a strictly positive integer weight assignment making every
/// non-zero relation balanced. Declared weights are treated as fixed.
/// Deterministic: the candidate search box grows until the first hit and the
/// lexicographically smallest normalized solution in that box is returned.
inline WeightInference infer_weights(const Presentation& p) {
  const std::size_t n = p.alphabet()->size();
  std::vector<std::size_t> var_of;  // generator -> variable index (undeclared)
  std::vector<std::size_t> gen_of;  // variable -> generator
  var_of.assign(n, static_cast<std::size_t>(-1));
  for (std::size_t g = 0; g < n; ++g) {
    if (!p.declared()[g]) {
      var_of[g] = gen_of.size();
      gen_of.push_back(g);
    }
  }
  const std::size_t k = gen_of.size();

  // Balance rows: sum over undeclared of coef*x = rhs-constant.
  std::vector<std::vector<Rat>> rows;  // k coefficients + constant b
  for (const auto& r : p.relations()) {
    if (r.is_zero()) continue;
    std::vector<long long> count(n, 0);
    for (Letter l : r.lhs.letters()) ++count[l];
    for (Letter l : r.rhs->letters()) --count[l];
    std::vector<Rat> row(k + 1, Rat(0));
    BigInt b = 0;
    bool nontrivial = false;
    for (std::size_t g = 0; g < n; ++g) {
      if (count[g] == 0) continue;
      if (p.declared()[g]) {
        b -= BigInt(count[g]) * BigInt(p.alphabet()->letter_weight(
                                    static_cast<Letter>(g)));
      } else {
        row[var_of[g]] = Rat(BigInt(count[g]));
        nontrivial = true;
      }
    }
    row[k] = Rat(b);
    if (nontrivial || b != 0) rows.push_back(std::move(row));
  }

  // Reduced row echelon form over the rationals.
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < k && rank < rows.size(); ++col) {
    std::size_t sel = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (rows[r][col] != Rat(0)) {
        sel = r;
        break;
      }
    }
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    Rat inv = Rat(1) / rows[rank][col];
    for (auto& x : rows[rank]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == Rat(0)) continue;
      Rat f = rows[r][col];
      for (std::size_t c2 = 0; c2 <= k; ++c2) rows[r][c2] -= f * rows[rank][c2];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (rows[r][k] != Rat(0)) {
      return {std::nullopt, "balance system has no solution"};
    }
  }

  std::vector<bool> is_pivot(k, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < k; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  const std::size_t nf = free_cols.size();

  // Affine expression of every variable in the free coordinates.
  // expr[v] = const + sum coef[j] * c_j.
  std::vector<std::vector<Rat>> expr(k, std::vector<Rat>(nf + 1, Rat(0)));
  for (std::size_t j = 0; j < nf; ++j) expr[free_cols[j]][j] = Rat(1);
  for (std::size_t r = 0; r < rank; ++r) {
    std::size_t pc = pivot_col[r];
    expr[pc][nf] = rows[r][k];
    for (std::size_t j = 0; j < nf; ++j) {
      expr[pc][j] = -rows[r][free_cols[j]];
    }
  }

  auto evaluate = [&](const std::vector<BigInt>& c,
                      std::vector<Rat>& out) -> bool {
    for (std::size_t v = 0; v < k; ++v) {
      Rat val = expr[v][nf];
      for (std::size_t j = 0; j < nf; ++j) val += expr[v][j] * Rat(c[j]);
      if (val < Rat(1) || val.denominator() != 1) return false;
      out[v] = val;
    }
    return true;
  };

  bool any_declared =
      std::any_of(p.declared().begin(), p.declared().end(), [](bool b) { return b; });

  auto assemble = [&](const std::vector<Rat>& vals) {
    std::vector<BigInt> full(n);
    for (std::size_t g = 0; g < n; ++g) {
      full[g] = p.declared()[g]
                    ? BigInt(p.alphabet()->letter_weight(static_cast<Letter>(g)))
                    : vals[var_of[g]].numerator();
    }
    if (!any_declared) {
      BigInt g = 0;
      for (const auto& x : full) g = boost::multiprecision::gcd(g, x);
      if (g > 1) {
        for (auto& x : full) x /= g;
      }
    }
    return full;
  };

  std::vector<std::vector<BigInt>> found;
  static const unsigned kSchedule[] = {1, 2, 3, 4, 6, 8, 12, 16, 24, 32, 48, 64};
  for (unsigned cap : kSchedule) {
    double points = 1;
    for (std::size_t j = 0; j < nf; ++j) points *= cap;
    if (points > 400000.0) break;
    std::vector<BigInt> c(nf, BigInt(1));
    std::vector<Rat> vals(k);
    bool done = false;
    while (!done) {
      if (evaluate(c, vals)) found.push_back(assemble(vals));
      // odometer over {1..cap}^nf
      std::size_t j = 0;
      for (; j < nf; ++j) {
        if (c[j] < cap) {
          ++c[j];
          for (std::size_t j2 = 0; j2 < j; ++j2) c[j2] = 1;
          break;
        }
      }
      if (j == nf) done = true;
    }
    if (!found.empty()) break;
  }

  if (found.empty()) {
    // Exact feasibility over the rationals; scaling recovers integrality when
    // nothing is pinned by a declared weight.
    std::vector<detail::LinIneq> sys;
    for (std::size_t v = 0; v < k; ++v) {
      detail::LinIneq q;
      q.coef.assign(expr[v].begin(), expr[v].begin() + nf);
      q.c = expr[v][nf] - Rat(1);
      sys.push_back(std::move(q));
    }
    auto witness = detail::fm_solve(std::move(sys), nf);
    if (!witness) {
      return {std::nullopt, "no strictly positive weight assignment exists"};
    }
    if (any_declared) {
      return {std::nullopt,
              "no positive integer weights found compatible with the declared ones"};
    }
    std::vector<Rat> vals(k);
    for (std::size_t v = 0; v < k; ++v) {
      Rat val = expr[v][nf];
      for (std::size_t j = 0; j < nf; ++j) val += expr[v][j] * (*witness)[j];
      vals[v] = val;
    }
    BigInt lcm = 1;
    for (const auto& r : vals) lcm = boost::multiprecision::lcm(lcm, r.denominator());
    for (auto& r : vals) r *= Rat(lcm);
    found.push_back(assemble(vals));
  }

  std::sort(found.begin(), found.end());
  const std::vector<BigInt>& best = found.front();
  std::vector<unsigned> result(n);
  for (std::size_t g = 0; g < n; ++g) {
    if (best[g] > 1'000'000'000) {
      return {std::nullopt, "inferred weights unreasonably large"};
    }
    result[g] = best[g].convert_to<unsigned>();
  }
  return {result, ""};
}

}  // namespace homog

#endif  // HOMOG_PRESENTATION_HPP
