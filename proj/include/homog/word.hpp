#ifndef HOMOG_WORD_HPP
#define HOMOG_WORD_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace homog {

using Letter = std::uint8_t;

/// A finite ordered alphabet with a strictly positive integer weight per
/// letter. Letter order is the declaration order and drives every
/// lexicographic tie-break downstream, so it is part of the value.
class Alphabet {
 public:
  Alphabet(std::vector<std::string> names, std::vector<unsigned> weights)
      : names_(std::move(names)), weights_(std::move(weights)) {
    if (names_.size() != weights_.size()) {
      throw std::invalid_argument("alphabet: names/weights size mismatch");
    }
    if (names_.size() > 255) {
      throw std::invalid_argument("alphabet: at most 255 generators");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (weights_[i] == 0) {
        throw std::invalid_argument("alphabet: weight of \"" + names_[i] +
                                    "\" must be positive");
      }
      auto [it, inserted] = index_.emplace(names_[i], static_cast<Letter>(i));
      if (!inserted) {
        throw std::invalid_argument("alphabet: duplicate generator \"" +
                                    names_[i] + "\"");
      }
    }
    multi_char_ = std::any_of(names_.begin(), names_.end(),
                              [](const std::string& n) { return n.size() > 1; });
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Letter i) const { return names_.at(i); }
  unsigned letter_weight(Letter i) const { return weights_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<unsigned>& weights() const noexcept { return weights_; }
  bool has_multi_char_names() const noexcept { return multi_char_; }

  std::optional<Letter> index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  unsigned max_weight() const {
    unsigned m = 0;
    for (unsigned w : weights_) m = std::max(m, w);
    return m;
  }

 private:
  std::vector<std::string> names_;
  std::vector<unsigned> weights_;
  std::map<std::string, Letter> index_;
  bool multi_char_ = false;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline AlphabetPtr make_alphabet(std::vector<std::string> names,
                                 std::vector<unsigned> weights) {
  return std::make_shared<const Alphabet>(std::move(names), std::move(weights));
}

/// Unit-weight alphabet of single-character generators, e.g. "xy".
inline AlphabetPtr make_alphabet(const std::string& chars) {
  std::vector<std::string> names;
  for (char c : chars) names.emplace_back(1, c);
  return make_alphabet(std::move(names),
                       std::vector<unsigned>(names.size(), 1));
}

/// An immutable word of the free monoid over a fixed Alphabet instance.
/// Binary operations insist both operands come from the same instance;
/// mixing presentations is a bug we want loud.
class Word {
 public:
  Word() = default;  // null word, only valid as an assignment target

  explicit Word(AlphabetPtr alpha, std::vector<Letter> letters = {})
      : alpha_(std::move(alpha)), letters_(std::move(letters)) {
    if (!alpha_) throw std::invalid_argument("word: null alphabet");
    for (Letter l : letters_) {
      if (l >= alpha_->size()) throw std::invalid_argument("word: bad letter");
    }
  }

  const AlphabetPtr& alphabet() const noexcept { return alpha_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  std::uint64_t weight() const {
    std::uint64_t s = 0;
    for (Letter l : letters_) s += alpha_->letter_weight(l);
    return s;
  }

  Word subword(std::size_t pos, std::size_t len) const {
    if (pos + len > letters_.size()) {
      throw std::out_of_range("word: subword out of range");
    }
    return Word(alpha_, std::vector<Letter>(letters_.begin() + pos,
                                            letters_.begin() + pos + len));
  }

  Word prefix(std::size_t len) const { return subword(0, len); }
  Word suffix(std::size_t len) const {
    return subword(letters_.size() - len, len);
  }

  /// Left rotation by k: rotate("ab", 1) == "ba".
  Word rotated(std::size_t k) const {
    if (letters_.empty()) return *this;
    k %= letters_.size();
    std::vector<Letter> v(letters_.begin() + k, letters_.end());
    v.insert(v.end(), letters_.begin(), letters_.begin() + k);
    return Word(alpha_, std::move(v));
  }

  Word pow(std::size_t n) const {
    std::vector<Letter> v;
    v.reserve(letters_.size() * n);
    for (std::size_t i = 0; i < n; ++i) {
      v.insert(v.end(), letters_.begin(), letters_.end());
    }
    return Word(alpha_, std::move(v));
  }

  /// First occurrence of f as a factor at position >= from, or npos.
  std::size_t find_factor(const Word& f, std::size_t from = 0) const {
    check_same_alphabet(*this, f);
    if (f.empty()) return from <= length() ? from : npos;
    if (f.length() > length()) return npos;
    for (std::size_t i = from; i + f.length() <= length(); ++i) {
      if (std::equal(f.letters_.begin(), f.letters_.end(),
                     letters_.begin() + i)) {
        return i;
      }
    }
    return npos;
  }

  bool contains_factor(const Word& f) const { return find_factor(f) != npos; }

  std::string str() const {
    if (!alpha_) return "<null>";
    if (letters_.empty()) return "1";
    std::string out;
    bool sep = alpha_->has_multi_char_names();
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (sep && i > 0) out += '.';
      out += alpha_->name(letters_[i]);
    }
    return out;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  friend Word operator+(const Word& u, const Word& v) {
    check_same_alphabet(u, v);
    std::vector<Letter> l = u.letters_;
    l.insert(l.end(), v.letters_.begin(), v.letters_.end());
    return Word(u.alpha_, std::move(l));
  }

  friend bool operator==(const Word& u, const Word& v) {
    check_same_alphabet(u, v);
    return u.letters_ == v.letters_;
  }
  friend bool operator!=(const Word& u, const Word& v) { return !(u == v); }

  /// Plain lexicographic order on letter indices; container ordering only.
  friend bool lex_less(const Word& u, const Word& v) {
    check_same_alphabet(u, v);
    return u.letters_ < v.letters_;
  }

  static void check_same_alphabet(const Word& u, const Word& v) {
    if (u.alpha_.get() != v.alpha_.get()) {
      throw std::logic_error("words from different alphabets");
    }
    if (!u.alpha_) throw std::logic_error("null word in operation");
  }

 private:
  AlphabetPtr alpha_;
  std::vector<Letter> letters_;
};

struct WordLexLess {
  bool operator()(const Word& u, const Word& v) const { return lex_less(u, v); }
};

/// Builds a word from a display string: "1" is the empty word, segments are
/// separated by "." or, failing an exact name match, read letter by letter.
inline Word word_from_string(const AlphabetPtr& alpha, const std::string& text) {
  if (text.empty() || text == "1") return Word(alpha);
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t dot = text.find('.', pos);
    std::string seg = text.substr(pos, dot == std::string::npos ? dot : dot - pos);
    if (seg.empty()) throw std::invalid_argument("empty word segment in \"" + text + "\"");
    if (auto l = alpha->index_of(seg)) {
      letters.push_back(*l);
    } else {
      for (char c : seg) {
        auto cl = alpha->index_of(std::string(1, c));
        if (!cl) {
          throw std::invalid_argument("unknown generator \"" + std::string(1, c) +
                                      "\" in \"" + text + "\"");
        }
        letters.push_back(*cl);
      }
    }
    pos = dot == std::string::npos ? text.size() : dot + 1;
  }
  return Word(alpha, std::move(letters));
}

/// Graded-lexicographic total order: weight, then length, then letter order.
inline std::strong_ordering compare_graded_lex(const Word& u, const Word& v) {
  Word::check_same_alphabet(u, v);
  if (auto c = u.weight() <=> v.weight(); c != 0) return c;
  if (auto c = u.length() <=> v.length(); c != 0) return c;
  return u.letters() <=> v.letters();
}

struct GradedLexLess {
  bool operator()(const Word& u, const Word& v) const {
    return compare_graded_lex(u, v) < 0;
  }
};

/// KMP failure function: border[i] = length of the longest proper border of
/// the prefix of length i+1.
inline std::vector<std::size_t> border_array(const Word& w) {
  std::vector<std::size_t> border(w.length(), 0);
  for (std::size_t i = 1; i < w.length(); ++i) {
    std::size_t b = border[i - 1];
    while (b > 0 && w[i] != w[b]) b = border[b - 1];
    if (w[i] == w[b]) ++b;
    border[i] = b;
  }
  return border;
}

/// Shortest u and maximal e with w == u^e. Linear time via the border array;
/// the exhaustive divisor check lives in the tests.
inline std::pair<Word, std::size_t> primitive_root(const Word& w) {
  if (w.empty()) throw std::invalid_argument("primitive_root: empty word");
  auto border = border_array(w);
  std::size_t n = w.length();
  std::size_t period = n - border[n - 1];
  if (n % period == 0) return {w.prefix(period), n / period};
  return {w, 1};
}

/// Smallest k with rotate(w, k) == v, if the words are conjugate.
inline std::optional<std::size_t> conjugacy_offset(const Word& w, const Word& v) {
  Word::check_same_alphabet(w, v);
  if (w.empty() || v.empty()) {
    throw std::invalid_argument("conjugacy_offset: empty word");
  }
  if (w.length() != v.length()) return std::nullopt;
  std::size_t k = (w + w).find_factor(v);
  if (k == Word::npos || k >= w.length()) return std::nullopt;
  return k;
}

}  // namespace homog

#endif  // HOMOG_WORD_HPP
