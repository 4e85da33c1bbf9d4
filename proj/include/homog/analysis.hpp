#ifndef HOMOG_ANALYSIS_HPP
#define HOMOG_ANALYSIS_HPP

#include <array>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "homog/automaton.hpp"
#include "homog/decomposition.hpp"
#include "homog/json_io.hpp"
#include "homog/oracle.hpp"
#include "homog/presentation.hpp"
#include "homog/rewriting.hpp"
#include "homog/sandwich.hpp"
#include "homog/series.hpp"

namespace homog {

struct AnalysisOptions {
  unsigned count_degree = 12;
  std::optional<unsigned> completion_degree;  // default: 4 * max relation weight
  unsigned seed_order = 0;                    // 0: declared generator order
  std::uint64_t oracle_budget = 2'000'000;
};

enum class AnalysisOutcome { Ok, NonHomogeneous, Truncated };

struct AnalysisResult {
  AnalysisOutcome outcome = AnalysisOutcome::Ok;
  std::optional<Presentation> presentation;  // weighted, post-inference
  std::vector<unsigned> weights;
  unsigned completion_degree = 0;
  std::optional<RewritingSystem> rs;
  std::optional<NormalWordAutomaton> dfa;
  std::optional<GrowthClass> growth;
  std::vector<BigInt> counts;
  std::string counts_source;  // "automaton" or "oracle"
  std::optional<GeneratingSeries> series;
  std::optional<SandwichDecomposition> decomposition;
  std::optional<GammaBounds> gamma;
  std::optional<std::variant<MonogenicWitness, MonogenicRefutation>> monogenic;
  std::vector<std::string> diagnostics;
};

/// Deterministic Fisher-Yates permutation of the generator order; seed 0 is
/// the identity. Exists so determinism tests can reshuffle inputs.
inline Presentation seeded_reorder(const Presentation& p, unsigned seed) {
  if (seed == 0) return p;
  std::size_t n = p.alphabet()->size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::mt19937 gen(seed);
  for (std::size_t i = n; i > 1; --i) {
    std::size_t j = gen() % i;
    std::swap(perm[i - 1], perm[j]);
  }
  return reorder_generators(p, perm);
}

/// Oracle counts capped by the word budget; reports how far it got.
inline std::vector<BigInt> oracle_counts_capped(const Presentation& p,
                                                unsigned max_degree,
                                                std::uint64_t budget,
                                                std::vector<std::string>& notes) {
  unsigned degree = max_degree;
  while (true) {
    try {
      auto census = enumerate_census(p, degree, budget);
      std::vector<BigInt> counts;
      for (auto c : census_counts(census)) counts.push_back(BigInt(c));
      if (degree < max_degree) {
        notes.push_back("oracle stopped at degree " + std::to_string(degree) +
                        " (word budget)");
      }
      return counts;
    } catch (const BudgetExceeded& e) {
      if (e.degree_reached() == 0 && degree == 0) return {BigInt(1)};
      degree = e.degree_reached();
    }
  }
}

/// The full pipeline: infer weights, complete, build the automaton, classify
/// growth, and when the growth is finite or linear extract the certified
/// sandwich decomposition with its gamma bracket. Truncated completion stops
/// after the rewriting stage with oracle-backed counts only.
inline AnalysisResult run_analysis(const Presentation& parsed,
                                   const AnalysisOptions& options = {}) {
  AnalysisResult result;
  Presentation input = seeded_reorder(parsed, options.seed_order);

  WeightInference inference = infer_weights(input);
  if (!inference.ok()) {
    result.outcome = AnalysisOutcome::NonHomogeneous;
    result.diagnostics.push_back("not homogeneous: " + inference.reason);
    return result;
  }
  result.weights = *inference.weights;
  Presentation p = apply_weights(input, result.weights);
  auto check = validate_homogeneous(p, result.weights);
  if (!check.ok) {
    throw std::logic_error("inferred weights failed validation");
  }
  result.presentation = p;

  result.completion_degree =
      options.completion_degree.value_or(4 * std::max(1u, p.max_relation_weight()));
  result.rs = complete(p, result.completion_degree);

  if (!result.rs->complete()) {
    result.outcome = AnalysisOutcome::Truncated;
    result.diagnostics.push_back(
        "completion truncated at degree " +
        std::to_string(result.rs->truncation_degree()) +
        "; results are certified only below this weight");
    result.counts = oracle_counts_capped(p, options.count_degree,
                                         options.oracle_budget,
                                         result.diagnostics);
    result.counts_source = "oracle";
    return result;
  }

  result.dfa = build_automaton(result.rs->obstruction_set(), p.alphabet());
  result.growth = classify_growth(*result.dfa);
  result.counts = count_words(*result.dfa, options.count_degree);
  result.counts_source = "automaton";
  result.series = generating_series(*result.dfa);

  if (result.growth->linear()) {
    SandwichDecomposition dec = extract_decomposition(*result.dfa);
    dec.has_zero = p.has_zero();
    result.gamma = gamma_bounds(dec, *result.dfa);
    result.gamma->witness.has_zero = p.has_zero();
    result.decomposition = std::move(dec);
    if (result.gamma->upper == 1) {
      result.monogenic = check_monogenic_plus_finite(result.gamma->witness);
    }
  } else {
    result.diagnostics.push_back("growth " + result.growth->str() +
                                 " is not linear; no sandwich decomposition");
  }
  return result;
}

/// Plain-data report: every field is a string, number or bool so the JSON
/// form round-trips exactly.
struct AnalysisReport {
  std::string presentation;
  std::vector<std::string> generators;
  std::vector<unsigned> weights;
  bool has_zero = false;
  std::string outcome;  // "ok" | "non-homogeneous" | "truncated"
  std::string completion_status;
  unsigned completion_degree = 0;
  std::vector<std::string> rules;
  std::string growth;
  std::string counts_source;
  std::vector<std::string> counts;
  std::vector<std::string> series_numerator;
  std::vector<std::string> series_denominator;
  bool has_decomposition = false;
  std::vector<std::string> dec_finite;
  bool dec_has_unit = false;
  bool dec_has_zero = false;
  std::vector<std::array<std::string, 3>> dec_sandwiches;
  unsigned gamma_lower = 0;
  unsigned gamma_upper = 0;
  bool gamma_exact = false;
  std::vector<std::string> diagnostics;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

inline std::string rule_to_string(const Rule& r) {
  return r.lhs.str() + " -> " + (r.is_zero() ? "0" : r.rhs->str());
}

inline AnalysisReport make_report(const Presentation& parsed,
                                  const AnalysisResult& result) {
  AnalysisReport rep;
  const Presentation& p =
      result.presentation ? *result.presentation : parsed;
  rep.presentation = p.echo();
  for (std::size_t i = 0; i < p.alphabet()->size(); ++i) {
    rep.generators.push_back(p.alphabet()->name(static_cast<Letter>(i)));
  }
  rep.weights = result.weights;
  rep.has_zero = p.has_zero();
  switch (result.outcome) {
    case AnalysisOutcome::Ok:
      rep.outcome = "ok";
      break;
    case AnalysisOutcome::NonHomogeneous:
      rep.outcome = "non-homogeneous";
      break;
    case AnalysisOutcome::Truncated:
      rep.outcome = "truncated";
      break;
  }
  rep.completion_degree = result.completion_degree;
  if (result.rs) {
    rep.completion_status = result.rs->complete() ? "complete" : "truncated";
    for (const Rule& r : result.rs->rules()) {
      rep.rules.push_back(rule_to_string(r));
    }
  }
  if (result.growth) rep.growth = result.growth->str();
  rep.counts_source = result.counts_source;
  for (const BigInt& c : result.counts) rep.counts.push_back(c.str());
  if (result.series) {
    for (const BigInt& c : result.series->numerator.c) {
      rep.series_numerator.push_back(c.str());
    }
    for (const BigInt& c : result.series->denominator.c) {
      rep.series_denominator.push_back(c.str());
    }
  }
  if (result.decomposition) {
    rep.has_decomposition = true;
    const SandwichDecomposition& dec = *result.decomposition;
    for (const Word& w : dec.finite) {
      rep.dec_finite.push_back(word_to_json_string(w));
    }
    rep.dec_has_unit = dec.has_unit;
    rep.dec_has_zero = dec.has_zero;
    for (const Sandwich& s : dec.sandwiches) {
      rep.dec_sandwiches.push_back({word_to_json_string(s.a),
                                    word_to_json_string(s.w),
                                    word_to_json_string(s.b)});
    }
    rep.gamma_lower = result.gamma->lower;
    rep.gamma_upper = result.gamma->upper;
    rep.gamma_exact = result.gamma->exact;
  }
  rep.diagnostics = result.diagnostics;
  return rep;
}

inline json report_to_json(const AnalysisReport& rep) {
  json j;
  j["presentation"] = rep.presentation;
  j["generators"] = rep.generators;
  j["weights"] = rep.weights;
  j["has_zero"] = rep.has_zero;
  j["outcome"] = rep.outcome;
  j["completion"] = {{"status", rep.completion_status},
                     {"degree_bound", rep.completion_degree},
                     {"rules", rep.rules}};
  j["growth"] = rep.growth;
  j["counts"] = {{"source", rep.counts_source}, {"values", rep.counts}};
  j["series"] = {{"numerator", rep.series_numerator},
                 {"denominator", rep.series_denominator}};
  if (rep.has_decomposition) {
    json d;
    d["finite"] = rep.dec_finite;
    d["has_unit"] = rep.dec_has_unit;
    d["has_zero"] = rep.dec_has_zero;
    d["sandwiches"] = json::array();
    for (const auto& s : rep.dec_sandwiches) {
      d["sandwiches"].push_back({{"a", s[0]}, {"w", s[1]}, {"b", s[2]}});
    }
    d["gamma"] = {{"lower", rep.gamma_lower},
                  {"upper", rep.gamma_upper},
                  {"exact", rep.gamma_exact}};
    j["decomposition"] = d;
  }
  j["diagnostics"] = rep.diagnostics;
  return j;
}

inline AnalysisReport report_from_json(const json& j) {
  AnalysisReport rep;
  rep.presentation = j.at("presentation").get<std::string>();
  rep.generators = j.at("generators").get<std::vector<std::string>>();
  rep.weights = j.at("weights").get<std::vector<unsigned>>();
  rep.has_zero = j.at("has_zero").get<bool>();
  rep.outcome = j.at("outcome").get<std::string>();
  rep.completion_status = j.at("completion").at("status").get<std::string>();
  rep.completion_degree = j.at("completion").at("degree_bound").get<unsigned>();
  rep.rules = j.at("completion").at("rules").get<std::vector<std::string>>();
  rep.growth = j.at("growth").get<std::string>();
  rep.counts_source = j.at("counts").at("source").get<std::string>();
  rep.counts = j.at("counts").at("values").get<std::vector<std::string>>();
  rep.series_numerator =
      j.at("series").at("numerator").get<std::vector<std::string>>();
  rep.series_denominator =
      j.at("series").at("denominator").get<std::vector<std::string>>();
  if (j.contains("decomposition")) {
    rep.has_decomposition = true;
    const json& d = j.at("decomposition");
    rep.dec_finite = d.at("finite").get<std::vector<std::string>>();
    rep.dec_has_unit = d.at("has_unit").get<bool>();
    rep.dec_has_zero = d.at("has_zero").get<bool>();
    for (const auto& s : d.at("sandwiches")) {
      rep.dec_sandwiches.push_back({s.at("a").get<std::string>(),
                                    s.at("w").get<std::string>(),
                                    s.at("b").get<std::string>()});
    }
    rep.gamma_lower = d.at("gamma").at("lower").get<unsigned>();
    rep.gamma_upper = d.at("gamma").at("upper").get<unsigned>();
    rep.gamma_exact = d.at("gamma").at("exact").get<bool>();
  }
  rep.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
  return rep;
}

inline std::string report_to_text(const AnalysisReport& rep) {
  std::string out;
  out += "presentation: " + rep.presentation + "\n";
  out += "weights:";
  for (std::size_t i = 0; i < rep.generators.size(); ++i) {
    out += " " + rep.generators[i] + "=" +
           (i < rep.weights.size() ? std::to_string(rep.weights[i]) : "?");
  }
  out += "\n";
  if (!rep.completion_status.empty()) {
    out += "completion: " + rep.completion_status + " (degree bound " +
           std::to_string(rep.completion_degree) + ", " +
           std::to_string(rep.rules.size()) + " rules)\n";
    for (const auto& r : rep.rules) out += "  " + r + "\n";
  }
  if (!rep.growth.empty()) out += "growth: " + rep.growth + "\n";
  if (!rep.counts.empty()) {
    out += "counts (" + rep.counts_source + "):";
    for (const auto& c : rep.counts) out += " " + c;
    out += "\n";
  }
  if (!rep.series_numerator.empty() || !rep.series_denominator.empty()) {
    Poly num, den;
    for (const auto& c : rep.series_numerator) num.c.push_back(BigInt(c));
    for (const auto& c : rep.series_denominator) den.c.push_back(BigInt(c));
    out += "series: " + series_to_string(GeneratingSeries{num, den}) + "\n";
  }
  if (rep.has_decomposition) {
    out += "decomposition:\n  finite: {";
    for (std::size_t i = 0; i < rep.dec_finite.size(); ++i) {
      out += (i ? ", " : "") + rep.dec_finite[i];
    }
    out += "}\n";
    out += std::string("  unit: ") + (rep.dec_has_unit ? "yes" : "no") + "\n";
    out += std::string("  zero: ") + (rep.dec_has_zero ? "yes" : "no") + "\n";
    for (const auto& s : rep.dec_sandwiches) {
      auto show = [](const std::string& w) { return w.empty() ? "1" : w; };
      out += "  sandwich: " + show(s[0]) + "<" + show(s[1]) + ">" + show(s[2]) +
             "\n";
    }
    out += "gamma: lower=" + std::to_string(rep.gamma_lower) +
           " upper=" + std::to_string(rep.gamma_upper) +
           " exact=" + (rep.gamma_exact ? "yes" : "no") + "\n";
  }
  for (const auto& d : rep.diagnostics) out += "note: " + d + "\n";
  return out;
}

}  // namespace homog

#endif  // HOMOG_ANALYSIS_HPP
