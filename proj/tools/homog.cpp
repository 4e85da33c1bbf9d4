// Command line front end: analyze | check | complete | automaton | growth |
// series | decompose | gamma | oracle, all over the presentation file format.
//
// Exit codes: 0 success, 1 syntax/validation error, 2 non-homogeneous input,
// 3 truncated completion.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "homog/analysis.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSyntax = 1;
constexpr int kExitNonHomogeneous = 2;
constexpr int kExitTruncated = 3;

struct CommonFlags {
  std::string file;
  std::optional<unsigned> max_degree;
  std::string format = "text";
  unsigned seed_order = 0;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("file", flags.file, "presentation file")->required();
  cmd->add_option("--max-degree", flags.max_degree,
                  "degree bound for counting and completion");
  cmd->add_option("--format", flags.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--seed-order", flags.seed_order,
                  "seeded generator reordering (0 = declared order)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

homog::AnalysisOptions make_options(const CommonFlags& flags) {
  homog::AnalysisOptions options;
  if (flags.max_degree) {
    options.count_degree = *flags.max_degree;
    options.completion_degree = *flags.max_degree;
  }
  options.seed_order = flags.seed_order;
  return options;
}

bool json_format(const CommonFlags& flags) { return flags.format == "json"; }

int emit_non_homogeneous(const CommonFlags& flags,
                         const homog::AnalysisResult& result) {
  if (json_format(flags)) {
    homog::json j;
    j["outcome"] = "non-homogeneous";
    j["diagnostics"] = result.diagnostics;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& d : result.diagnostics) std::cout << d << "\n";
  }
  return kExitNonHomogeneous;
}

int emit_truncated(const CommonFlags& flags, const homog::Presentation& parsed,
                   const homog::AnalysisResult& result) {
  homog::AnalysisReport rep = make_report(parsed, result);
  std::cout << (json_format(flags) ? homog::report_to_json(rep).dump(2) + "\n"
                                   : homog::report_to_text(rep));
  return kExitTruncated;
}

int cmd_analyze(const CommonFlags& flags) {
  auto parsed = homog::parse_presentation(read_file(flags.file));
  auto result = homog::run_analysis(parsed, make_options(flags));
  if (result.outcome == homog::AnalysisOutcome::NonHomogeneous) {
    return emit_non_homogeneous(flags, result);
  }
  homog::AnalysisReport rep = make_report(parsed, result);
  std::cout << (json_format(flags) ? homog::report_to_json(rep).dump(2) + "\n"
                                   : homog::report_to_text(rep));
  return result.outcome == homog::AnalysisOutcome::Truncated ? kExitTruncated
                                                             : kExitOk;
}

int cmd_check(const CommonFlags& flags) {
  auto parsed = homog::parse_presentation(read_file(flags.file));
  auto input = homog::seeded_reorder(parsed, flags.seed_order);
  auto inference = homog::infer_weights(input);
  if (!inference.ok()) {
    if (json_format(flags)) {
      homog::json j;
      j["homogeneous"] = false;
      j["reason"] = inference.reason;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "not homogeneous: " << inference.reason << "\n";
    }
    return kExitNonHomogeneous;
  }
  auto p = homog::apply_weights(input, *inference.weights);
  if (json_format(flags)) {
    homog::json j;
    j["homogeneous"] = true;
    j["generators"] = p.alphabet()->names();
    j["weights"] = *inference.weights;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "homogeneous with weights:";
    for (std::size_t i = 0; i < p.alphabet()->size(); ++i) {
      std::cout << " " << p.alphabet()->name(static_cast<homog::Letter>(i))
                << "=" << (*inference.weights)[i];
    }
    std::cout << "\n";
  }
  return kExitOk;
}

/// Shared front half: parse, infer, complete. Returns nullopt after printing
/// when the pipeline stops early.
struct Pipeline {
  homog::Presentation parsed;
  homog::AnalysisResult result;
};

std::optional<Pipeline> run_pipeline(const CommonFlags& flags, int& exit_code,
                                     bool need_complete) {
  auto parsed = homog::parse_presentation(read_file(flags.file));
  auto result = homog::run_analysis(parsed, make_options(flags));
  if (result.outcome == homog::AnalysisOutcome::NonHomogeneous) {
    exit_code = emit_non_homogeneous(flags, result);
    return std::nullopt;
  }
  if (need_complete && result.outcome == homog::AnalysisOutcome::Truncated) {
    exit_code = emit_truncated(flags, parsed, result);
    return std::nullopt;
  }
  return Pipeline{std::move(parsed), std::move(result)};
}

int cmd_complete(const CommonFlags& flags) {
  int code = kExitOk;
  auto parsed = homog::parse_presentation(read_file(flags.file));
  auto result = homog::run_analysis(parsed, make_options(flags));
  if (result.outcome == homog::AnalysisOutcome::NonHomogeneous) {
    return emit_non_homogeneous(flags, result);
  }
  const auto& rs = *result.rs;
  if (json_format(flags)) {
    homog::json j;
    j["status"] = rs.complete() ? "complete" : "truncated";
    j["degree_bound"] = result.completion_degree;
    j["rules"] = homog::json::array();
    for (const auto& r : rs.rules()) j["rules"].push_back(homog::rule_to_string(r));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (rs.complete()
                      ? "complete"
                      : "truncated at degree " +
                            std::to_string(rs.truncation_degree()))
              << " (" << rs.rules().size() << " rules)\n";
    for (const auto& r : rs.rules()) {
      std::cout << "  " << homog::rule_to_string(r) << "\n";
    }
  }
  if (!rs.complete()) code = kExitTruncated;
  return code;
}

int cmd_automaton(const CommonFlags& flags, const std::string& output) {
  int code = kExitOk;
  auto pipeline = run_pipeline(flags, code, /*need_complete=*/true);
  if (!pipeline) return code;
  std::string dot = pipeline->result.dfa->to_dot();
  if (output.empty()) {
    std::cout << dot;
  } else {
    std::ofstream out(output);
    if (!out) throw std::runtime_error("cannot write " + output);
    out << dot;
  }
  return kExitOk;
}

int cmd_growth(const CommonFlags& flags) {
  int code = kExitOk;
  auto pipeline = run_pipeline(flags, code, /*need_complete=*/true);
  if (!pipeline) return code;
  const auto& result = pipeline->result;
  if (json_format(flags)) {
    homog::json j;
    j["growth"] = result.growth->str();
    j["counts"] = homog::json::array();
    for (const auto& c : result.counts) j["counts"].push_back(c.str());
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "growth: " << result.growth->str() << "\ncounts:";
    for (const auto& c : result.counts) std::cout << " " << c.str();
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_series(const CommonFlags& flags) {
  int code = kExitOk;
  auto pipeline = run_pipeline(flags, code, /*need_complete=*/true);
  if (!pipeline) return code;
  const auto& series = *pipeline->result.series;
  if (json_format(flags)) {
    homog::json j;
    j["numerator"] = homog::json::array();
    j["denominator"] = homog::json::array();
    for (const auto& c : series.numerator.c) j["numerator"].push_back(c.str());
    for (const auto& c : series.denominator.c) {
      j["denominator"].push_back(c.str());
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << homog::series_to_string(series) << "\n";
  }
  return kExitOk;
}

int emit_not_linear(const CommonFlags& flags, const homog::AnalysisResult& r) {
  if (json_format(flags)) {
    homog::json j;
    j["refused"] = "growth is not linear";
    j["growth"] = r.growth->str();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "no decomposition: growth " << r.growth->str()
              << " is not linear\n";
  }
  return kExitOk;
}

int cmd_decompose(const CommonFlags& flags) {
  int code = kExitOk;
  auto pipeline = run_pipeline(flags, code, /*need_complete=*/true);
  if (!pipeline) return code;
  const auto& result = pipeline->result;
  if (!result.decomposition) return emit_not_linear(flags, result);
  homog::json j =
      homog::decomposition_to_json(*result.decomposition, result.gamma);
  if (json_format(flags)) {
    std::cout << j.dump(2) << "\n";
  } else {
    const auto& dec = *result.decomposition;
    std::cout << "finite: {";
    for (std::size_t i = 0; i < dec.finite.size(); ++i) {
      std::cout << (i ? ", " : "") << dec.finite[i].str();
    }
    std::cout << "}\nunit: " << (dec.has_unit ? "yes" : "no")
              << "\nzero: " << (dec.has_zero ? "yes" : "no") << "\n";
    for (const auto& s : dec.sandwiches) {
      std::cout << "sandwich: " << s.str() << "\n";
    }
    std::cout << "gamma: lower=" << result.gamma->lower
              << " upper=" << result.gamma->upper
              << " exact=" << (result.gamma->exact ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_gamma(const CommonFlags& flags) {
  int code = kExitOk;
  auto pipeline = run_pipeline(flags, code, /*need_complete=*/true);
  if (!pipeline) return code;
  const auto& result = pipeline->result;
  if (!result.gamma) return emit_not_linear(flags, result);
  if (json_format(flags)) {
    homog::json j;
    j["lower"] = result.gamma->lower;
    j["upper"] = result.gamma->upper;
    j["exact"] = result.gamma->exact;
    if (result.monogenic) {
      if (const auto* w =
              std::get_if<homog::MonogenicWitness>(&*result.monogenic)) {
        homog::json m;
        m["generator"] = homog::word_to_json_string(w->generator);
        m["residual"] = homog::json::array();
        for (const auto& f : w->residual) {
          m["residual"].push_back(homog::word_to_json_string(f));
        }
        j["monogenic"] = m;
      } else {
        j["monogenic"] = {
            {"refuted",
             std::get<homog::MonogenicRefutation>(*result.monogenic).reason}};
      }
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "gamma: lower=" << result.gamma->lower
              << " upper=" << result.gamma->upper
              << " exact=" << (result.gamma->exact ? "yes" : "no") << "\n";
    if (result.monogenic) {
      if (const auto* w =
              std::get_if<homog::MonogenicWitness>(&*result.monogenic)) {
        std::cout << "monogenic: generator=" << w->generator.str()
                  << " residual={";
        for (std::size_t i = 0; i < w->residual.size(); ++i) {
          std::cout << (i ? ", " : "") << w->residual[i].str();
        }
        std::cout << "}\n";
      } else {
        std::cout << "monogenic: refuted ("
                  << std::get<homog::MonogenicRefutation>(*result.monogenic)
                         .reason
                  << ")\n";
      }
    }
  }
  return kExitOk;
}

int cmd_oracle(const CommonFlags& flags) {
  auto parsed = homog::parse_presentation(read_file(flags.file));
  auto input = homog::seeded_reorder(parsed, flags.seed_order);
  auto inference = homog::infer_weights(input);
  if (!inference.ok()) {
    homog::AnalysisResult result;
    result.diagnostics.push_back("not homogeneous: " + inference.reason);
    return emit_non_homogeneous(flags, result);
  }
  auto p = homog::apply_weights(input, *inference.weights);
  unsigned degree = flags.max_degree.value_or(12);
  auto census = homog::enumerate_census(p, degree);
  auto counts = homog::census_counts(census);
  if (json_format(flags)) {
    homog::json j;
    j["counts"] = counts;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "counts:";
    for (auto c : counts) std::cout << " " << c;
    std::cout << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"analysis of finitely presented homogeneous monoids"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string automaton_output;

  auto* analyze = app.add_subcommand("analyze", "full pipeline report");
  add_common(analyze, flags);
  auto* check = app.add_subcommand("check", "homogeneity check only");
  add_common(check, flags);
  auto* complete = app.add_subcommand("complete", "print the rewriting system");
  add_common(complete, flags);
  auto* automaton =
      app.add_subcommand("automaton", "normal-word automaton as DOT");
  add_common(automaton, flags);
  automaton->add_option("--output", automaton_output, "write DOT here");
  auto* growth = app.add_subcommand("growth", "growth class and counts");
  add_common(growth, flags);
  auto* series = app.add_subcommand("series", "rational generating series");
  add_common(series, flags);
  auto* decompose = app.add_subcommand("decompose", "sandwich decomposition");
  add_common(decompose, flags);
  auto* gamma = app.add_subcommand("gamma", "gamma bounds");
  add_common(gamma, flags);
  auto* oracle = app.add_subcommand("oracle", "brute-force census counts");
  add_common(oracle, flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return cmd_analyze(flags);
    if (check->parsed()) return cmd_check(flags);
    if (complete->parsed()) return cmd_complete(flags);
    if (automaton->parsed()) return cmd_automaton(flags, automaton_output);
    if (growth->parsed()) return cmd_growth(flags);
    if (series->parsed()) return cmd_series(flags);
    if (decompose->parsed()) return cmd_decompose(flags);
    if (gamma->parsed()) return cmd_gamma(flags);
    if (oracle->parsed()) return cmd_oracle(flags);
  } catch (const homog::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSyntax;
  } catch (const homog::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSyntax;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSyntax;
  }
  return kExitSyntax;
}
