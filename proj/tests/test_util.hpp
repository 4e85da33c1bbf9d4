#ifndef HOMOG_TEST_UTIL_HPP
#define HOMOG_TEST_UTIL_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "homog/analysis.hpp"

namespace homog_test {

inline std::string fixture_path(const std::string& name) {
  return std::string(HOMOG_FIXTURES_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline homog::Presentation parse_fixture(const std::string& name) {
  return homog::parse_presentation(read_fixture(name));
}

/// Parse + infer + apply: the weighted presentation ready for analysis.
inline homog::Presentation prep(const std::string& text) {
  auto parsed = homog::parse_presentation(text);
  auto inf = homog::infer_weights(parsed);
  if (!inf.ok()) throw std::runtime_error("fixture not homogeneous");
  return homog::apply_weights(parsed, *inf.weights);
}

inline homog::Presentation prep_fixture(const std::string& name) {
  return prep(read_fixture(name));
}

/// Corpus for the oracle-agreement and decomposition criteria. braid.txt is
/// deliberately absent: its completion does not finish.
inline const std::vector<std::string>& corpus() {
  static const std::vector<std::string> names = {
      "m.txt",       "free1.txt",   "free2.txt", "comm.txt",
      "weighted.txt", "mono_plus.txt", "finite2.txt", "linear2.txt",
      "rnd1.txt",    "rnd2.txt",    "rnd3.txt"};
  return names;
}

}  // namespace homog_test

#endif
