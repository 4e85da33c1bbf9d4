#ifndef HOMOG_JSON_IO_HPP
#define HOMOG_JSON_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "homog/decomposition.hpp"
#include "homog/sandwich.hpp"
#include "homog/word.hpp"

namespace homog {

using json = nlohmann::json;

/// Words in JSON: generator names, "."-separated when the alphabet has
/// multi-character names, the empty word as "".
inline std::string word_to_json_string(const Word& w) {
  return w.empty() ? "" : w.str();
}

inline Word word_from_json_string(const AlphabetPtr& alpha,
                                  const std::string& s) {
  return word_from_string(alpha, s);
}

inline json decomposition_to_json(const SandwichDecomposition& dec,
                                  const std::optional<GammaBounds>& gamma) {
  json j;
  j["finite"] = json::array();
  for (const Word& w : dec.finite) j["finite"].push_back(word_to_json_string(w));
  j["has_unit"] = dec.has_unit;
  j["has_zero"] = dec.has_zero;
  j["sandwiches"] = json::array();
  for (const Sandwich& s : dec.sandwiches) {
    j["sandwiches"].push_back({{"a", word_to_json_string(s.a)},
                               {"w", word_to_json_string(s.w)},
                               {"b", word_to_json_string(s.b)}});
  }
  if (gamma) {
    j["gamma"] = {{"lower", gamma->lower},
                  {"upper", gamma->upper},
                  {"exact", gamma->exact}};
  }
  return j;
}

inline SandwichDecomposition decomposition_from_json(const AlphabetPtr& alpha,
                                                     const json& j) {
  SandwichDecomposition dec;
  for (const auto& w : j.at("finite")) {
    dec.finite.push_back(word_from_json_string(alpha, w.get<std::string>()));
  }
  dec.has_unit = j.at("has_unit").get<bool>();
  dec.has_zero = j.at("has_zero").get<bool>();
  for (const auto& s : j.at("sandwiches")) {
    dec.sandwiches.push_back(
        Sandwich{word_from_json_string(alpha, s.at("a").get<std::string>()),
                 word_from_json_string(alpha, s.at("w").get<std::string>()),
                 word_from_json_string(alpha, s.at("b").get<std::string>())});
  }
  return dec;
}

}  // namespace homog

#endif  // HOMOG_JSON_IO_HPP
