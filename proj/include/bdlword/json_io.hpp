#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bdlword/bdl.hpp"
#include "bdlword/morphism.hpp"
#include "bdlword/spectral.hpp"
#include "bdlword/word.hpp"

namespace bdlword {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline Alphabet alphabet_from_json(const nlohmann::json& j, const std::string& key) {
  if (!j.contains(key)) throw ParseError("missing \"" + key + "\" array");
  const auto& arr = j.at(key);
  if (!arr.is_array() || arr.empty())
    throw ParseError("\"" + key + "\" must be a non-empty array of symbols");
  std::string letters;
  for (const auto& entry : arr) {
    if (!entry.is_string())
      throw ParseError("\"" + key + "\": symbols must be strings");
    std::string s = entry.get<std::string>();
    if (s.size() != 1)
      throw ParseError("\"" + key + "\": letter \"" + s +
                       "\" is not a single character (multi-character letters are rejected)");
    letters += s;
  }
  try {
    return Alphabet(letters);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("\"") + key + "\": " + e.what());
  }
}

inline std::vector<std::string> rules_from_json(const nlohmann::json& j,
                                                const Alphabet& source) {
  if (!j.contains("rules")) throw ParseError("missing \"rules\" object");
  const auto& rules = j.at("rules");
  if (!rules.is_object()) throw ParseError("\"rules\" must be an object mapping letters to strings");
  std::vector<std::string> images(static_cast<std::size_t>(source.size()));
  std::vector<bool> seen(static_cast<std::size_t>(source.size()), false);
  for (const auto& [key, value] : rules.items()) {
    if (key.size() != 1 || source.index(key[0]) < 0)
      throw ParseError("\"rules\": \"" + key + "\" is not a source letter");
    if (!value.is_string())
      throw ParseError("\"rules\": image of \"" + key + "\" must be a string");
    int idx = source.index(key[0]);
    images[static_cast<std::size_t>(idx)] = value.get<std::string>();
    seen[static_cast<std::size_t>(idx)] = true;
  }
  for (int i = 0; i < source.size(); ++i)
    if (!seen[static_cast<std::size_t>(i)])
      throw ParseError(std::string("\"rules\": no image for letter \"") +
                       source.letter(i) + "\"");
  return images;
}

inline nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return j;
}

}  // namespace detail

/// {"alphabet": ["A","B","C"], "rules": {"A": "BBBCCC", ...}}. Rules are
/// strings of alphabet symbols; unknown symbols and empty images are errors
/// (a substitution must not erase).
inline Substitution load_substitution(const nlohmann::json& j) {
  Alphabet alphabet = detail::alphabet_from_json(j, "alphabet");
  auto images = detail::rules_from_json(j, alphabet);
  try {
    return Substitution::from_rules(alphabet, images);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

inline Substitution load_substitution_file(const std::string& path) {
  return load_substitution(detail::load_json_file(path));
}

/// Same layout with separate "source_alphabet"/"target_alphabet" keys;
/// empty-string rules are allowed (erasing morphisms are legal).
inline Morphism load_morphism(const nlohmann::json& j) {
  Alphabet source = detail::alphabet_from_json(j, "source_alphabet");
  Alphabet target = detail::alphabet_from_json(j, "target_alphabet");
  auto images = detail::rules_from_json(j, source);
  try {
    return Morphism::from_rules(source, target, images);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

inline Morphism load_morphism_file(const std::string& path) {
  return load_morphism(detail::load_json_file(path));
}

inline nlohmann::json to_json(const SpectralReport& report) {
  nlohmann::json j;
  // exact coefficients as decimal strings, ascending degree
  std::vector<std::string> coeffs;
  for (const auto& c : report.char_poly.coeffs) coeffs.push_back(c.str());
  j["char_poly"] = coeffs;
  j["char_poly_pretty"] = poly_to_string(report.char_poly.coeffs);
  j["eigenvalues"] = nlohmann::json::array();
  for (const auto& e : report.eigenvalues) {
    nlohmann::json je;
    je["re"] = e.value.real();
    je["im"] = e.value.imag();
    je["radius"] = e.error_radius;
    je["class"] = to_string(e.modulus_class);
    je["modulus"] = e.modulus();
    je["multiplicity"] = e.multiplicity;
    if (e.exact_integer_root) je["exact_integer_root"] = e.exact_integer_root->str();
    if (e.cyclotomic_index) je["cyclotomic_index"] = *e.cyclotomic_index;
    j["eigenvalues"].push_back(je);
  }
  j["min_modulus_class"] = to_string(report.min_modulus_class);
  j["diagonalizable"] = to_string(report.diagonalizable);
  return j;
}

inline nlohmann::json to_json(const BdlVerdict& verdict) {
  nlohmann::json j;
  j["verdict"] = to_string(verdict.verdict);
  j["primitive"] = verdict.primitive;
  j["has_modulus_leq_1"] = verdict.has_modulus_leq_1;
  j["has_modulus_lt_1"] = verdict.has_modulus_lt_1;
  j["notes"] = verdict.notes;
  j["spectrum"] = to_json(verdict.spectrum);
  return j;
}

inline nlohmann::json to_json(const ScanReport& report) {
  nlohmann::json j;
  j["exact"] = report.exact;
  j["normal"] = report.normal;
  if (report.exact_normal) {
    std::vector<std::string> f;
    for (const auto& c : *report.exact_normal) f.push_back(c.str());
    j["exact_normal"] = f;
  }
  j["left"] = report.left;
  j["right"] = report.right;
  j["max_abs"] = report.max_abs;
  if (report.exact_max_abs) j["exact_max_abs"] = report.exact_max_abs->str();
  j["block_max"] = report.block_max;
  if (report.exact_block_max) {
    std::vector<std::string> b;
    for (const auto& c : *report.exact_block_max) b.push_back(c.str());
    j["exact_block_max"] = b;
  }
  j["verdict"] = to_string(report.verdict);
  if (!report.exact) j["float_error_bound"] = report.float_error_bound;
  return j;
}

}  // namespace bdlword
