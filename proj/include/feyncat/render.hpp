#pragma once

// Rendering and parsing of module elements and tensor squares: json (exact
// round trip through the class keys), latex, and plain text. Ordering is the
// map order of the underlying terms, so output is deterministic.

#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "algebra.hpp"
#include "rational.hpp"

namespace feyncat {

inline std::string latex_coeff(const Coeff& c) {
  if (is_integral(c)) return numerator(c).str();
  return "\\frac{" + numerator(c).str() + "}{" + denominator(c).str() + "}";
}

inline std::string word_text(const InstanceSpec& inst, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) s += (i ? "·" : "") + inst.show(w[i]);
  return s;
}

inline std::string word_latex(const InstanceSpec& inst, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i)
    s += (i ? " \\cdot " : "") + inst.latex(w[i]);
  return s;
}

inline std::string elem_text(const InstanceSpec& inst, const Elem& x) {
  if (x.terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [w, c] : x.terms) {
    if (!first) s += " + ";
    first = false;
    if (w.empty())
      s += coeff_to_string(c);
    else
      s += (c == 1 ? "" : coeff_to_string(c) + "*") + word_text(inst, w);
  }
  return s;
}

inline std::string elem_latex(const InstanceSpec& inst, const Elem& x) {
  if (x.terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [w, c] : x.terms) {
    if (!first) s += " + ";
    first = false;
    if (w.empty())
      s += latex_coeff(c);
    else
      s += (c == 1 ? "" : latex_coeff(c) + " ") + word_latex(inst, w);
  }
  return s;
}

inline std::string tensor_text(const InstanceSpec& inst, const Tensor2& x) {
  if (x.terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [lr, c] : x.terms) {
    if (!first) s += " + ";
    first = false;
    if (c != 1) s += coeff_to_string(c) + "*";
    s += word_text(inst, lr.first) + " ⊗ " + word_text(inst, lr.second);
  }
  return s;
}

inline std::string tensor_latex(const InstanceSpec& inst, const Tensor2& x) {
  if (x.terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [lr, c] : x.terms) {
    if (!first) s += " + ";
    first = false;
    if (c != 1) s += latex_coeff(c) + " ";
    s += word_latex(inst, lr.first) + " \\otimes " + word_latex(inst, lr.second);
  }
  return s;
}

inline nlohmann::json word_to_json(const InstanceSpec& inst, const Word& w) {
  nlohmann::json a = nlohmann::json::array();
  for (const ClassKey& k : w) a.push_back(k);
  return a;
}

inline nlohmann::json elem_to_json(const InstanceSpec& inst, const Elem& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto& [w, c] : x.terms) {
    nlohmann::json t;
    t["word"] = word_to_json(inst, w);
    t["coeff"] = coeff_to_string(c);
    t["pretty"] = word_text(inst, w);
    terms.push_back(t);
  }
  nlohmann::json out;
  out["instance"] = inst.name;
  out["terms"] = terms;
  return out;
}

inline nlohmann::json tensor_to_json(const InstanceSpec& inst, const Tensor2& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto& [lr, c] : x.terms) {
    nlohmann::json t;
    t["left"] = word_to_json(inst, lr.first);
    t["right"] = word_to_json(inst, lr.second);
    t["coeff"] = coeff_to_string(c);
    t["pretty"] = word_text(inst, lr.first) + " ⊗ " + word_text(inst, lr.second);
    terms.push_back(t);
  }
  nlohmann::json out;
  out["instance"] = inst.name;
  out["terms"] = terms;
  return out;
}

// A word entry may be a class key (as emitted by the json renderer) or an
// inline expression in the instance's grammar.
inline ClassKey parse_entry(const InstanceSpec& inst, const std::string& s) {
  try {
    return inst.parse(s);
  } catch (const std::exception&) {
  }
  inst.degree_of(s);  // throws on a malformed key
  return s;
}

inline Elem elem_from_json(const InstanceSpec& inst, const nlohmann::json& j) {
  const nlohmann::json terms = j.is_array() ? j : j.at("terms");
  Elem x;
  for (const auto& t : terms) {
    Word w;
    const nlohmann::json jw = t.at("word");
    for (const auto& e : jw) w.push_back(parse_entry(inst, e.get<std::string>()));
    Coeff c = 1;
    if (t.contains("coeff")) {
      if (t.at("coeff").is_number_integer())
        c = Coeff(t.at("coeff").get<long long>());
      else
        c = coeff_from_string(t.at("coeff").get<std::string>());
    }
    add_term(x, normalize_word(inst, w), c);
  }
  return x;
}

// Input payload: a JSON element (object with "terms" or a bare array) or an
// inline generator expression.
inline Elem elem_from_input(const InstanceSpec& inst, const std::string& in) {
  std::string trimmed = in;
  size_t a = trimmed.find_first_not_of(" \t\n");
  size_t b = trimmed.find_last_not_of(" \t\n");
  if (a == std::string::npos) throw std::invalid_argument("render: empty input");
  trimmed = trimmed.substr(a, b - a + 1);
  if (trimmed.front() == '{' || trimmed.front() == '[')
    return elem_from_json(inst, nlohmann::json::parse(trimmed));
  return elem_of(inst, Word{inst.parse(trimmed)});
}

}  // namespace feyncat
