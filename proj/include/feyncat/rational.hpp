#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace feyncat {

using Int = boost::multiprecision::cpp_int;
using Coeff = boost::multiprecision::cpp_rational;

inline bool is_integral(const Coeff& c) { return denominator(c) == 1; }

// Renders "p" for integers and "p/q" otherwise (q > 0, reduced).
inline std::string coeff_to_string(const Coeff& c) {
  std::string s = numerator(c).str();
  if (!is_integral(c)) {
    s += "/";
    s += denominator(c).str();
  }
  return s;
}

inline Coeff coeff_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Coeff(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Coeff(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

}  // namespace feyncat
