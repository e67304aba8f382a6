#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace affsym {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline Int int_part(const Rat& r) {
  if (!is_integer(r)) throw std::runtime_error("int_part: not an integer: " + r.str());
  return numerator(r);
}

// "5", "-3/2"
inline std::string rat_str(const Rat& r) { return r.str(); }

inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

// 2^e for e possibly negative
inline Rat pow2(long e) {
  Rat r(1);
  for (long i = 0; i < (e >= 0 ? e : -e); ++i) r *= 2;
  return e >= 0 ? r : Rat(1) / r;
}

}  // namespace affsym
