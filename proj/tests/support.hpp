#ifndef POLYFIB_TESTS_SUPPORT_HPP
#define POLYFIB_TESTS_SUPPORT_HPP

#include <string>

#include "polyfib/real.hpp"

namespace polyfib::testing {

inline Real parse(const std::string& text, Bits prec) { return Real::from_string(text, prec); }

// log2 of |a - b| / max(|a|, |b|); absolute when both are tiny.
inline double log2_rel(const Real& a, const Real& b) {
  Real diff = abs(a - b);
  if (diff.is_zero()) return -1e9;
  Real scale = max(abs(a), abs(b));
  if (scale < Real::exp2i(-20, 64)) return log2_abs(diff);
  return log2_abs(diff) - log2_abs(scale);
}

inline double log2_rel(const Complex& a, const Complex& b) {
  Real diff = abs(a - b);
  if (diff.is_zero()) return -1e9;
  Real scale = max(abs(a), abs(b));
  if (scale < Real::exp2i(-20, 64)) return log2_abs(diff);
  return log2_abs(diff) - log2_abs(scale);
}

}  // namespace polyfib::testing

#endif
