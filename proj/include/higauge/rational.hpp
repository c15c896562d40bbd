#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace higauge {

// Exact rational scalar. GMP keeps num/den reduced with den > 0.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p/q", whitespace-free.
inline Rat parse_rat(const std::string& text) {
  try {
    Rat r(text);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::runtime_error("bad rational literal: '" + text + "'");
  }
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline double to_double(const Rat& r) { return r.get_d(); }

inline Rat factorial(unsigned n) {
  Rat r(1);
  for (unsigned i = 2; i <= n; ++i) r *= static_cast<long>(i);
  return r;
}

}  // namespace higauge
