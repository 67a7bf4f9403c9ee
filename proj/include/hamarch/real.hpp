#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include "hamarch/bigint.hpp"

namespace hamarch {

/// Arbitrary-precision real. Precision is set globally in significant
/// decimal digits (default 64) and applies to subsequently created values.
using Real = boost::multiprecision::mpfr_float;

inline void set_real_precision(unsigned digits) {
  Real::default_precision(digits);
}

inline unsigned real_precision() { return Real::default_precision(); }

/// Exact conversion of a rational to the current working precision.
inline Real to_real(const BigRational& q) {
  return Real(boost::multiprecision::numerator(q)) /
         Real(boost::multiprecision::denominator(q));
}

inline Real to_real(const BigInt& n) { return Real(n); }

struct RealPrecisionGuard {
  unsigned saved;
  explicit RealPrecisionGuard(unsigned digits) : saved(real_precision()) {
    set_real_precision(digits);
  }
  ~RealPrecisionGuard() { set_real_precision(saved); }
};

}  // namespace hamarch
