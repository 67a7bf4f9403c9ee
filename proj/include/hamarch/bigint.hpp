#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hamarch {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt binomial(int n, int k);

}  // namespace hamarch
