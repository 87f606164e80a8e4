#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace kpartite {

// Arbitrary-precision integers and rationals. All parameter arithmetic
// (densities, thresholds, subset counts) runs in these types; doubles only
// appear at the reporting boundary.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
  // Both operands are positive everywhere this is used.
  return (a + b - 1) / b;
}

}  // namespace kpartite
