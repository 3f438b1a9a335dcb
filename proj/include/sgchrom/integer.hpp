#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sgchrom {

// Arbitrary-precision integers and exact rationals. cpp_rational keeps the
// canonical form (coprime, positive denominator) automatically.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace sgchrom
