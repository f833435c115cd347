#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ammroot {

/// Universal scalar for moduli, exponents, characteristics and coefficients.
/// Arithmetic is exact at any size; values are nonnegative by contract.
using Natural = boost::multiprecision::cpp_int;

/// Arbitrary-precision signed integer. Negative values appear only in the
/// Bezout cofactors returned by ext_gcd.
using SignedInt = boost::multiprecision::cpp_int;

}  // namespace ammroot
