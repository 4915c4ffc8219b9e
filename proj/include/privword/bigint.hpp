#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace privword {

using BigInt = boost::multiprecision::cpp_int;

/// Plain decimal digits, never scientific notation.
std::string to_decimal(const BigInt& v);

/// Natural log of a positive integer from its bit length and leading 64 bits.
/// Returns -inf for zero.
double log_bigint(const BigInt& v);

BigInt big_pow(unsigned base, std::size_t exponent);

}  // namespace privword
