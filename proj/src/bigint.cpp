#include "privword/bigint.hpp"

#include <cmath>
#include <limits>

#include "privword/errors.hpp"

namespace privword {

std::string to_decimal(const BigInt& v) { return v.str(); }

double log_bigint(const BigInt& v) {
  if (v < 0) throw InvalidArgument("log of a negative integer");
  if (v == 0) return -std::numeric_limits<double>::infinity();
  const std::size_t bits = boost::multiprecision::msb(v) + 1;
  if (bits <= 64) return std::log(static_cast<double>(static_cast<std::uint64_t>(v)));
  const std::size_t shift = bits - 64;
  const auto lead = static_cast<std::uint64_t>(v >> shift);
  return std::log(static_cast<double>(lead)) + static_cast<double>(shift) * std::log(2.0);
}

BigInt big_pow(unsigned base, std::size_t exponent) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

}  // namespace privword
