#include "chargent/bigint.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>

#include "chargent/errors.hpp"

namespace chargent {

double log_big(const BigInt& x) {
  if (x <= 0) throw DomainError("log of a non-positive integer");
  const unsigned bits = boost::multiprecision::msb(x) + 1;
  if (bits <= 64) return std::log(static_cast<double>(x.convert_to<std::uint64_t>()));
  const unsigned shift = bits - 64;
  const BigInt top = x >> shift;
  return std::log(static_cast<double>(top.convert_to<std::uint64_t>())) +
         static_cast<double>(shift) * std::numbers::ln2;
}

double to_double(const BigInt& x) { return x.convert_to<double>(); }

std::string to_decimal(const BigInt& x) { return x.str(); }

}  // namespace chargent
