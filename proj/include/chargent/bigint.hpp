#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace chargent {

using BigInt = boost::multiprecision::cpp_int;

/// Natural logarithm of a positive big integer.
///
/// Uses the exact bit length together with the leading 64 bits as a
/// mantissa, so the relative error is at the level of double rounding
/// regardless of magnitude. Throws DomainError for x <= 0.
double log_big(const BigInt& x);

/// Nearest double; +inf when x exceeds the double range.
double to_double(const BigInt& x);

std::string to_decimal(const BigInt& x);

}  // namespace chargent
