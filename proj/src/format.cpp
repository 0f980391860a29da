#include "chargent/format.hpp"

#include <charconv>

namespace chargent {

std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return {buf, res.ptr};
}

}  // namespace chargent
