#include "blockscope/rational.hpp"

#include "blockscope/errors.hpp"

#include <sstream>

namespace blockscope {

std::string rational_to_string(const Rat& r) {
  std::ostringstream os;
  os << rat_num(r);
  if (!is_integral(r)) os << '/' << rat_den(r);
  return os.str();
}

Rat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw input_error("rational with zero denominator: " + text);
    return Rat(num, den);
  } catch (const std::exception&) {
    throw input_error("malformed rational: " + text);
  }
}

long long rat_to_int64(const Rat& r) {
  if (!is_integral(r)) throw input_error("expected an integer, got " + rational_to_string(r));
  Int n = rat_num(r);
  if (n > Int(INT64_MAX) || n < Int(INT64_MIN))
    throw input_error("integer out of 64-bit range: " + rational_to_string(r));
  return static_cast<long long>(n);
}

} // namespace blockscope
