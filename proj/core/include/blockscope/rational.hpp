#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace blockscope {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const Rat& r) { return rat_den(r) == 1; }

/// Renders as "num" for integers and "num/den" otherwise.
std::string rational_to_string(const Rat& r);

/// Parses "num" or "num/den"; throws input_error on garbage or zero denominator.
Rat parse_rational(const std::string& text);

/// Exact conversion to a machine integer; throws input_error when out of range
/// or not integral.
long long rat_to_int64(const Rat& r);

} // namespace blockscope
