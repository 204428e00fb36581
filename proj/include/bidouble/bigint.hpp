#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bidouble {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& x) { return x.str(); }

/// Parses an optionally signed decimal string; throws InvalidArgument.
BigInt parse_decimal(const std::string& text);

}  // namespace bidouble
