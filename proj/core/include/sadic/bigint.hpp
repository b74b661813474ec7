#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sadic {

// Image lengths of composed morphisms grow doubly exponentially in the
// rank-2 example, so every length and matrix entry is arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Clamp to [0, 2^62]; callers use it where "huge" only needs to compare as huge.
std::uint64_t saturate_u64(const BigInt& v);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

}  // namespace sadic
