#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "pigeon/bits.hpp"

namespace pigeon {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt pow2(std::size_t e);

// Parses "p/q" or an integer.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

BigInt floor_of(const Rational& r);
BigInt ceil_of(const Rational& r);

// Fixed-width MSB-first conversions between bit strings and big integers.
BigInt to_bigint(const BitString& s);
BitString from_bigint(const BigInt& v, std::size_t width);

}  // namespace pigeon
