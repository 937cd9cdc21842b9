#include "pigeon/numeric.hpp"

#include <charconv>

#include "pigeon/error.hpp"

namespace pigeon {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt pow2(std::size_t e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

namespace {
BigInt parse_int(std::string_view t) {
  require(!t.empty(), Errc::parse_error, "empty number");
  bool neg = t.front() == '-';
  if (neg) t.remove_prefix(1);
  require(!t.empty(), Errc::parse_error, "empty number");
  BigInt v = 0;
  for (char ch : t) {
    require(ch >= '0' && ch <= '9', Errc::parse_error, "not a number: " + std::string(t));
    v = v * 10 + (ch - '0');
  }
  return neg ? BigInt(-v) : v;
}
}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt den = parse_int(text.substr(slash + 1));
  require(den != 0, Errc::parse_error, "zero denominator in " + std::string(text));
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::string to_string(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

BigInt floor_of(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  BigInt n = numerator(r), d = denominator(r);
  BigInt q = n / d;  // truncates toward zero
  if (n % d != 0 && n < 0) q -= 1;
  return q;
}

BigInt ceil_of(const Rational& r) { return -floor_of(-r); }

BigInt to_bigint(const BitString& s) {
  BigInt v = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    v <<= 1;
    if (s[i]) v |= 1;
  }
  return v;
}

BitString from_bigint(const BigInt& v, std::size_t width) {
  BitString s(width);
  for (std::size_t i = 0; i < width; ++i) s.set(i, boost::multiprecision::bit_test(v, width - 1 - i));
  return s;
}

}  // namespace pigeon
