#include "pigeon/weight_codec.hpp"

#include "pigeon/error.hpp"

namespace pigeon {

BitString unrank(std::size_t n, std::size_t k, const BigInt& index) {
  require(k <= n, Errc::invalid_argument, "weight exceeds length");
  BitString out(n);
  if (n == 0) return out;
  const BigInt total = binomial(n, k);
  BigInt idx = index;
  if (idx < 0) idx = 0;
  if (idx >= total) idx = total - 1;
  std::size_t left = k;
  // zeros_first = number of completions after placing a 0 at position p.
  BigInt zeros_first = binomial(n - 1, left);
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t rest = n - p - 1;
    if (left == 0) break;
    if (idx < zeros_first) {
      // binom(rest - 1, left) from binom(rest, left)
      if (rest > 0) zeros_first = zeros_first * (rest - left) / rest;
    } else {
      idx -= zeros_first;
      out.set(p, true);
      // binom(rest - 1, left - 1) from binom(rest, left)
      if (rest > 0) zeros_first = zeros_first * left / rest;
      --left;
      if (rest > 0 && left == 0) zeros_first = 1;
    }
  }
  return out;
}

BigInt rank(std::size_t n, std::size_t k, const BitString& s) {
  require(s.size() == n, Errc::invalid_argument, "rank: length mismatch");
  require(s.weight() == k, Errc::invalid_argument,
          "rank: string has weight " + std::to_string(s.weight()) + ", expected " + std::to_string(k));
  BigInt r = 0;
  std::size_t left = k;
  for (std::size_t p = 0; p < n && left > 0; ++p) {
    if (s[p]) {
      r += binomial(n - p - 1, left);
      --left;
    }
  }
  return r;
}

std::size_t sparse_max_weight(std::size_t n, const Rational& eps) {
  Rational v = Rational(n) / 2 - eps * n;
  BigInt f = floor_of(v);
  return f < 0 ? 0 : static_cast<std::size_t>(f);
}

std::size_t sparse_savings(std::size_t n, const Rational& eps) {
  return static_cast<std::size_t>(ceil_of(eps * eps * n));
}

bool chernoff_width_check(std::size_t n, const Rational& eps) {
  const std::size_t save = sparse_savings(n, eps);
  if (save > n) return false;
  return binomial(n, sparse_max_weight(n, eps)) <= pow2(n - save);
}

SparseCode::SparseCode(std::size_t n, Rational eps) : n_(n), eps_(std::move(eps)) {
  require(eps_ > 0 && eps_ < Rational(1, 2), Errc::invalid_argument, "sparse code needs 0 < eps < 1/2");
  require(n >= 1, Errc::invalid_argument, "sparse code needs n >= 1");
  max_weight_ = sparse_max_weight(n_, eps_);
  weight_width_ = ceil_log2(n_);
  const std::size_t save = sparse_savings(n_, eps_);
  require(save <= n_, Errc::small_n, "eps^2 n exceeds n");
  index_width_ = n_ - save;
  // Every weight up to the maximum must fit its index field; the largest
  // binomial among those weights is at the maximum since it is <= n/2.
  require(binomial(n_, max_weight_) <= pow2(index_width_), Errc::small_n,
          "binom(" + std::to_string(n_) + ", " + std::to_string(max_weight_) + ") does not fit in " +
              std::to_string(index_width_) + " index bits; pick a larger n");
}

BitString SparseCode::encode(const BitString& s) const {
  require(s.size() == n_, Errc::invalid_argument, "sparse encode: length mismatch");
  const std::size_t w = s.weight();
  require(w <= max_weight_, Errc::invalid_argument,
          "weight " + std::to_string(w) + " exceeds the sparse code bound " + std::to_string(max_weight_));
  BitString out = BitString::from_uint(w, weight_width_);
  out.append(from_bigint(rank(n_, w, s), index_width_));
  return out;
}

BitString SparseCode::decode(const BitString& payload) const {
  require(payload.size() == width(), Errc::invalid_argument, "sparse decode: width mismatch");
  BitReader rd(payload);
  std::size_t w = static_cast<std::size_t>(rd.take_uint(weight_width_));
  if (w > max_weight_) w = max_weight_;
  return unrank(n_, w, to_bigint(rd.take(index_width_)));
}

}  // namespace pigeon
