#pragma once

#include <cstddef>

#include "pigeon/bits.hpp"
#include "pigeon/numeric.hpp"

namespace pigeon {

// Lexicographic ranking of weight-k strings of length n ("0011" has rank 0).
// unrank clamps indices >= binom(n, k) to the last string.
BitString unrank(std::size_t n, std::size_t k, const BigInt& index);
BigInt rank(std::size_t n, std::size_t k, const BitString& s);

// Code for n-bit strings of weight at most floor(n/2 - eps*n): a weight field
// of ceil_log2(n) bits followed by n - ceil(eps^2 n) index bits.
class SparseCode {
 public:
  SparseCode(std::size_t n, Rational eps);

  std::size_t n() const noexcept { return n_; }
  const Rational& eps() const noexcept { return eps_; }
  std::size_t max_weight() const noexcept { return max_weight_; }
  std::size_t weight_width() const noexcept { return weight_width_; }
  std::size_t index_width() const noexcept { return index_width_; }
  std::size_t width() const noexcept { return weight_width_ + index_width_; }

  BitString encode(const BitString& s) const;
  // Total: the weight field is clamped to max_weight(), the index to its range.
  BitString decode(const BitString& payload) const;

 private:
  std::size_t n_;
  Rational eps_;
  std::size_t max_weight_;
  std::size_t weight_width_;
  std::size_t index_width_;
};

// Largest weight the sparse code admits: floor(n/2 - eps*n), at least 0.
std::size_t sparse_max_weight(std::size_t n, const Rational& eps);
// ceil(eps^2 * n), the bits a sparse code saves over the raw string.
std::size_t sparse_savings(std::size_t n, const Rational& eps);

// binom(n, floor(n/2 - eps n)) <= 2^(n - ceil(eps^2 n)), exactly.
bool chernoff_width_check(std::size_t n, const Rational& eps);

}  // namespace pigeon
