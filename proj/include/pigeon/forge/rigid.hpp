#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pigeon/bits.hpp"
#include "pigeon/matrix.hpp"
#include "pigeon/numeric.hpp"
#include "pigeon/stretch_map.hpp"

namespace pigeon {

// Finite field of prime-power order q <= 256. Elements are 0..q-1, read as
// base-p digit vectors (digit 0 is the constant coefficient).
class SmallField {
 public:
  explicit SmallField(unsigned q);

  unsigned order() const noexcept { return q_; }
  unsigned characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return m_; }
  // Monic modulus as base-p digits, constant first (length m + 1).
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

  std::uint16_t add(std::uint16_t a, std::uint16_t b) const { return add_[a * q_ + b]; }
  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const { return mul_[a * q_ + b]; }
  std::uint16_t neg(std::uint16_t a) const { return neg_[a]; }
  std::uint16_t sub(std::uint16_t a, std::uint16_t b) const { return add(a, neg(b)); }

 private:
  unsigned q_, p_, m_;
  std::vector<unsigned> modulus_;
  std::vector<std::uint16_t> add_, mul_, neg_;
};

bool is_prime_power(unsigned q);

struct SparseEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  std::uint16_t value = 0;
  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

struct RigidWitness {
  Matrix l;  // n x r
  Matrix r;  // r x n
  std::vector<SparseEntry> s;
};

Matrix multiply(const SmallField& f, const Matrix& a, const Matrix& b);

class RigidReduction {
 public:
  RigidReduction(std::size_t n, std::size_t rank, std::size_t s_count, unsigned q);

  std::size_t n() const noexcept { return n_; }
  std::size_t rank() const noexcept { return r_; }
  std::size_t s_count() const noexcept { return s_count_; }
  const SmallField& field() const noexcept { return field_; }
  std::size_t entry_width() const noexcept { return ceil_log2(field_.order()); }
  std::size_t index_width() const noexcept { return ceil_log2(n_); }
  std::size_t in_width() const noexcept;
  std::size_t out_width() const noexcept { return n_ * n_ * entry_width(); }

  BitString encode(const RigidWitness& w) const;
  RigidWitness decode(const BitString& payload) const;
  // L R - S; repeated positions in S accumulate.
  Matrix apply(const RigidWitness& w) const;
  BitString eval(const BitString& payload) const;

  BitString matrix_to_bits(const Matrix& m) const;
  Matrix matrix_from_bits(const BitString& s) const;  // entries clamped to q - 1

  StretchMap map() const;

 private:
  std::size_t n_, r_, s_count_;
  SmallField field_;
};

StretchMap phi_rigid(std::size_t n, std::size_t rank, std::size_t s_count, unsigned q);

// r = floor(eps n), s_count = floor(delta n^2 / ceil_log2 n).
struct RigidBudget {
  std::size_t rank = 0;
  std::size_t s_count = 0;
};
RigidBudget rigid_budget(std::size_t n, const Rational& eps, const Rational& delta);
StretchMap phi_rigid_faithful(std::size_t n, const Rational& eps, const Rational& delta, unsigned q);

}  // namespace pigeon
