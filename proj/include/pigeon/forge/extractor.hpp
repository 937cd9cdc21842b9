#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pigeon/bits.hpp"
#include "pigeon/gf2m.hpp"
#include "pigeon/numeric.hpp"
#include "pigeon/stretch_map.hpp"
#include "pigeon/weight_codec.hpp"

namespace pigeon {

using Elem = FieldCtx::Elem;

struct ExtractorParams {
  std::size_t n = 0;  // source length; the field is GF(2^(2n))
  Rational eps;
  std::size_t d = 0;
  bool faithful = true;  // false when d was overridden

  // d = ceil(4 / eps^2) unless overridden.
  static ExtractorParams make(std::size_t n, const Rational& eps, std::optional<std::size_t> d_override = {});
  std::size_t set_size() const noexcept { return d * n; }
  std::size_t points() const noexcept { return d * d * n * n; }
};

std::size_t extractor_d(const Rational& eps);

struct ExtractorWitness {
  std::vector<Elem> x_set;  // n-bit strings, sorted and distinct
  std::vector<Elem> y_set;
  bool b = false;
  BitString corrections;     // one bit per point
  std::vector<Elem> betas;   // (2n - 1)-bit prefixes, one per point
};

class ExtractorReduction {
 public:
  explicit ExtractorReduction(ExtractorParams p);

  const ExtractorParams& params() const noexcept { return p_; }
  const FieldCtx& field() const noexcept { return field_; }
  const SparseCode& sparse() const noexcept { return sparse_; }
  std::size_t in_width() const noexcept;
  std::size_t out_width() const noexcept { return p_.points() * 2 * p_.n; }

  // Lex-ordered points x || y of X x Y.
  std::vector<Elem> points(const ExtractorWitness& w) const;

  BitString encode(const ExtractorWitness& w) const;
  ExtractorWitness decode(const BitString& payload) const;
  // Interpolated coefficients, constant term first.
  std::vector<Elem> apply(const ExtractorWitness& w) const;
  BitString eval(const BitString& payload) const;

  // Witness whose interpolation reproduces `alphas` on the given sets, using
  // b = 0 and S_i = g(r_i). Throws when S is too heavy for the sparse code.
  ExtractorWitness witness_for(std::span<const Elem> alphas, std::vector<Elem> x_set, std::vector<Elem> y_set,
                               bool b) const;

  StretchMap map() const;

 private:
  ExtractorParams p_;
  FieldCtx field_;
  SparseCode sparse_;
};

// Width bound 2d^2n^3 + 2dn^2 - ceil(eps^2 d^2 n^2) + 2 ceil_log2(2dn) + 1, exactly.
BigInt extractor_width_bound(std::size_t n, const Rational& eps, std::size_t d);

StretchMap phi_extractor(std::size_t n, const Rational& eps, std::optional<std::size_t> d_override = {});

// Last (least significant) bit of the polynomial at x.
bool extractor_eval(const FieldCtx& f, std::span<const Elem> alphas, Elem x);

BitString alphas_to_bits(std::span<const Elem> alphas, std::size_t elem_width);
std::vector<Elem> alphas_from_bits(const BitString& s, std::size_t elem_width);

}  // namespace pigeon
