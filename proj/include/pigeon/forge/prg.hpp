#pragma once

#include <cstddef>
#include <vector>

#include "pigeon/bits.hpp"
#include "pigeon/circuit.hpp"
#include "pigeon/circuit_code.hpp"
#include "pigeon/numeric.hpp"
#include "pigeon/stretch_map.hpp"
#include "pigeon/weight_codec.hpp"

namespace pigeon {

struct PrgParams {
  std::size_t n = 0;       // string length
  std::size_t count = 0;   // |R|
  std::size_t c = 16;      // predictor size is c * n
  Rational eps;            // correction weight <= count * (1/2 - eps)

  // count = n^6, eps = 1/n^2.
  static PrgParams faithful(std::size_t n, std::size_t c = 16);
};

struct PrgWitness {
  std::vector<BitString> r_minus;  // count strings of n - 1 bits
  Circuit predictor;               // n - 1 inputs, one output, <= c * n gates
  std::size_t index = 0;           // 0-based position of the predicted bit
  BitString corrections;           // count bits
};

// Field layout of the witness encoding: R-, D, i, S in that order.
class PrgReduction {
 public:
  explicit PrgReduction(PrgParams p);

  const PrgParams& params() const noexcept { return p_; }
  std::size_t in_width() const noexcept;
  std::size_t out_width() const noexcept { return p_.count * p_.n; }
  std::size_t predictor_slots() const noexcept { return p_.c * p_.n; }
  std::size_t index_width() const noexcept { return ceil_log2(p_.n); }
  const SparseCode& sparse() const noexcept { return sparse_; }
  const CircuitCodeLayout& code_layout() const noexcept { return layout_; }

  BitString encode(const PrgWitness& w) const;
  PrgWitness decode(const BitString& payload) const;
  std::vector<BitString> apply(const PrgWitness& w) const;
  BitString eval(const BitString& payload) const;

  // The map itself; not necessarily stretching.
  StretchMap map() const;

 private:
  PrgParams p_;
  SparseCode sparse_;
  CircuitCodeLayout layout_;
};

// Encoding width computed from the layout arithmetic alone.
std::size_t prg_width_formula(const PrgParams& p);

// Refuses (SMALL_N) unless the encoding is strictly shorter than the output.
StretchMap phi_prg(const PrgParams& p);
StretchMap phi_prg(std::size_t n, std::size_t c = 16);

std::vector<BitString> split_blocks(const BitString& s, std::size_t block);
BitString concat(const std::vector<BitString>& parts);

}  // namespace pigeon
