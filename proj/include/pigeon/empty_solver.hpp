#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "pigeon/bits.hpp"
#include "pigeon/inverter.hpp"
#include "pigeon/stretch_map.hpp"

namespace pigeon {

// The single source of randomness. Bits come straight from mt19937_64 words,
// so sequences are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t next() { return gen_(); }
  bool bit() { return (gen_() >> 63) != 0; }
  BitString bits(std::size_t n);
  // Uniform in [0, bound), bound >= 1, by rejection.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 gen_;
};

struct RandomSolution {
  BitString y;
  std::size_t trials = 0;
};

// Hard cap on trials: 10 * (out - in + 1) * 64.
std::size_t randomized_trial_cap(const StretchMap& map);

// Samples uniform out-width strings until the inverter reports one outside the range.
RandomSolution solve_empty_randomized(const StretchMap& map, Inverter& inverter, std::uint64_t seed);

// Lexicographically smallest string outside the range, by scanning targets in order.
BitString smallest_non_member(const StretchMap& map, Inverter& inverter);

}  // namespace pigeon
