#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pigeon/circuit_code.hpp"
#include "pigeon/stretch_map.hpp"

namespace pigeon {

// Slot budget of the hard-table map for tables of length N: floor(N / (2 ceil_log2 N)).
std::size_t hard_tt_s_max(std::size_t n);

// Map from circuit codes (s_max slots, ceil_log2 N inputs) to truth tables of
// length N. Every table of complexity <= s_max is in its range, so anything
// outside has complexity > s_max. Refuses with SMALL_N when the code is not
// shorter than N.
StretchMap phi_hard_tt(std::size_t n);
StretchMap phi_hard_tt(std::size_t n, std::size_t s_max);

// Gate-level circuit computing the same map (the universal decoder).
Circuit compile_hard_tt(std::size_t n, std::size_t s_max);

// A map onto N-bit tables with a prescribed input width whose non-range
// strings all have complexity > guarantee. Uses circuit codes when they fit,
// otherwise a sorted codebook of every table of complexity <= guarantee
// (codebooks only for N <= kCodebookMaxLength, whichever guarantee is larger).
struct HardTableMap {
  StretchMap map;
  std::size_t guarantee = 0;
  std::string encoding;  // "circuit-code" or "codebook"
};
inline constexpr std::size_t kCodebookMaxLength = 16;
HardTableMap compact_hard_tt(std::size_t n, std::size_t in_width);

}  // namespace pigeon
