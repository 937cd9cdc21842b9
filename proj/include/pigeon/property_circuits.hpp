#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pigeon/circuit.hpp"
#include "pigeon/forge/rigid.hpp"
#include "pigeon/matrix.hpp"

namespace pigeon {

// Gate counts of the pieces a witness circuit is assembled from. The pieces
// are synthesized separately and embedded verbatim, so total == sum of parts.
struct SizeReport {
  std::vector<std::pair<std::string, std::size_t>> parts;
  std::size_t total = 0;

  std::size_t sum() const noexcept;
  std::size_t part(std::string_view name) const;
  std::string to_text() const;
};

struct WitnessCircuit {
  Circuit circuit;
  SizeReport size;
};

// Circuit on 2 ceil_log2(n) inputs (i then j, MSB first) computing
// <row_i(L), col_j(R)> xor S[i][j] over F2. Repeated S positions cancel.
WitnessCircuit nonrigid_circuit(const Matrix& l, const Matrix& r, const std::vector<SparseEntry>& s);

struct BitProbeScheme {
  std::size_t n = 0;  // |D| = |Q| = 2^n
  std::size_t b = 0;  // memory bits
  std::size_t k = 0;  // probes
  std::vector<BitString> g;                 // 2^n rows of b bits
  std::vector<std::vector<std::size_t>> h;  // 2^n rows of k indices below b
  std::vector<BitString> z;                 // 2^k rows of 2^n bits: z[w][y]

  void validate() const;
};

bool scheme_eval(const BitProbeScheme& s, std::uint64_t x, std::uint64_t y);

// Text form: "bitprobe n b k", then the G rows, the H rows (space-separated
// indices) and the Z rows.
BitProbeScheme parse_scheme(std::string_view text);
std::string to_text(const BitProbeScheme& s);

// Circuit on 2n inputs (x then y) computing scheme_eval.
WitnessCircuit bitprobe_circuit(const BitProbeScheme& s);

}  // namespace pigeon
