#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pigeon/bits.hpp"
#include "pigeon/circuit.hpp"
#include "pigeon/error.hpp"
#include "pigeon/forge/hard_tt.hpp"
#include "pigeon/inverter.hpp"
#include "pigeon/numeric.hpp"
#include "pigeon/stretch_map.hpp"

namespace pigeon {

// ------------------------------------------------------------ truncation

// Keeps the first m_new output bits. Requires in < m_new <= out.
StretchMap truncate_outputs(const StretchMap& map, std::size_t m_new);
// A non-range string of the truncated map, zero-padded to the full width, is
// outside the original range.
BitString lift_truncated(const BitString& y, std::size_t out_width);

// ------------------------------------------------------------ layered chains

enum class ChainKind { PadChain, GgmTree };

struct LayeredChain {
  std::vector<StretchMap> layers;
  ChainKind kind = ChainKind::PadChain;
  std::optional<StretchMap> base;  // the map applied blockwise in every layer

  std::size_t in_width() const { return layers.front().in_width(); }
  std::size_t out_width() const { return layers.back().out_width(); }
};

StretchMap compose(const LayeredChain& chain);

// For C : n -> n+1, layer i maps (n+i)n bits to (n+i+1)n bits by applying C to
// each n-bit block and dropping the last i output bits. Composes to n^2 -> 2n^2.
LayeredChain pad_chain(const StretchMap& c);

// ------------------------------------------------------------ GGM expansion

struct GgmPlan {
  StretchMap base;  // out = 2 * in
  std::size_t k = 1;

  GgmPlan(StretchMap base, std::size_t k);
  std::size_t n() const noexcept { return base.in_width(); }
  std::size_t out_width() const noexcept { return n() << k; }
};

// Block i of the output is C applied along the path spelled by i, MSB first,
// with 0 taking the first half and 1 the second.
StretchMap ggm_expand(const StretchMap& c, std::size_t k);
BitString ggm_eval(const StretchMap& c, std::size_t k, const BitString& x);

struct SuccinctSize {
  std::size_t constants = 0;
  std::size_t base = 0;       // |C|
  std::size_t per_level = 0;  // |C| plus the half selector
  std::size_t levels = 0;
  std::size_t mux = 0;
  std::size_t total() const noexcept { return constants + per_level * levels + mux; }
};

// Size accounting for the succinct circuit of a base with `base_size` gates on
// n inputs at depth k: constants + k (|C| + 3n + 1) + 3(n - 1) + ceil_log2 n.
SuccinctSize ggm_succinct_size(std::size_t base_size, std::size_t n, std::size_t k);

// Single-output circuit on k + log2 n inputs (block index, then position) whose
// truth table is C*(x). n must be a power of two.
Circuit ggm_succinct_circuit(const Circuit& c, std::size_t k, const BitString& x);

// ------------------------------------------------------------ backward walks

class WalkExhausted : public Error {
 public:
  explicit WalkExhausted(BitString preimage)
      : Error(Errc::walk_exhausted, "every block inverted; the target is in the range of the composed map"),
        preimage_(std::move(preimage)) {}
  const BitString& preimage() const noexcept { return preimage_; }

 private:
  BitString preimage_;
};

struct WalkResult {
  BitString solution;       // outside the range of the base map
  std::size_t calls = 0;    // inverter calls made
  std::size_t level = 0;    // layer (chain) or depth (tree) where it was found
  std::size_t block = 0;    // block index within that level
};

WalkResult backward_walk(const GgmPlan& plan, const BitString& y_star, Inverter& inverter);
WalkResult backward_walk(const LayeredChain& chain, const BitString& y_star, Inverter& inverter);

// ------------------------------------------------------------ pipeline

// k = 2 ceil_log2(|C|) ceil(1 / eps), raised to 1 for single-gate circuits.
std::size_t ggm_depth(std::size_t circuit_size, const Rational& eps);

using HardTableSource = std::function<TruthTable(std::size_t length)>;

struct PipelineOptions {
  Rational eps = Rational(1, 2);
  std::optional<std::size_t> k_override;
  bool verify_table = true;  // check the hard table is outside range(C*) before walking
};

struct PipelineResult {
  BitString solution;
  std::size_t k = 0;
  std::size_t table_length = 0;
  std::size_t tree_calls = 0;
  std::size_t chain_calls = 0;
  bool used_pad_chain = false;
  std::optional<std::size_t> succinct_bound;  // measured size bound when C has a circuit
};

PipelineResult solve_empty_from_hard_tt(const StretchMap& c, const HardTableSource& source, Inverter& inverter,
                                        const PipelineOptions& options = {});

// The GGM base the pipeline uses for C: C itself when out = 2 in, otherwise the
// pad chain over C truncated to in + 1 outputs.
StretchMap pipeline_base(const StretchMap& c);

// Table source that draws seeded random tables until one lies outside range(C*)
// according to the given inverter.
HardTableSource random_hard_table_source(const StretchMap& ggm_map, std::uint64_t seed, Inverter& inverter,
                                         std::size_t max_tries = 64);

// ------------------------------------------------------------ hardness extraction

struct ExtractResult {
  TruthTable table;            // length N
  std::size_t n = 0;           // N
  std::size_t k = 0;
  std::size_t guarantee = 0;   // complexity lower bound certified by the internal map
  std::string encoding;
  std::size_t calls = 0;
};

// Largest N with N^2 ceil_log2(M) <= eps_scale^2 s.
std::size_t extract_length(std::size_t m, std::size_t s, const Rational& eps_scale);

ExtractResult hardness_extract(const TruthTable& x, std::size_t s, Inverter& inverter, const Rational& eps_scale);

}  // namespace pigeon
