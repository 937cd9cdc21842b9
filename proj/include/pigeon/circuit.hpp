#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pigeon/bits.hpp"

namespace pigeon {

enum class GateKind : std::uint8_t { And, Or, Not };

// Wire reference: values below num_inputs() name inputs, the rest name gates
// (gate g is wire num_inputs() + g).
using Ref = std::uint32_t;

struct Gate {
  GateKind kind;
  Ref a;
  Ref b;  // ignored for Not
  friend bool operator==(const Gate&, const Gate&) = default;
};

// Fan-in-2 circuit over {AND, OR, NOT}. Gates may only read inputs or earlier
// gates; there are no constant wires. Size is the number of gates.
class Circuit {
 public:
  explicit Circuit(std::size_t n_in = 0) : n_in_(n_in) {}

  Ref add_gate(GateKind kind, Ref a, Ref b = 0);
  void add_output(Ref r);
  void set_outputs(std::vector<Ref> outs);

  std::size_t num_inputs() const noexcept { return n_in_; }
  std::size_t num_outputs() const noexcept { return outputs_.size(); }
  std::size_t size() const noexcept { return gates_.size(); }
  std::size_t wire_count() const noexcept { return n_in_ + gates_.size(); }
  Ref gate_ref(std::size_t g) const noexcept { return static_cast<Ref>(n_in_ + g); }
  bool is_input(Ref r) const noexcept { return r < n_in_; }

  const std::vector<Gate>& gates() const noexcept { return gates_; }
  const std::vector<Ref>& outputs() const noexcept { return outputs_; }

  BitString eval(const BitString& input) const;

  // Evaluates 64 input patterns at once: inputs[j] holds input wire j for each
  // lane. Returns one word per output.
  std::vector<std::uint64_t> eval_words(std::span<const std::uint64_t> inputs) const;

  // Inputs and outputs packed MSB-first into integers; both widths must be <= 64.
  std::uint64_t eval_packed(std::uint64_t input) const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t n_in_;
  std::vector<Gate> gates_;
  std::vector<Ref> outputs_;
};

// Removes gates outside the cone of the outputs, keeping relative order.
Circuit without_dead_gates(const Circuit& c);

// Truth table of length N with don't-cares past N.
class TruthTable {
 public:
  TruthTable() = default;
  explicit TruthTable(BitString bits) : bits_(std::move(bits)) {}
  static TruthTable from_string(std::string_view s) { return TruthTable(BitString::from_string(s)); }

  std::size_t length() const noexcept { return bits_.size(); }
  const BitString& bits() const noexcept { return bits_; }
  bool operator[](std::size_t p) const noexcept { return bits_[p]; }
  std::string to_string() const { return bits_.to_string(); }

  friend bool operator==(const TruthTable&, const TruthTable&) = default;
  friend auto operator<=>(const TruthTable&, const TruthTable&) = default;

 private:
  BitString bits_;
};

// Number of inputs a circuit needs to address N positions. A table of length
// 1 still gets one input: with zero inputs no constant could be built.
constexpr std::size_t table_inputs(std::size_t n) { return n <= 2 ? 1 : ceil_log2(n); }

TruthTable truth_table(const Circuit& c, std::size_t n);

// Whole-domain truth table of a single-output circuit with at most 6 inputs:
// bit p of the word is the output on position p (MSB-first input order).
std::uint64_t table_word(const Circuit& c);

// Bit pattern of input j (of n_in <= 6) over the 2^n_in positions, as a word.
std::uint64_t input_word(std::size_t j, std::size_t n_in);

// Circuit text format: `circuit <n_in> <n_out>`, `gate <k> AND|OR|NOT <ref> [<ref>]`,
// `out <ref> ...`, refs spelled x<j> or g<k>.
Circuit parse_circuit(std::string_view text);
std::string to_text(const Circuit& c);

// Truth-table file: `tt <N>` then the bits.
TruthTable parse_truth_table(std::string_view text);
std::string to_text(const TruthTable& t);

}  // namespace pigeon
