#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "pigeon/bits.hpp"
#include "pigeon/circuit.hpp"

namespace pigeon {

// Fixed-width payload layout for circuits with at most s_max gates.
// Each slot: 2 kind bits (00 AND, 01 OR, 10 NOT, 11 copy of ref_a) and two
// ref fields of ref_width bits; refs address inputs, then earlier slots, and
// out-of-range refs read input 0. A trailing selector picks the output slot.
struct CircuitCodeLayout {
  std::size_t n_in = 0;
  std::size_t s_max = 0;
  std::size_t ref_width = 0;
  std::size_t selector_width = 0;

  static CircuitCodeLayout make(std::size_t n_in, std::size_t s_max);
  std::size_t slot_width() const noexcept { return 2 + 2 * ref_width; }
  std::size_t width() const noexcept { return s_max * slot_width() + selector_width; }
};

struct CircuitCode {
  std::size_t s_max = 0;
  BitString payload;
};

CircuitCode encode_circuit(const Circuit& c, std::size_t s_max);
// Total: every payload of the layout width decodes to a valid single-output circuit.
Circuit decode_circuit(const CircuitCode& code, std::size_t n_in);

// Truth table (as a word over 2^n_in <= 64 positions) of the circuit a
// payload decodes to, without materializing the circuit. `inputs` holds
// input_word(j, n_in) for each j.
std::uint64_t decoded_table_word(std::uint64_t payload, const CircuitCodeLayout& layout,
                                 std::span<const std::uint64_t> inputs);

}  // namespace pigeon
