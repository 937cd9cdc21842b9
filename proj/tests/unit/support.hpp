#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "pigeon/circuit.hpp"

namespace pigeon::testing {

inline Circuit random_circuit(std::mt19937_64& rng, std::size_t n_in, std::size_t gates, std::size_t n_out) {
  Circuit c(n_in);
  for (std::size_t g = 0; g < gates; ++g) {
    const auto wires = c.wire_count();
    auto pick = [&] { return static_cast<Ref>(rng() % wires); };
    switch (rng() % 3) {
      case 0: c.add_gate(GateKind::And, pick(), pick()); break;
      case 1: c.add_gate(GateKind::Or, pick(), pick()); break;
      default: c.add_gate(GateKind::Not, pick()); break;
    }
  }
  for (std::size_t o = 0; o < n_out; ++o) c.add_output(static_cast<Ref>(rng() % c.wire_count()));
  return c;
}

inline Circuit xor_circuit() {
  Circuit c(2);
  Ref o = c.add_gate(GateKind::Or, 0, 1);
  Ref a = c.add_gate(GateKind::And, 0, 1);
  Ref na = c.add_gate(GateKind::Not, a);
  c.add_output(c.add_gate(GateKind::And, o, na));
  return c;
}

inline Circuit pass_through() {
  Circuit c(1);
  c.add_output(0);
  return c;
}

inline Circuit constant_zero() {
  Circuit c(1);
  Ref n = c.add_gate(GateKind::Not, 0);
  c.add_output(c.add_gate(GateKind::And, 0, n));
  return c;
}

// Direct bit test of position p's MSB-first binary, independent of the library.
inline bool msb_bit(std::uint64_t p, std::size_t width, std::size_t j) { return (p >> (width - 1 - j)) & 1U; }

inline std::string bits_of(std::uint64_t v, std::size_t width) {
  std::string s(width, '0');
  for (std::size_t i = 0; i < width; ++i) s[i] = msb_bit(v, width, i) ? '1' : '0';
  return s;
}

}  // namespace pigeon::testing
