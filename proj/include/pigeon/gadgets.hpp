#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pigeon/circuit.hpp"

namespace pigeon {

// Incremental circuit construction with cached constants and shared negations.
class CircuitBuilder {
 public:
  explicit CircuitBuilder(std::size_t n_in) : c_(n_in) {}

  Ref input(std::size_t j) const;
  std::size_t num_inputs() const noexcept { return c_.num_inputs(); }
  std::size_t size() const noexcept { return c_.size(); }

  Ref land(Ref a, Ref b) { return c_.add_gate(GateKind::And, a, b); }
  Ref lor(Ref a, Ref b) { return c_.add_gate(GateKind::Or, a, b); }
  Ref lnot(Ref a);                 // cached per wire
  Ref lxor(Ref a, Ref b);          // (a | b) & !(a & b), four gates
  Ref mux2(Ref sel, Ref a, Ref b); // sel ? b : a, three gates plus a cached NOT

  // x & !x and its negation, built from input 0 on first use.
  Ref zero();
  Ref one();

  // Copies `sub` into this circuit, wiring its inputs to `inputs`; returns its outputs.
  std::vector<Ref> embed(const Circuit& sub, std::span<const Ref> inputs);

  Circuit finish(std::vector<Ref> outputs) &&;

 private:
  Circuit c_;
  std::vector<std::optional<Ref>> neg_;
  std::optional<Ref> zero_, one_;
};

// Selects bus[index] (index MSB-first, ceil_log2(bus.size()) bits); indices
// past the bus end select an unspecified bus bit.
Ref build_mux(CircuitBuilder& b, std::span<const Ref> bus, std::span<const Ref> index);
// First half of bus when control = 0, second half when control = 1.
std::vector<Ref> build_lr_select(CircuitBuilder& b, std::span<const Ref> bus, Ref control);
Ref build_parity(CircuitBuilder& b, std::span<const Ref> xs);
Ref build_inner_product(CircuitBuilder& b, std::span<const Ref> xs, std::span<const Ref> ys);

// Standalone fragments. Input orders: mux = bus then index; lr_select = bus
// then control; inner product = xs then ys.
Circuit mux_gadget(std::size_t n);
Circuit lr_select_gadget(std::size_t n);
Circuit parity_gadget(std::size_t n);
Circuit inner_product_gadget(std::size_t n);

// Measured size constants (gates per bus bit), asserted in the tests up to n = 64.
inline constexpr std::size_t kMuxGatesPerBit = 4;        // mux: 3(n-1) + ceil_log2(n) <= 4n
inline constexpr std::size_t kLrSelectGatesPerBit = 4;   // lr_select: 3n + 1 <= 4n
inline constexpr std::size_t kParityGatesPerBit = 4;     // parity: 4(n-1)
inline constexpr std::size_t kInnerProductGatesPerBit = 5;  // n + 4(n-1)

}  // namespace pigeon
