#include "pigeon/circuit_code.hpp"

#include <vector>

#include "pigeon/error.hpp"

namespace pigeon {

namespace {
constexpr unsigned kAnd = 0, kOr = 1, kNot = 2, kCopy = 3;
}

CircuitCodeLayout CircuitCodeLayout::make(std::size_t n_in, std::size_t s_max) {
  require(s_max >= 1, Errc::invalid_argument, "circuit code needs at least one slot");
  require(n_in >= 1, Errc::invalid_argument, "circuit code needs at least one input");
  CircuitCodeLayout l;
  l.n_in = n_in;
  l.s_max = s_max;
  l.ref_width = ceil_log2(n_in + s_max);
  l.selector_width = ceil_log2(s_max);
  return l;
}

CircuitCode encode_circuit(const Circuit& c, std::size_t s_max) {
  require(c.num_outputs() == 1, Errc::invalid_argument, "circuit code holds single-output circuits");
  Circuit live = without_dead_gates(c);
  require(live.size() <= s_max, Errc::invalid_argument,
          "circuit has " + std::to_string(live.size()) + " live gates but the code has " +
              std::to_string(s_max) + " slots");
  const auto l = CircuitCodeLayout::make(c.num_inputs(), s_max);
  BitString out;
  auto put = [&](std::uint64_t v, std::size_t w) { out.append(BitString::from_uint(v, w)); };
  for (const Gate& g : live.gates()) {
    put(g.kind == GateKind::And ? kAnd : g.kind == GateKind::Or ? kOr : kNot, 2);
    put(g.a, l.ref_width);
    put(g.kind == GateKind::Not ? 0 : g.b, l.ref_width);
  }
  Ref target = live.outputs()[0];
  std::size_t selected = live.is_input(target) ? live.size() : target - live.num_inputs();
  // An input output needs a free slot to copy it; dead-gate removal guarantees one.
  for (std::size_t s = live.size(); s < s_max; ++s) {
    put(kCopy, 2);
    put(s == live.size() && live.is_input(target) ? target : 0, l.ref_width);
    put(0, l.ref_width);
  }
  put(selected, l.selector_width);
  return CircuitCode{s_max, std::move(out)};
}

Circuit decode_circuit(const CircuitCode& code, std::size_t n_in) {
  const auto l = CircuitCodeLayout::make(n_in, code.s_max);
  require(code.payload.size() == l.width(), Errc::invalid_argument,
          "payload width " + std::to_string(code.payload.size()) + " does not match layout width " +
              std::to_string(l.width()));
  BitReader rd(code.payload);
  Circuit c(n_in);
  std::vector<Ref> slot_wire(l.s_max);
  auto resolve = [&](std::uint64_t ref, std::size_t slot) -> Ref {
    if (ref >= n_in + slot) return 0;
    return ref < n_in ? static_cast<Ref>(ref) : slot_wire[ref - n_in];
  };
  for (std::size_t s = 0; s < l.s_max; ++s) {
    auto kind = static_cast<unsigned>(rd.take_uint(2));
    Ref a = resolve(rd.take_uint(l.ref_width), s);
    Ref b = resolve(rd.take_uint(l.ref_width), s);
    switch (kind) {
      case kAnd: slot_wire[s] = c.add_gate(GateKind::And, a, b); break;
      case kOr: slot_wire[s] = c.add_gate(GateKind::Or, a, b); break;
      case kNot: slot_wire[s] = c.add_gate(GateKind::Not, a); break;
      default: slot_wire[s] = a; break;
    }
  }
  std::uint64_t sel = rd.take_uint(l.selector_width);
  if (sel >= l.s_max) sel = l.s_max - 1;
  c.add_output(slot_wire[sel]);
  return c;
}

std::uint64_t decoded_table_word(std::uint64_t payload, const CircuitCodeLayout& l,
                                 std::span<const std::uint64_t> inputs) {
  std::uint64_t slots[64];
  const std::size_t w = l.ref_width;
  const std::uint64_t ref_mask = w == 0 ? 0 : ((std::uint64_t{1} << w) - 1);
  std::size_t shift = l.width();
  auto take = [&](std::size_t width, std::uint64_t mask) {
    shift -= width;
    return (payload >> shift) & mask;
  };
  auto wire = [&](std::uint64_t ref, std::size_t slot) -> std::uint64_t {
    if (ref >= l.n_in + slot) return inputs[0];
    return ref < l.n_in ? inputs[ref] : slots[ref - l.n_in];
  };
  for (std::size_t s = 0; s < l.s_max; ++s) {
    auto kind = take(2, 3);
    std::uint64_t a = wire(take(w, ref_mask), s);
    std::uint64_t b = wire(take(w, ref_mask), s);
    switch (kind) {
      case kAnd: slots[s] = a & b; break;
      case kOr: slots[s] = a | b; break;
      case kNot: slots[s] = ~a; break;
      default: slots[s] = a; break;
    }
  }
  std::uint64_t sel = l.selector_width == 0 ? 0 : take(l.selector_width, (std::uint64_t{1} << l.selector_width) - 1);
  if (sel >= l.s_max) sel = l.s_max - 1;
  return slots[sel];
}

}  // namespace pigeon
