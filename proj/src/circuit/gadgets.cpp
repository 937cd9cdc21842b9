#include "pigeon/gadgets.hpp"

#include "pigeon/error.hpp"

namespace pigeon {

Ref CircuitBuilder::input(std::size_t j) const {
  require(j < c_.num_inputs(), Errc::invalid_argument, "builder input out of range");
  return static_cast<Ref>(j);
}

Ref CircuitBuilder::lnot(Ref a) {
  if (neg_.size() <= a) neg_.resize(a + 1);
  if (!neg_[a]) neg_[a] = c_.add_gate(GateKind::Not, a);
  return *neg_[a];
}

Ref CircuitBuilder::lxor(Ref a, Ref b) {
  Ref o = lor(a, b);
  Ref both = land(a, b);
  return land(o, c_.add_gate(GateKind::Not, both));
}

Ref CircuitBuilder::mux2(Ref sel, Ref a, Ref b) {
  Ref left = land(lnot(sel), a);
  Ref right = land(sel, b);
  return lor(left, right);
}

Ref CircuitBuilder::zero() {
  require(c_.num_inputs() > 0, Errc::invalid_argument, "constants need at least one input wire");
  if (!zero_) zero_ = land(0, lnot(0));
  return *zero_;
}

Ref CircuitBuilder::one() {
  if (!one_) one_ = lnot(zero());
  return *one_;
}

std::vector<Ref> CircuitBuilder::embed(const Circuit& sub, std::span<const Ref> inputs) {
  require(inputs.size() == sub.num_inputs(), Errc::invalid_argument, "embed arity mismatch");
  std::vector<Ref> map(sub.wire_count());
  for (std::size_t j = 0; j < inputs.size(); ++j) map[j] = inputs[j];
  for (std::size_t g = 0; g < sub.size(); ++g) {
    const Gate& gt = sub.gates()[g];
    map[sub.gate_ref(g)] = c_.add_gate(gt.kind, map[gt.a], gt.kind == GateKind::Not ? 0 : map[gt.b]);
  }
  std::vector<Ref> outs;
  outs.reserve(sub.num_outputs());
  for (Ref r : sub.outputs()) outs.push_back(map[r]);
  return outs;
}

Circuit CircuitBuilder::finish(std::vector<Ref> outputs) && {
  c_.set_outputs(std::move(outputs));
  return std::move(c_);
}

Ref build_mux(CircuitBuilder& b, std::span<const Ref> bus, std::span<const Ref> index) {
  require(!bus.empty(), Errc::invalid_argument, "mux over an empty bus");
  const std::size_t levels = ceil_log2(bus.size());
  require(index.size() == levels, Errc::invalid_argument, "mux index width must be ceil_log2(bus size)");
  std::vector<Ref> layer(bus.begin(), bus.end());
  for (std::size_t l = 0; l < levels; ++l) {
    Ref sel = index[levels - 1 - l];
    std::vector<Ref> next;
    for (std::size_t t = 0; t < layer.size(); t += 2) {
      next.push_back(t + 1 < layer.size() ? b.mux2(sel, layer[t], layer[t + 1]) : layer[t]);
    }
    layer = std::move(next);
  }
  return layer.front();
}

std::vector<Ref> build_lr_select(CircuitBuilder& b, std::span<const Ref> bus, Ref control) {
  require(bus.size() % 2 == 0, Errc::invalid_argument, "lr_select needs an even bus");
  const std::size_t n = bus.size() / 2;
  std::vector<Ref> out;
  out.reserve(n);
  for (std::size_t t = 0; t < n; ++t) out.push_back(b.mux2(control, bus[t], bus[n + t]));
  return out;
}

Ref build_parity(CircuitBuilder& b, std::span<const Ref> xs) {
  require(!xs.empty(), Errc::invalid_argument, "parity of nothing");
  Ref acc = xs[0];
  for (std::size_t t = 1; t < xs.size(); ++t) acc = b.lxor(acc, xs[t]);
  return acc;
}

Ref build_inner_product(CircuitBuilder& b, std::span<const Ref> xs, std::span<const Ref> ys) {
  require(xs.size() == ys.size() && !xs.empty(), Errc::invalid_argument, "inner product length mismatch");
  std::vector<Ref> prods;
  for (std::size_t t = 0; t < xs.size(); ++t) prods.push_back(b.land(xs[t], ys[t]));
  return build_parity(b, prods);
}

namespace {
std::vector<Ref> wires(std::size_t from, std::size_t count) {
  std::vector<Ref> w(count);
  for (std::size_t t = 0; t < count; ++t) w[t] = static_cast<Ref>(from + t);
  return w;
}
}  // namespace

Circuit mux_gadget(std::size_t n) {
  require(n >= 1, Errc::invalid_argument, "mux needs n >= 1");
  const std::size_t idx = ceil_log2(n);
  CircuitBuilder b(n + idx);
  auto bus = wires(0, n);
  auto index = wires(n, idx);
  Ref out = build_mux(b, bus, index);
  return std::move(b).finish({out});
}

Circuit lr_select_gadget(std::size_t n) {
  require(n >= 1, Errc::invalid_argument, "lr_select needs n >= 1");
  CircuitBuilder b(2 * n + 1);
  auto bus = wires(0, 2 * n);
  auto out = build_lr_select(b, bus, static_cast<Ref>(2 * n));
  return std::move(b).finish(std::move(out));
}

Circuit parity_gadget(std::size_t n) {
  CircuitBuilder b(n);
  auto xs = wires(0, n);
  Ref out = build_parity(b, xs);
  return std::move(b).finish({out});
}

Circuit inner_product_gadget(std::size_t n) {
  CircuitBuilder b(2 * n);
  auto xs = wires(0, n);
  auto ys = wires(n, n);
  Ref out = build_inner_product(b, xs, ys);
  return std::move(b).finish({out});
}

}  // namespace pigeon
