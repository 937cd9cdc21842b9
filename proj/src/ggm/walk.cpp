#include "pigeon/ggm.hpp"

#include <memory>

namespace pigeon {

namespace {

// First `width` output bits of c; unlike truncate_outputs this need not stretch.
StretchMap prefix_map(const StretchMap& c, std::size_t width) {
  auto inner = std::make_shared<StretchMap>(c);
  const std::size_t drop = c.out_width() - width;
  StretchMap::PackedEval packed;
  if (c.packable()) packed = [inner, drop](std::uint64_t x) { return inner->eval_packed(x) >> drop; };
  StretchMap::Compiler compiler;
  if (c.has_native_circuit()) {
    compiler = [inner, width] {
      Circuit circ = inner->compile();
      std::vector<Ref> outs(circ.outputs().begin(), circ.outputs().begin() + static_cast<std::ptrdiff_t>(width));
      circ.set_outputs(std::move(outs));
      return circ;
    };
  }
  return StretchMap(
      c.in_width(), width, c.kind(), c.description() + " prefix " + std::to_string(width),
      [inner, width](const BitString& x) { return (*inner)(x).slice(0, width); }, packed, compiler);
}

}  // namespace

WalkResult backward_walk(const GgmPlan& plan, const BitString& y_star, Inverter& inverter) {
  const std::size_t n = plan.n();
  require(y_star.size() == plan.out_width(), Errc::invalid_argument,
          "target has " + std::to_string(y_star.size()) + " bits, the tree outputs " +
              std::to_string(plan.out_width()));
  WalkResult res;
  BitString level = y_star;
  for (std::size_t depth = plan.k; depth >= 1; --depth) {
    const std::size_t pairs = std::size_t{1} << (depth - 1);
    BitString below;
    for (std::size_t p = 0; p < pairs; ++p) {
      BitString block = level.slice(p * 2 * n, 2 * n);
      ++res.calls;
      auto inv = inverter.invert(plan.base, block);
      if (!inv.member()) {
        res.solution = std::move(block);
        res.level = depth;
        res.block = p;
        return res;
      }
      below.append(*inv.preimage);
    }
    level = std::move(below);
  }
  throw WalkExhausted(level);
}

WalkResult backward_walk(const LayeredChain& chain, const BitString& y_star, Inverter& inverter) {
  require(chain.kind == ChainKind::PadChain && chain.base, Errc::invalid_argument,
          "chain walk needs a pad chain with its base map");
  const StretchMap& c = *chain.base;
  const std::size_t n = c.in_width();
  require(y_star.size() == chain.out_width(), Errc::invalid_argument, "target width does not match the chain");
  WalkResult res;
  BitString level = y_star;
  for (std::size_t i = chain.layers.size(); i-- > 0;) {
    const std::size_t blocks = n + i;
    const StretchMap tail_map = prefix_map(c, n + 1 - i);
    BitString below;
    for (std::size_t b = 0; b < blocks; ++b) {
      const bool last = b + 1 == blocks;
      const std::size_t width = last ? n + 1 - i : n + 1;
      BitString block = level.slice(b * (n + 1), width);
      ++res.calls;
      Inversion inv = width == n + 1 ? inverter.invert(c, block) : inverter.invert(tail_map, block);
      if (!inv.member()) {
        res.solution = lift_truncated(block, n + 1);
        res.level = i;
        res.block = b;
        return res;
      }
      below.append(*inv.preimage);
    }
    level = std::move(below);
  }
  throw WalkExhausted(level);
}

}  // namespace pigeon
