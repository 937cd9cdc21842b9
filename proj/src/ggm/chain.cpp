#include <algorithm>
#include <memory>

#include "pigeon/gadgets.hpp"
#include "pigeon/ggm.hpp"

namespace pigeon {

StretchMap truncate_outputs(const StretchMap& map, std::size_t m_new) {
  require(map.in_width() < m_new && m_new <= map.out_width(), Errc::invalid_argument,
          "truncation width " + std::to_string(m_new) + " must lie in (" + std::to_string(map.in_width()) + ", " +
              std::to_string(map.out_width()) + "]");
  auto inner = std::make_shared<StretchMap>(map);
  const std::size_t drop = map.out_width() - m_new;
  StretchMap::PackedEval packed;
  if (map.packable()) packed = [inner, drop](std::uint64_t x) { return inner->eval_packed(x) >> drop; };
  StretchMap::Compiler compiler;
  if (map.has_native_circuit()) {
    compiler = [inner, m_new] {
      Circuit c = inner->compile();
      std::vector<Ref> outs(c.outputs().begin(), c.outputs().begin() + static_cast<std::ptrdiff_t>(m_new));
      c.set_outputs(std::move(outs));
      return c;
    };
  }
  return StretchMap(
      map.in_width(), m_new, map.kind(), map.description() + " truncated to " + std::to_string(m_new),
      [inner, m_new](const BitString& x) { return (*inner)(x).slice(0, m_new); }, packed, compiler);
}

BitString lift_truncated(const BitString& y, std::size_t out_width) {
  require(y.size() <= out_width, Errc::invalid_argument, "lift target is narrower than the string");
  BitString out = y;
  out.resize(out_width);
  return out;
}

StretchMap compose(const LayeredChain& chain) {
  require(!chain.layers.empty(), Errc::invalid_argument, "empty chain");
  for (std::size_t i = 1; i < chain.layers.size(); ++i)
    require(chain.layers[i - 1].out_width() == chain.layers[i].in_width(), Errc::invalid_argument,
            "chain layer " + std::to_string(i) + " does not accept the previous layer's output");
  auto layers = std::make_shared<std::vector<StretchMap>>(chain.layers);
  StretchMap::Compiler compiler;
  if (std::all_of(layers->begin(), layers->end(), [](const StretchMap& l) { return l.has_native_circuit(); })) {
    compiler = [layers] {
      CircuitBuilder b(layers->front().in_width());
      std::vector<Ref> cur;
      for (std::size_t j = 0; j < b.num_inputs(); ++j) cur.push_back(b.input(j));
      for (const auto& l : *layers) cur = b.embed(l.compile(), cur);
      return std::move(b).finish(std::move(cur));
    };
  }
  return StretchMap(chain.in_width(), chain.out_width(),
                    chain.kind == ChainKind::PadChain ? MapKind::PadChain : MapKind::Ggm,
                    "chain of " + std::to_string(layers->size()) + " layers", [layers](const BitString& x) {
                      BitString cur = x;
                      for (const auto& l : *layers) cur = l(cur);
                      return cur;
                    },
                    {}, compiler);
}

namespace {

// `blocks` side-by-side copies of the base circuit, cut to the first `out` wires.
StretchMap::Compiler layer_compiler(const std::shared_ptr<StretchMap>& base, std::size_t blocks, std::size_t out) {
  if (!base->has_native_circuit()) return {};
  return [base, blocks, out] {
    const Circuit c = base->compile();
    const std::size_t n = base->in_width();
    CircuitBuilder b(blocks * n);
    std::vector<Ref> ins(n), outs;
    for (std::size_t blk = 0; blk < blocks; ++blk) {
      for (std::size_t j = 0; j < n; ++j) ins[j] = b.input(blk * n + j);
      auto o = b.embed(c, ins);
      outs.insert(outs.end(), o.begin(), o.end());
    }
    outs.resize(out);
    return std::move(b).finish(std::move(outs));
  };
}

}  // namespace

LayeredChain pad_chain(const StretchMap& c) {
  const std::size_t n = c.in_width();
  require(n >= 1 && c.out_width() == n + 1, Errc::invalid_argument, "pad chain needs a map from n to n + 1 bits");
  auto base = std::make_shared<StretchMap>(c);
  LayeredChain chain;
  chain.kind = ChainKind::PadChain;
  chain.base = c;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t blocks = n + i;
    const std::size_t out = (n + i + 1) * n;
    chain.layers.emplace_back(blocks * n, out, MapKind::PadChain, "pad layer " + std::to_string(i),
                              [base, n, blocks, out](const BitString& x) {
                                BitString y;
                                for (std::size_t b = 0; b < blocks; ++b) y.append((*base)(x.slice(b * n, n)));
                                y.resize(out);
                                return y;
                              },
                              StretchMap::PackedEval{}, layer_compiler(base, blocks, out));
  }
  return chain;
}

}  // namespace pigeon
