#include <memory>

#include "pigeon/gadgets.hpp"
#include "pigeon/ggm.hpp"

namespace pigeon {

GgmPlan::GgmPlan(StretchMap b, std::size_t depth) : base(std::move(b)), k(depth) {
  require(base.in_width() >= 1 && base.out_width() == 2 * base.in_width(), Errc::invalid_argument,
          "GGM expansion needs a length-doubling base map");
  require(k >= 1, Errc::invalid_argument, "GGM depth must be at least 1");
  require(k < 40, Errc::budget, "GGM depth " + std::to_string(k) + " gives an output too long to materialize");
}

BitString ggm_eval(const StretchMap& c, std::size_t k, const BitString& x) {
  const std::size_t n = c.in_width();
  std::vector<BitString> level{x};
  for (std::size_t d = 0; d < k; ++d) {
    std::vector<BitString> next;
    next.reserve(level.size() * 2);
    for (const auto& block : level) {
      BitString y = c(block);
      next.push_back(y.slice(0, n));
      next.push_back(y.slice(n, n));
    }
    level = std::move(next);
  }
  BitString out;
  for (const auto& b : level) out.append(b);
  return out;
}

namespace {

// One copy of the base circuit per tree node, 2^k - 1 in all.
Circuit ggm_tree_circuit(const StretchMap& base, std::size_t k) {
  const Circuit c = base.compile();
  const std::size_t n = base.in_width();
  CircuitBuilder b(n);
  std::vector<Ref> level;
  for (std::size_t j = 0; j < n; ++j) level.push_back(b.input(j));
  for (std::size_t d = 0; d < k; ++d) {
    std::vector<Ref> next;
    next.reserve(level.size() * 2);
    for (std::size_t off = 0; off < level.size(); off += n) {
      auto outs = b.embed(c, std::span<const Ref>(level).subspan(off, n));
      next.insert(next.end(), outs.begin(), outs.end());
    }
    level = std::move(next);
  }
  return std::move(b).finish(std::move(level));
}

}  // namespace

StretchMap ggm_expand(const StretchMap& c, std::size_t k) {
  GgmPlan plan(c, k);
  auto base = std::make_shared<StretchMap>(c);
  return StretchMap(plan.n(), plan.out_width(), MapKind::Ggm,
                    "ggm depth " + std::to_string(k) + " over " + c.description(),
                    [base, k](const BitString& x) { return ggm_eval(*base, k, x); }, {},
                    base->has_native_circuit() ? StretchMap::Compiler([base, k] { return ggm_tree_circuit(*base, k); })
                                               : StretchMap::Compiler{});
}

SuccinctSize ggm_succinct_size(std::size_t base_size, std::size_t n, std::size_t k) {
  SuccinctSize s;
  s.constants = 3;  // NOT, AND for zero; NOT of zero for one
  s.base = base_size;
  s.per_level = base_size + 3 * n + 1;
  s.levels = k;
  s.mux = n <= 1 ? 0 : 3 * (n - 1) + ceil_log2(n);
  return s;
}

Circuit ggm_succinct_circuit(const Circuit& c, std::size_t k, const BitString& x) {
  const std::size_t n = x.size();
  require(n >= 1 && (n & (n - 1)) == 0, Errc::invalid_argument,
          "succinct GGM circuit needs a power-of-two block length, got " + std::to_string(n));
  require(c.num_inputs() == n && c.num_outputs() == 2 * n, Errc::invalid_argument,
          "base circuit must map n bits to 2n bits");
  require(k >= 1, Errc::invalid_argument, "GGM depth must be at least 1");
  const std::size_t pos_bits = ceil_log2(n);
  CircuitBuilder b(k + pos_bits);
  std::vector<Ref> cur(n);
  for (std::size_t i = 0; i < n; ++i) cur[i] = x[i] ? b.one() : b.zero();
  for (std::size_t d = 0; d < k; ++d) {
    std::vector<Ref> halves = b.embed(c, cur);
    cur = build_lr_select(b, halves, b.input(d));
  }
  std::vector<Ref> pos;
  for (std::size_t j = 0; j < pos_bits; ++j) pos.push_back(b.input(k + j));
  return std::move(b).finish({build_mux(b, cur, pos)});
}

}  // namespace pigeon
