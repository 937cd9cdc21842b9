#include <algorithm>
#include <memory>

#include "pigeon/empty_solver.hpp"
#include "pigeon/ggm.hpp"

namespace pigeon {

std::size_t ggm_depth(std::size_t circuit_size, const Rational& eps) {
  require(circuit_size >= 1, Errc::invalid_argument, "circuit size must be positive");
  require(eps > 0 && eps <= 1, Errc::invalid_argument, "eps must lie in (0, 1]");
  const std::size_t k = 2 * ceil_log2(circuit_size) * static_cast<std::size_t>(ceil_of(Rational(1) / eps));
  return std::max<std::size_t>(k, 1);
}

StretchMap pipeline_base(const StretchMap& c) {
  require_stretching(c, "pipeline instance");
  const std::size_t a = c.in_width();
  if (c.out_width() == 2 * a) return c;
  StretchMap c1 = c.out_width() == a + 1 ? c : truncate_outputs(c, a + 1);
  return compose(pad_chain(c1));
}

PipelineResult solve_empty_from_hard_tt(const StretchMap& c, const HardTableSource& source, Inverter& inverter,
                                        const PipelineOptions& options) {
  require_stretching(c, "pipeline instance");
  const std::size_t a = c.in_width();
  const bool direct = c.out_width() == 2 * a;
  std::optional<StretchMap> truncated;
  std::optional<LayeredChain> chain;
  if (!direct) {
    truncated = c.out_width() == a + 1 ? c : truncate_outputs(c, a + 1);
    chain = pad_chain(*truncated);
  }
  const StretchMap base = direct ? c : compose(*chain);

  PipelineResult res;
  res.used_pad_chain = !direct;
  if (options.k_override) {
    res.k = *options.k_override;
  } else {
    require(c.has_native_circuit(), Errc::invalid_argument,
            "the depth formula needs the instance's circuit size; this map has no circuit, so pass a depth override");
    res.k = ggm_depth(c.compile().size(), options.eps);
  }
  GgmPlan plan(base, res.k);
  res.table_length = plan.out_width();
  if (direct && c.has_native_circuit() && (a & (a - 1)) == 0)
    res.succinct_bound = ggm_succinct_size(c.compile().size(), a, res.k).total();

  TruthTable table = source(res.table_length);
  require(table.length() <= res.table_length, Errc::invalid_argument,
          "hard table has " + std::to_string(table.length()) + " bits but the tree outputs only " +
              std::to_string(res.table_length));
  BitString y_star = lift_truncated(table.bits(), res.table_length);
  if (options.verify_table) {
    require(!inverter.invert(ggm_expand(base, res.k), y_star).member(), Errc::invalid_argument,
            "the supplied table is inside the range of the expanded map, so it is not hard enough");
  }

  WalkResult tree = backward_walk(plan, y_star, inverter);
  res.tree_calls = tree.calls;
  if (direct) {
    res.solution = tree.solution;
  } else {
    WalkResult down = backward_walk(*chain, tree.solution, inverter);
    res.chain_calls = down.calls;
    res.solution = lift_truncated(down.solution, c.out_width());
  }
  require(!inverter.invert(c, res.solution).member(), Errc::solver_failure,
          "pipeline output re-checked as a member of the instance range");
  return res;
}

HardTableSource random_hard_table_source(const StretchMap& ggm_map, std::uint64_t seed, Inverter& inverter,
                                         std::size_t max_tries) {
  auto map = std::make_shared<StretchMap>(ggm_map);
  return [map, seed, &inverter, max_tries](std::size_t length) {
    require(length == map->out_width(), Errc::invalid_argument, "table length does not match the expanded map");
    Rng rng(seed);
    for (std::size_t t = 0; t < max_tries; ++t) {
      BitString y = rng.bits(length);
      if (!inverter.invert(*map, y).member()) return TruthTable(y);
    }
    fail(Errc::not_found, "no random table outside the expanded range within " + std::to_string(max_tries) + " draws");
  };
}

std::size_t extract_length(std::size_t m, std::size_t s, const Rational& eps_scale) {
  require(m >= 2 && eps_scale > 0, Errc::invalid_argument, "extraction needs M >= 2 and a positive scale");
  const Rational budget = eps_scale * eps_scale * s;
  const std::size_t log_m = ceil_log2(m);
  std::size_t n = 0;
  while (Rational((n + 1) * (n + 1) * log_m) <= budget) ++n;
  return n;
}

ExtractResult hardness_extract(const TruthTable& x, std::size_t s, Inverter& inverter, const Rational& eps_scale) {
  const std::size_t m = x.length();
  ExtractResult res;
  res.n = extract_length(m, s, eps_scale);
  require(res.n >= 8, Errc::small_n,
          "output length N = " + std::to_string(res.n) + " is below 8; raise the table length M or the eps scale");
  const std::size_t half = res.n / 2;
  HardTableMap h = compact_hard_tt(res.n, half);
  res.guarantee = h.guarantee;
  res.encoding = h.encoding;
  StretchMap base = res.n % 2 == 0 ? h.map : truncate_outputs(h.map, 2 * half);
  res.k = 1;
  while ((half << res.k) < m) ++res.k;
  GgmPlan plan(base, res.k);
  BitString y_star = lift_truncated(x.bits(), plan.out_width());
  WalkResult walk = backward_walk(plan, y_star, inverter);
  res.calls = walk.calls;
  res.table = TruthTable(lift_truncated(walk.solution, res.n));
  require(!inverter.invert(h.map, res.table.bits()).member(), Errc::solver_failure,
          "extracted table re-checked as a member of the internal range");
  return res;
}

}  // namespace pigeon
