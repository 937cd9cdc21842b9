#include <gtest/gtest.h>

#include <random>
#include <set>

#include "pigeon/complexity.hpp"
#include "pigeon/empty_solver.hpp"
#include "pigeon/ggm.hpp"
#include "pigeon/inverter.hpp"
#include "support.hpp"

using namespace pigeon;
using namespace pigeon::testing;

namespace {

BitString B(const char* s) { return BitString::from_string(s); }

Circuit duplicate_circuit(std::size_t n) {
  Circuit c(n);
  std::vector<Ref> outs;
  for (int rep = 0; rep < 2; ++rep)
    for (std::size_t j = 0; j < n; ++j) outs.push_back(static_cast<Ref>(j));
  c.set_outputs(outs);
  return c;
}

// C(ab) = (b a)(not a, b)
Circuit swap_fixture() {
  Circuit c(2);
  Ref na = c.add_gate(GateKind::Not, 0);
  c.set_outputs({1, 0, na, 1});
  return c;
}

// x -> x || g(x): injective, so in-range targets have a unique walk.
Circuit injective_base(std::mt19937_64& rng, std::size_t n, std::size_t out) {
  Circuit g = random_circuit(rng, n, 4 + rng() % 12, out - n);
  std::vector<Ref> outs;
  for (std::size_t j = 0; j < n; ++j) outs.push_back(static_cast<Ref>(j));
  for (Ref r : g.outputs()) outs.push_back(r);
  g.set_outputs(outs);
  return g;
}

bool in_range(const StretchMap& m, const BitString& y) { return invert_brute(m, y).member(); }

Circuit random_base(std::mt19937_64& rng, std::size_t n, std::size_t out) {
  return random_circuit(rng, n, 4 + rng() % 26, out);
}

}  // namespace

TEST(Truncate, Examples) {
  auto dup = StretchMap::from_circuit(duplicate_circuit(1));
  auto t = truncate_outputs(dup, 2);
  for (const char* x : {"0", "1"}) EXPECT_EQ(t(B(x)), dup(B(x)));

  std::mt19937_64 rng(4);
  auto m = StretchMap::from_circuit(random_circuit(rng, 3, 12, 6));
  auto same = truncate_outputs(m, 6);
  for (std::uint64_t x = 0; x < 8; ++x) EXPECT_EQ(same.eval_packed(x), m.eval_packed(x));
  EXPECT_THROW(truncate_outputs(m, 3), Error);
  EXPECT_THROW(truncate_outputs(m, 7), Error);

  auto four = truncate_outputs(m, 4);
  EXPECT_TRUE(four.has_native_circuit());
  for (std::uint64_t y = 0; y < 16; ++y) {
    BitString s = BitString::from_uint(y, 4);
    if (in_range(four, s)) continue;
    for (std::uint64_t tail = 0; tail < 4; ++tail) {
      EXPECT_FALSE(in_range(m, s + BitString::from_uint(tail, 2)));
    }
    EXPECT_EQ(lift_truncated(s, 6), s + B("00"));
  }
  Circuit compiled = four.compile();
  for (std::uint64_t x = 0; x < 8; ++x) EXPECT_EQ(compiled.eval_packed(x), four.eval_packed(x));
}

TEST(PadChain, WidthsAndComposition) {
  std::mt19937_64 rng(6);
  Circuit c = random_circuit(rng, 3, 10, 4);
  auto base = StretchMap::from_circuit(c);
  auto chain = pad_chain(base);
  ASSERT_EQ(chain.layers.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(chain.layers[i].in_width(), (3 + i) * 3);
    EXPECT_EQ(chain.layers[i].out_width(), (3 + i + 1) * 3);
  }
  auto full = compose(chain);
  EXPECT_EQ(full.in_width(), 9u);
  EXPECT_EQ(full.out_width(), 18u);

  // Hand composition: apply C blockwise, cut the tail, repeat.
  for (std::uint64_t x = 0; x < 512; x += 37) {
    std::string cur = BitString::from_uint(x, 9).to_string();
    for (std::size_t i = 0; i < 3; ++i) {
      std::string next;
      for (std::size_t b = 0; b < cur.size() / 3; ++b)
        next += bits_of(c.eval_packed(std::stoull(cur.substr(3 * b, 3), nullptr, 2)), 4);
      cur = next.substr(0, next.size() - i);
    }
    EXPECT_EQ(full(BitString::from_uint(x, 9)).to_string(), cur);
  }
  EXPECT_THROW(pad_chain(StretchMap::from_circuit(duplicate_circuit(2))), Error);
}

TEST(GgmExpand, Fixtures) {
  auto dup = StretchMap::from_circuit(duplicate_circuit(3));
  auto e = ggm_expand(dup, 3);
  EXPECT_EQ(e.out_width(), 24u);
  EXPECT_EQ(e(B("101")).to_string(), std::string("101101101101101101101101"));

  auto swap = StretchMap::from_circuit(swap_fixture());
  EXPECT_EQ(ggm_expand(swap, 2)(B("10")), B("10110010"));
  EXPECT_EQ(ggm_expand(swap, 1)(B("10")), B("0100"));
  EXPECT_THROW(ggm_expand(swap, 0), Error);
  std::mt19937_64 rng(1);
  EXPECT_THROW(ggm_expand(StretchMap::from_circuit(random_circuit(rng, 2, 3, 3)), 1), Error);
}

TEST(GgmSuccinct, TableEqualsExpansion) {
  std::mt19937_64 rng(12);
  auto dup = duplicate_circuit(4);
  for (std::uint64_t x = 0; x < 16; ++x) {
    BitString xs = BitString::from_uint(x, 4);
    Circuit s = ggm_succinct_circuit(dup, 3, xs);
    EXPECT_EQ(truth_table(s, 32).bits(), ggm_eval(StretchMap::from_circuit(dup), 3, xs));
  }
  for (int t = 0; t < 10; ++t) {
    Circuit c = random_base(rng, 4, 8);
    auto map = StretchMap::from_circuit(c);
    for (std::size_t k = 1; k <= 3; ++k) {
      for (std::uint64_t x = 0; x < 16; ++x) {
        BitString xs = BitString::from_uint(x, 4);
        Circuit s = ggm_succinct_circuit(c, k, xs);
        ASSERT_EQ(truth_table(s, 4u << k).bits(), ggm_eval(map, k, xs));
        ASSERT_LE(s.size(), ggm_succinct_size(c.size(), 4, k).total());
      }
    }
  }
  Circuit two = random_base(rng, 2, 4);
  EXPECT_LE(ggm_succinct_circuit(two, 1, B("01")).size(), 3 + two.size() + 7 + 4);
  EXPECT_GE(ggm_succinct_circuit(two, 1, B("01")).size(), two.size() + 7 + 4);
  EXPECT_THROW(ggm_succinct_circuit(random_base(rng, 3, 6), 1, B("010")), Error);
}

TEST(GgmWalk, DuplicateBase) {
  auto dup = StretchMap::from_circuit(duplicate_circuit(2));
  GgmPlan plan(dup, 2);
  BruteInverter inv;
  auto res = backward_walk(plan, B("01011011"), inv);
  EXPECT_EQ(res.solution, B("1011"));
  EXPECT_EQ(res.calls, 2u);
  EXPECT_FALSE(in_range(dup, res.solution));
}

TEST(GgmWalk, RandomTargetsWalkToSolutions) {
  std::mt19937_64 rng(31);
  BruteInverter inv;
  int walks = 0;
  while (walks < 200) {
    auto base = StretchMap::from_circuit(random_base(rng, 4, 8));
    GgmPlan plan(base, 3);
    auto expanded = ggm_expand(base, 3);
    for (int t = 0; t < 20; ++t) {
      BitString y(32);
      for (std::size_t i = 0; i < 32; ++i) y.set(i, rng() & 1U);
      if (in_range(expanded, y)) continue;
      inv.reset_calls();
      auto res = backward_walk(plan, y, inv);
      ASSERT_FALSE(in_range(base, res.solution));
      ASSERT_LE(inv.calls(), 8u);
      ASSERT_EQ(res.calls, inv.calls());
      ++walks;
    }
  }
}

TEST(GgmWalk, InRangeTargetExhausts) {
  std::mt19937_64 rng(2);
  auto base = StretchMap::from_circuit(injective_base(rng, 4, 8));
  auto expanded = ggm_expand(base, 3);
  BruteInverter inv;
  for (std::uint64_t x : {0u, 5u, 15u}) {
    BitString y = expanded(BitString::from_uint(x, 4));
    try {
      backward_walk(GgmPlan(base, 3), y, inv);
      ADD_FAILURE() << "walk should exhaust";
    } catch (const WalkExhausted& e) {
      EXPECT_EQ(expanded(e.preimage()), y);
      EXPECT_EQ(e.code(), Errc::walk_exhausted);
    }
  }
}

TEST(ChainWalk, RandomTargets) {
  std::mt19937_64 rng(8);
  BruteInverter inv;
  int walks = 0;
  for (int round = 0; walks < 50; ++round) {
    auto base = StretchMap::from_circuit(random_circuit(rng, 3, 8, 4));
    auto chain = pad_chain(base);
    auto full = compose(chain);
    BitString y(18);
    for (std::size_t i = 0; i < 18; ++i) y.set(i, rng() & 1U);
    if (in_range(full, y)) continue;
    inv.reset_calls();
    auto res = backward_walk(chain, y, inv);
    ASSERT_FALSE(in_range(base, res.solution));
    ASSERT_LE(inv.calls(), 12u);
    ++walks;
  }
  auto base = StretchMap::from_circuit(injective_base(rng, 3, 4));
  auto chain = pad_chain(base);
  BitString y = compose(chain)(B("110010011"));
  EXPECT_THROW(backward_walk(chain, y, inv), WalkExhausted);
}

TEST(Pipeline, DepthFormula) {
  EXPECT_EQ(ggm_depth(30, Rational(1, 2)), 20u);
  EXPECT_EQ(ggm_depth(32, Rational(1, 3)), 30u);
  EXPECT_EQ(ggm_depth(33, Rational(2, 3)), 24u);
  EXPECT_EQ(ggm_depth(1, Rational(1, 2)), 1u);
}

TEST(Pipeline, DuplicateInstance) {
  auto dup = StretchMap::from_circuit(duplicate_circuit(2));
  BruteInverter inv;
  PipelineOptions opt;
  opt.k_override = 2;
  auto res = solve_empty_from_hard_tt(dup, [](std::size_t) { return TruthTable::from_string("00011011"); }, inv, opt);
  EXPECT_FALSE(res.used_pad_chain);
  EXPECT_EQ(res.table_length, 8u);
  EXPECT_FALSE(in_range(dup, res.solution));
  ASSERT_TRUE(res.succinct_bound.has_value());
}

TEST(Pipeline, PadChainInstances) {
  std::mt19937_64 rng(41);
  BruteInverter inv;
  const std::size_t widths[] = {4, 5, 7, 4, 5, 7};
  for (int t = 0; t < 6; ++t) {
    auto c = StretchMap::from_circuit(random_circuit(rng, 3, 10, widths[t]));
    auto base = pipeline_base(c);
    ASSERT_EQ(base.in_width(), 9u);
    PipelineOptions opt;
    opt.k_override = 2;
    auto res = solve_empty_from_hard_tt(c, random_hard_table_source(ggm_expand(base, 2), 100 + t, inv), inv, opt);
    EXPECT_TRUE(res.used_pad_chain);
    EXPECT_EQ(res.table_length, 36u);
    EXPECT_EQ(res.solution.size(), c.out_width());
    EXPECT_FALSE(in_range(c, res.solution));
    EXPECT_LE(res.tree_calls, 4u);
    EXPECT_LE(res.chain_calls, 12u);
  }
}

TEST(Pipeline, RejectsEasyTables) {
  auto dup = StretchMap::from_circuit(duplicate_circuit(2));
  BruteInverter inv;
  PipelineOptions opt;
  opt.k_override = 2;
  auto easy = [](std::size_t) { return TruthTable::from_string("01010101"); };
  EXPECT_THROW(solve_empty_from_hard_tt(dup, easy, inv, opt), Error);
  opt.verify_table = false;
  EXPECT_THROW(solve_empty_from_hard_tt(dup, easy, inv, opt), WalkExhausted);
}

TEST(Extract, LengthFormula) {
  EXPECT_EQ(extract_length(32, 5, Rational(8)), 8u);
  EXPECT_EQ(extract_length(32, 5, Rational(1)), 1u);
  EXPECT_EQ(extract_length(1024, 100, Rational(2)), 6u);
  EXPECT_EQ(extract_length(16, 9, Rational(3, 2)), 2u);
}

TEST(Extract, ThirtyTwoToEight) {
  BruteInverter inv;
  // A 5-input table of complexity above 4 (checked below).
  TruthTable x = TruthTable::from_string("01101001100101101001011001101001");
  auto res = hardness_extract(x, 5, inv, Rational(8));
  EXPECT_EQ(res.n, 8u);
  EXPECT_EQ(res.k, 3u);
  EXPECT_EQ(res.table.length(), 8u);
  EXPECT_LE(res.calls, 8u);
  auto r = exact_complexity(res.table, res.guarantee);
  EXPECT_TRUE(std::holds_alternative<AboveCap>(r));
  EXPECT_THROW(hardness_extract(x, 5, inv, Rational(2)), Error);
}

TEST(Extract, ImmediateReturnAtDepthOne) {
  BruteInverter inv;
  TruthTable x = TruthTable::from_string("01101001");
  auto res = hardness_extract(x, 3, inv, Rational(8));
  EXPECT_EQ(res.n, 8u);
  EXPECT_EQ(res.k, 1u);
  EXPECT_EQ(res.calls, 1u);
  EXPECT_EQ(res.table, x);
}

TEST(GateLevel, ExpansionAndChainCompile) {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 5; ++t) {
    auto base = StretchMap::from_circuit(random_base(rng, 3, 6));
    for (std::size_t k = 1; k <= 3; ++k) {
      auto e = ggm_expand(base, k);
      ASSERT_TRUE(e.has_native_circuit());
      Circuit c = e.compile();
      EXPECT_EQ(c.size(), base.compile().size() * ((std::size_t{1} << k) - 1));
      for (std::uint64_t x = 0; x < 8; ++x) EXPECT_EQ(c.eval(BitString::from_uint(x, 3)), e(BitString::from_uint(x, 3)));
    }
    auto small = StretchMap::from_circuit(random_circuit(rng, 3, 8, 4));
    auto full = compose(pad_chain(small));
    ASSERT_TRUE(full.has_native_circuit());
    Circuit c = full.compile();
    for (std::uint64_t x = 0; x < 512; x += 7) EXPECT_EQ(c.eval(BitString::from_uint(x, 9)), full(BitString::from_uint(x, 9)));
  }
}
