#include <gtest/gtest.h>

#include <random>
#include <set>

#include "pigeon/complexity.hpp"
#include "pigeon/error.hpp"
#include "pigeon/forge/extractor.hpp"
#include "pigeon/forge/hard_tt.hpp"
#include "pigeon/forge/manifest.hpp"
#include "pigeon/forge/prg.hpp"
#include "pigeon/forge/rigid.hpp"
#include "pigeon/forge/turing.hpp"
#include "pigeon/inverter.hpp"
#include "pigeon/verifiers.hpp"
#include "support.hpp"

using namespace pigeon;
using namespace pigeon::testing;

namespace {

BitString B(const char* s) { return BitString::from_string(s); }

BitString random_bits(std::mt19937_64& rng, std::size_t n) {
  BitString s(n);
  for (std::size_t i = 0; i < n; ++i) s.set(i, rng() & 1U);
  return s;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return Errc::invalid_argument;
}

}  // namespace

// ---------------------------------------------------------------- hard tables

TEST(HardTt, LayoutAtThirtyTwo) {
  EXPECT_EQ(hard_tt_s_max(32), 3u);
  auto m = phi_hard_tt(32);
  EXPECT_EQ(m.in_width(), 26u);
  EXPECT_EQ(m.out_width(), 32u);
  EXPECT_EQ(m.kind(), MapKind::HardTt);
}

TEST(HardTt, RefusesLengthsThatDoNotStretch) {
  for (std::size_t n : {2u, 4u, 16u}) EXPECT_EQ(code_of([&] { phi_hard_tt(n); }), Errc::small_n) << n;
  EXPECT_EQ(phi_hard_tt(8).in_width(), 6u);
  EXPECT_EQ(phi_hard_tt(64).in_width(), 53u);
}

TEST(HardTt, FastPathMatchesDecodedCircuit) {
  std::mt19937_64 rng(11);
  for (std::size_t n : {8u, 32u, 64u}) {
    auto m = phi_hard_tt(n);
    for (int t = 0; t < 300; ++t) {
      BitString x = random_bits(rng, m.in_width());
      auto direct = truth_table(decode_circuit(CircuitCode{hard_tt_s_max(n), x}, table_inputs(n)), n);
      ASSERT_EQ(m(x), direct.bits());
      ASSERT_EQ(BitString::from_uint(m.eval_packed(x.to_uint()), n), direct.bits());
    }
  }
}

TEST(HardTt, UniversalDecoderAgrees) {
  auto small = phi_hard_tt(8);
  Circuit c = small.compile();
  for (std::uint64_t x = 0; x < 64; ++x) ASSERT_EQ(c.eval_packed(x), small.eval_packed(x)) << x;

  auto big = phi_hard_tt(32);
  Circuit u = big.compile();
  std::mt19937_64 rng(5);
  for (int t = 0; t < 1000; ++t) {
    std::uint64_t x = rng() & ((1ULL << 26) - 1);
    ASSERT_EQ(u.eval_packed(x), big.eval_packed(x));
  }
}

TEST(HardTt, EveryCheapTableIsInRange) {
  auto m = phi_hard_tt(8);
  BruteInverter inv;
  for (std::uint64_t w : functions_up_to(3, 1)) {
    BitString tt(8);
    for (std::size_t p = 0; p < 8; ++p) tt.set(p, (w >> p) & 1U);
    EXPECT_TRUE(inv.invert(m, tt).member()) << tt.to_string();
  }
}

TEST(HardTt, CodebookVariantCertifiesItsGuarantee) {
  auto h = compact_hard_tt(8, 4);
  EXPECT_EQ(h.encoding, "codebook");
  EXPECT_EQ(h.guarantee, 1u);
  std::set<BitString> range;
  for (std::uint64_t x = 0; x < 16; ++x) range.insert(h.map(BitString::from_uint(x, 4)));
  for (std::uint64_t y = 0; y < 256; ++y) {
    BitString s = BitString::from_uint(y, 8);
    if (range.count(s)) continue;
    auto r = exact_complexity(TruthTable(s), h.guarantee);
    EXPECT_TRUE(std::holds_alternative<AboveCap>(r)) << s.to_string();
  }
  auto coded = compact_hard_tt(32, 30);
  EXPECT_EQ(coded.encoding, "circuit-code");
  EXPECT_EQ(coded.guarantee, 3u);
}

// ---------------------------------------------------------------- PRG

TEST(Prg, ConstantPredictorPrependsZero) {
  PrgReduction red(PrgParams{3, 4, 2, Rational(1, 4)});
  PrgWitness w;
  for (const char* s : {"00", "01", "10", "11"}) w.r_minus.push_back(B(s));
  Circuit zero(2);
  Ref n = zero.add_gate(GateKind::Not, 0);
  zero.add_output(zero.add_gate(GateKind::And, 0, n));
  w.predictor = zero;
  w.index = 0;
  w.corrections = BitString(4);
  auto r = red.apply(w);
  ASSERT_EQ(r.size(), 4u);
  EXPECT_EQ(r[0], B("000"));
  EXPECT_EQ(r[1], B("001"));
  EXPECT_EQ(r[2], B("010"));
  EXPECT_EQ(r[3], B("011"));
  EXPECT_EQ(red.eval(red.encode(w)), concat(r));
}

TEST(Prg, CorrectionsFlipThePredictedBit) {
  PrgReduction red(PrgParams{3, 4, 2, Rational(1, 4)});
  Circuit c(2);
  Ref n = c.add_gate(GateKind::Not, 0);
  c.add_output(c.add_gate(GateKind::And, 0, n));
  PrgWitness w{{B("00"), B("01"), B("10"), B("11")}, c, 2, B("0100")};
  auto r = red.apply(w);
  EXPECT_EQ(r[0], B("000"));
  EXPECT_EQ(r[1], B("011"));
  EXPECT_EQ(r[3], B("110"));
}

TEST(Prg, FaithfulWidths) {
  for (std::size_t n : {3u, 4u, 5u}) {
    auto p = PrgParams::faithful(n);
    std::size_t n7 = 1;
    for (int e = 0; e < 7; ++e) n7 *= n;
    EXPECT_EQ(p.count * p.n, n7);
    EXPECT_EQ(p.eps, Rational(1, n * n));
    EXPECT_EQ(code_of([&] { phi_prg(n); }), Errc::small_n);
  }
  PrgReduction red(PrgParams::faithful(3));
  EXPECT_EQ(red.out_width(), 2187u);
  EXPECT_EQ(red.in_width(), prg_width_formula(PrgParams::faithful(3)));
  EXPECT_EQ(red.sparse().max_weight(), 283u);
}

TEST(Prg, DecodeIsTotalAndEncodeRoundTrips) {
  PrgReduction red(PrgParams{4, 6, 3, Rational(1, 8)});
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    auto w = red.decode(random_bits(rng, red.in_width()));
    auto again = red.decode(red.encode(w));
    EXPECT_EQ(red.apply(again), red.apply(w));
    EXPECT_EQ(again.r_minus, w.r_minus);
    EXPECT_EQ(again.index, w.index);
    EXPECT_EQ(again.corrections, w.corrections);
  }
}

TEST(Prg, DistinguishedSetsHaveWitnesses) {
  const std::size_t n = 3, count = 8;
  PrgReduction red(PrgParams{n, count, 4, Rational(1, n * n)});
  std::mt19937_64 rng(17);
  int planted = 0;
  for (int t = 0; t < 400 && planted < 40; ++t) {
    std::vector<BitString> r;
    for (std::size_t j = 0; j < count; ++j) r.push_back(random_bits(rng, n));
    Circuit c = random_circuit(rng, n, 1 + rng() % 4, 1);
    if (prg_advantage(r, c) <= Rational(1, n)) continue;
    auto yao = yao_predictor(c, r);
    PrgWitness w;
    w.index = yao.index;
    w.predictor = yao.predictor;
    w.corrections = BitString(count);
    for (std::size_t j = 0; j < count; ++j) {
      BitString rest = r[j].slice(0, w.index);
      rest.append(r[j].slice(w.index + 1, n - w.index - 1));
      w.r_minus.push_back(rest);
      w.corrections.set(j, yao.predictor.eval(rest)[0] != r[j][w.index]);
    }
    ASSERT_LE(w.corrections.weight(), red.sparse().max_weight());
    EXPECT_EQ(red.eval(red.encode(w)), concat(r));
    ++planted;
  }
  EXPECT_GE(planted, 20);
}

// ---------------------------------------------------------------- extractor

TEST(Extractor, DFromEps) {
  EXPECT_EQ(extractor_d(Rational(1, 4)), 64u);
  EXPECT_EQ(extractor_d(Rational(1, 3)), 36u);
  EXPECT_EQ(extractor_d(Rational(2, 5)), 25u);
}

TEST(Extractor, WidthBoundBelowOutput) {
  for (std::size_t n = 2; n <= 40; ++n)
    for (auto eps : {Rational(1, 4), Rational(1, 8), Rational(1, 3), Rational(49, 100)}) {
      const std::size_t d = extractor_d(eps);
      const BigInt out = BigInt(2) * d * d * n * n * n;
      const BigInt bound = extractor_width_bound(n, eps, d);
      EXPECT_LT(bound, out) << n << " " << eps;
      // Exact field sum: X, Y, b, sparse code, betas.
      const std::size_t k = d * d * n * n;
      const BigInt exact =
          BigInt(2 * d * n * n + 1 + ceil_log2(k) + k - sparse_savings(k, eps)) + BigInt(k) * (2 * n - 1);
      EXPECT_LE(exact, bound);
    }
}

TEST(Extractor, DeskParametersAreRefused) {
  EXPECT_EQ(code_of([] { phi_extractor(2, Rational(1, 4), 2); }), Errc::small_n);
  EXPECT_EQ(code_of([] { ExtractorParams::make(2, Rational(1, 4)); }), Errc::small_n);
  ExtractorReduction red(ExtractorParams::make(2, Rational(1, 4), 2));
  EXPECT_EQ(red.in_width(), 84u);
  EXPECT_EQ(red.out_width(), 64u);
}

TEST(Extractor, PlantedCoefficientsRoundTrip) {
  ExtractorReduction red(ExtractorParams::make(2, Rational(1, 4), 2));
  std::mt19937_64 rng(8);
  int done = 0;
  for (int t = 0; t < 2000 && done < 25; ++t) {
    std::vector<Elem> alphas(16);
    for (auto& a : alphas) a = rng() & 15U;
    std::size_t ones = 0;
    for (Elem x = 0; x < 16; ++x) ones += extractor_eval(red.field(), alphas, x);
    const bool b = ones > 8;
    if (std::min(ones, 16 - ones) > red.sparse().max_weight()) continue;
    auto w = red.witness_for(alphas, {0, 1, 2, 3}, {0, 1, 2, 3}, b);
    auto payload = red.encode(w);
    ASSERT_EQ(payload.size(), 84u);
    EXPECT_EQ(red.eval(payload), alphas_to_bits(alphas, 4));
    ++done;
  }
  EXPECT_EQ(done, 25);
}

TEST(Extractor, DecodeNormalizesSets) {
  ExtractorReduction red(ExtractorParams::make(3, Rational(1, 4), 2));
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    auto w = red.decode(random_bits(rng, red.in_width()));
    ASSERT_EQ(w.x_set.size(), 6u);
    for (std::size_t i = 1; i < 6; ++i) ASSERT_LT(w.x_set[i - 1], w.x_set[i]);
    for (Elem y : w.y_set) ASSERT_LT(y, 8u);
    auto alphas = red.apply(w);
    auto pts = red.points(w);
    for (std::size_t i = 0; i < pts.size(); ++i)
      EXPECT_EQ(poly_eval(red.field(), alphas, pts[i]) >> 1, w.betas[i]);
  }
}

// ---------------------------------------------------------------- rigid

TEST(Rigid, SmallFieldAxioms) {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 27u}) {
    SmallField f(q);
    for (unsigned a = 0; a < q; ++a) {
      EXPECT_EQ(f.add(a, f.neg(a)), 0u);
      EXPECT_EQ(f.mul(a, 1), a);
      if (a != 0) {
        int inverses = 0;
        for (unsigned b = 1; b < q; ++b) inverses += f.mul(a, b) == 1;
        EXPECT_EQ(inverses, 1) << q << " " << a;
      }
      for (unsigned b = 0; b < q; ++b)
        for (unsigned c = 0; c < q; ++c) {
          ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
          ASSERT_EQ(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
        }
    }
  }
  EXPECT_EQ(SmallField(256).mul(2, 128), 27u);  // x^8 = x^4 + x^3 + x + 1
  EXPECT_THROW(SmallField(6), Error);
  EXPECT_THROW(SmallField(512), Error);
}

TEST(Rigid, OuterProductExample) {
  RigidReduction red(2, 1, 0, 2);
  Matrix l(2, 1), r(1, 2);
  l(0, 0) = 1;
  r(0, 0) = 1;
  Matrix m = red.apply(RigidWitness{l, r, {}});
  EXPECT_EQ(to_text(m), to_text(parse_bit_matrix("matrix 2 2\n10\n00\n")));
}

TEST(Rigid, RangeMatchesIndependentEnumeration) {
  RigidReduction red(3, 1, 1, 2);
  ASSERT_EQ(red.in_width(), 11u);
  ASSERT_EQ(red.out_width(), 9u);
  EXPECT_EQ(code_of([] { phi_rigid(3, 1, 1, 2); }), Errc::small_n);
  auto map = red.map();
  std::set<std::uint64_t> forward;
  for (std::uint64_t x = 0; x < (1U << 11); ++x) forward.insert(map(BitString::from_uint(x, 11)).to_uint());
  std::set<std::uint64_t> brute;
  for (unsigned u = 0; u < 8; ++u)
    for (unsigned v = 0; v < 8; ++v) {
      std::uint64_t outer = 0;
      for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j)
          if (msb_bit(u, 3, i) && msb_bit(v, 3, j)) outer |= 1ULL << (8 - (3 * i + j));
      brute.insert(outer);
      for (unsigned e = 0; e < 9; ++e) brute.insert(outer ^ (1ULL << e));
    }
  EXPECT_EQ(forward, brute);
}

TEST(Rigid, StretchingParametersAndBudget) {
  auto m = phi_rigid(16, 1, 2, 2);
  EXPECT_EQ(m.in_width(), 50u);
  EXPECT_EQ(m.out_width(), 256u);
  auto b = rigid_budget(16, Rational(1, 8), Rational(1, 4));
  EXPECT_EQ(b.rank, 2u);
  EXPECT_EQ(b.s_count, 16u);
  auto q3 = phi_rigid(4, 1, 1, 3);
  EXPECT_EQ(q3.in_width(), 2u * 4 * 2 + (2 * 2 + 2));
  EXPECT_EQ(q3.out_width(), 32u);
}

TEST(Rigid, RoundTripOverLargerField) {
  RigidReduction red(4, 2, 3, 9);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    auto w = red.decode(random_bits(rng, red.in_width()));
    auto again = red.decode(red.encode(w));
    EXPECT_EQ(red.apply(again), red.apply(w));
    Matrix m = red.apply(w);
    EXPECT_EQ(red.matrix_from_bits(red.matrix_to_bits(m)), m);
  }
}

// ---------------------------------------------------------------- Turing machines

TEST(Turing, FixtureRuns) {
  EXPECT_EQ(tm_run(halting_machine(), B("101"), 10).output, "");
  EXPECT_TRUE(tm_run(halting_machine(), B("101"), 0).halted);
  auto copy = tm_run(copy_machine(), B("10"), 50);
  EXPECT_TRUE(copy.halted);
  EXPECT_EQ(copy.output, "10");
  EXPECT_EQ(copy.steps, 4u);
  for (std::size_t steps : {0u, 1u, 100u, 10000u}) EXPECT_FALSE(tm_run(looping_machine(), B("1"), steps).halted);
  EXPECT_FALSE(tm_run(copy_machine(), B("1101"), 3).halted);
}

TEST(Turing, TextRoundTripAndTotality) {
  auto m = copy_machine();
  auto again = parse_tm(to_text(m));
  EXPECT_EQ(to_text(again), to_text(m));
  EXPECT_EQ(code_of([] { parse_tm("states 2\nstart 0\nhalt 1\ndelta 0 a -> 1 0 R\n"); }), Errc::parse_error);
  EXPECT_EQ(code_of([] { parse_tm("states 2\nstart 0\nbogus\n"); }), Errc::parse_error);
}

TEST(Turing, KtMapExamples) {
  auto m = phi_kt(8, copy_machine(), 100);
  EXPECT_EQ(m.in_width(), 7u);
  EXPECT_EQ(m(B("0000000")), B("00000000"));
  EXPECT_EQ(m(B("0000011")), B("10000000"));
  EXPECT_EQ(m(B("1101101")), B("10110100"));
  auto looping = phi_kt(4, looping_machine(), 50);
  EXPECT_EQ(looping(B("011")), B("0000"));
}

// ---------------------------------------------------------------- manifests

TEST(Manifest, RoundTripAndBuild) {
  Manifest m = parse_manifest("kind=hard_tt\nN=32\n");
  EXPECT_EQ(to_text(m), "kind=hard_tt\nN=32\n");
  EXPECT_EQ(build_map(m).in_width(), 26u);

  Manifest kt;
  kt.values = {{"kind", "kt"}, {"n", "8"}, {"t", "100"}};
  kt.blocks["tm"] = to_text(copy_machine());
  Manifest back = parse_manifest(to_text(kt));
  EXPECT_EQ(back.blocks, kt.blocks);
  EXPECT_EQ(build_map(back)(B("0000011")), B("10000000"));

  EXPECT_EQ(code_of([] { build_map(parse_manifest("kind=nope\n")); }), Errc::parse_error);
  EXPECT_EQ(code_of([] { build_map(parse_manifest("kind=hard_tt\nN=x\n")); }), Errc::parse_error);
  EXPECT_EQ(code_of([] { build_map(parse_manifest("kind=rigid\nn=3\nr=1\ns=1\n")); }), Errc::small_n);
  EXPECT_EQ(code_of([] { parse_manifest("kind=kt\nbegin tm\nstates 1\n"); }), Errc::parse_error);
}
