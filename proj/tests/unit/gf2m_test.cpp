#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "pigeon/error.hpp"
#include "pigeon/gf2m.hpp"

using namespace pigeon;
using Elem = FieldCtx::Elem;

namespace {

// Schoolbook carry-less product followed by long division, independent of FieldCtx::mul.
Elem slow_mul(Elem a, Elem b, std::uint64_t modulus, unsigned m) {
  std::uint64_t prod = 0;
  for (unsigned i = 0; i < m; ++i)
    if ((b >> i) & 1U) prod ^= a << i;
  for (int d = 2 * static_cast<int>(m); d >= static_cast<int>(m); --d)
    if ((prod >> d) & 1U) prod ^= modulus << (d - m);
  return prod;
}

Elem naive_eval(const FieldCtx& f, const std::vector<Elem>& c, Elem x) {
  Elem acc = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Elem pw = 1;
    for (std::size_t t = 0; t < i; ++t) pw = slow_mul(pw, x, f.modulus(), f.degree());
    acc ^= slow_mul(c[i], pw, f.modulus(), f.degree());
  }
  return acc;
}

}  // namespace

TEST(Field, Moduli) {
  EXPECT_EQ(FieldCtx(2).modulus(), 0b111u);
  EXPECT_EQ(FieldCtx(4).modulus(), 0b10011u);
  EXPECT_EQ(FieldCtx(8).modulus(), 0b100011011u);
  EXPECT_FALSE(is_irreducible_gf2(0b101));  // (x+1)^2
}

TEST(Field, Examples) {
  FieldCtx f(2);
  for (Elem a = 0; a < 4; ++a) EXPECT_EQ(f.add(a, a), 0u);
  EXPECT_EQ(f.mul(0b10, 0b10), 0b11u);
  EXPECT_EQ(f.inv(1), 1u);
  EXPECT_THROW(f.inv(0), Error);
}

TEST(Field, AxiomsOnRandomTriples) {
  std::mt19937_64 rng(1);
  for (unsigned m : {2u, 4u, 8u}) {
    FieldCtx f(m);
    const Elem q = f.order();
    for (int t = 0; t < 1000; ++t) {
      Elem a = rng() % q, b = rng() % q, c = rng() % q;
      EXPECT_EQ(f.mul(a, b), slow_mul(a, b, f.modulus(), m));
      EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
      EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      EXPECT_EQ(f.mul(a, b), f.mul(b, a));
      if (a != 0) {
        EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
      }
    }
  }
}

TEST(Poly, EvalExamples) {
  FieldCtx f(4);
  std::vector<Elem> constant{9};
  std::vector<Elem> identity{0, 1};
  for (Elem x = 0; x < 16; ++x) {
    EXPECT_EQ(poly_eval(f, constant, x), 9u);
    EXPECT_EQ(poly_eval(f, identity, x), x);
  }
  std::mt19937_64 rng(4);
  std::vector<Elem> c(6);
  for (auto& e : c) e = rng() % 16;
  for (Elem x : {Elem{2}, Elem{7}, Elem{13}}) EXPECT_EQ(poly_eval(f, c, x), naive_eval(f, c, x));
}

TEST(Poly, InterpolationExamples) {
  FieldCtx f4(4);
  std::vector<Elem> p1{5}, v1{11};
  EXPECT_EQ(vandermonde_solve(f4, p1, v1), std::vector<Elem>{11});
  FieldCtx f2(2);
  std::vector<Elem> p2{0, 1}, v2{0, 1};
  EXPECT_EQ(vandermonde_solve(f2, p2, v2), (std::vector<Elem>{0, 1}));
  std::vector<Elem> dup{3, 3}, vals{1, 2};
  EXPECT_THROW(vandermonde_solve(f4, dup, vals), Error);
}

TEST(Poly, InterpolationInvertsEvaluation) {
  std::mt19937_64 rng(6);
  for (unsigned m : {2u, 4u, 6u, 8u}) {
    FieldCtx f(m);
    const std::size_t max_k = std::min<std::size_t>(64, f.order());
    for (std::size_t k = 1; k <= max_k; k += (k < 8 ? 1 : 9)) {
      std::vector<Elem> coeffs(k), points;
      for (auto& c : coeffs) c = rng() % f.order();
      std::vector<Elem> all(f.order());
      for (Elem x = 0; x < f.order(); ++x) all[x] = x;
      std::shuffle(all.begin(), all.end(), rng);
      points.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
      std::vector<Elem> values;
      for (Elem x : points) values.push_back(poly_eval(f, coeffs, x));
      ASSERT_EQ(vandermonde_solve(f, points, values), coeffs) << m << ' ' << k;
    }
  }
  // All sixteen points of GF(16).
  FieldCtx f(4);
  std::vector<Elem> coeffs(16), points(16), values;
  for (auto& c : coeffs) c = rng() % 16;
  for (Elem x = 0; x < 16; ++x) points[x] = x;
  for (Elem x : points) values.push_back(poly_eval(f, coeffs, x));
  EXPECT_EQ(vandermonde_solve(f, points, values), coeffs);
}
