#include "pigeon/error.hpp"
#include "pigeon/verifiers.hpp"

namespace pigeon {

namespace {

using Elem = FieldCtx::Elem;

bool low_bit(const FieldCtx& f, std::span<const Elem> alphas, Elem x) {
  // Horner from the top coefficient down.
  Elem acc = 0;
  for (std::size_t i = alphas.size(); i-- > 0;) acc = f.mul(acc, x) ^ alphas[i];
  return (acc & 1U) != 0;
}

// Calls visit(subset) for every size-k subset of {0 .. universe-1}, in lex order.
template <typename Visit>
void for_each_subset(std::size_t universe, std::size_t k, Visit&& visit) {
  std::vector<Elem> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    visit(std::span<const Elem>(pick));
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == universe - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

Rational extractor_bias(std::span<const Elem> alphas, std::size_t n, std::span<const Elem> xs,
                        std::span<const Elem> ys) {
  require(n >= 1 && n <= 16, Errc::invalid_argument, "extractor sources need 1 <= n <= 16");
  require(!xs.empty() && !ys.empty(), Errc::invalid_argument, "sources must be non-empty");
  const FieldCtx f(static_cast<unsigned>(2 * n));
  std::size_t ones = 0;
  for (Elem x : xs)
    for (Elem y : ys) ones += low_bit(f, alphas, (x << n) | y) ? 1 : 0;
  Rational d = Rational(ones, xs.size() * ys.size()) - Rational(1, 2);
  return d < 0 ? Rational(-d) : d;
}

bool is_extractor(std::span<const Elem> alphas, std::size_t n, std::size_t k, const Rational& eps) {
  require(k <= n && n <= 6, Errc::budget, "is_extractor enumerates subsets of {0,1}^n; n must be <= 6");
  const std::size_t universe = std::size_t{1} << n, size = std::size_t{1} << k;
  const BigInt pairs = binomial(universe, size) * binomial(universe, size);
  require(pairs <= 10'000'000, Errc::budget,
          "binom(2^n, 2^k)^2 = " + pairs.str() + " source pairs exceeds the 10^7 budget");
  const FieldCtx f(static_cast<unsigned>(2 * n));
  // Precompute g on the whole square once.
  std::vector<std::uint8_t> g(universe * universe);
  for (Elem x = 0; x < universe; ++x)
    for (Elem y = 0; y < universe; ++y) g[x * universe + y] = low_bit(f, alphas, (x << n) | y) ? 1 : 0;
  const Rational total = size * size;
  bool ok = true;
  for_each_subset(universe, size, [&](std::span<const Elem> xs) {
    if (!ok) return;
    std::vector<std::size_t> row(universe, 0);
    for (Elem y = 0; y < universe; ++y)
      for (Elem x : xs) row[y] += g[x * universe + y];
    for_each_subset(universe, size, [&](std::span<const Elem> ys) {
      if (!ok) return;
      std::size_t ones = 0;
      for (Elem y : ys) ones += row[y];
      Rational d = Rational(ones) / total - Rational(1, 2);
      if (d < 0) d = -d;
      if (d > eps) ok = false;
    });
  });
  return ok;
}

}  // namespace pigeon
