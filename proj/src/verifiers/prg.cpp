#include <bit>

#include "pigeon/complexity.hpp"
#include "pigeon/error.hpp"
#include "pigeon/gadgets.hpp"
#include "pigeon/verifiers.hpp"

namespace pigeon {

namespace {

std::size_t common_length(std::span<const BitString> r) {
  require(!r.empty(), Errc::invalid_argument, "R must be non-empty");
  const std::size_t n = r.front().size();
  for (const auto& x : r) require(x.size() == n, Errc::invalid_argument, "R strings differ in length");
  return n;
}

}  // namespace

Rational prg_advantage(std::span<const BitString> r, const Circuit& c) {
  const std::size_t n = common_length(r);
  require(n <= 16, Errc::budget, "prg_advantage enumerates 2^n inputs; n must be <= 16");
  require(c.num_inputs() == n && c.num_outputs() == 1, Errc::invalid_argument,
          "distinguisher must read n bits and output one");
  std::size_t hits_r = 0;
  for (const auto& x : r) hits_r += c.eval(x)[0] ? 1 : 0;
  std::size_t hits_u = 0;
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) hits_u += c.eval_packed(y) & 1U;
  Rational diff = Rational(hits_r, r.size()) - Rational(hits_u, std::uint64_t{1} << n);
  return diff < 0 ? Rational(-diff) : diff;
}

Rational max_small_circuit_advantage(std::span<const BitString> r, std::size_t n, std::uint64_t* best_table) {
  require(common_length(r) == n, Errc::invalid_argument, "R strings must have length n");
  require(n >= 1 && n <= 4, Errc::budget, "is_prg enumerates every n-gate circuit; n must be <= 4");
  const std::uint64_t points = std::uint64_t{1} << n;
  std::vector<std::size_t> mult(points, 0);
  for (const auto& x : r) ++mult[x.to_uint()];
  Rational best = 0;
  std::uint64_t arg = 0;
  for (std::uint64_t w : functions_up_to(n, n)) {
    std::size_t hits_r = 0;
    for (std::uint64_t p = 0; p < points; ++p)
      if ((w >> p) & 1U) hits_r += mult[p];
    const std::uint64_t masked = points == 64 ? w : (w & ((std::uint64_t{1} << points) - 1));
    Rational diff = Rational(hits_r, r.size()) - Rational(std::popcount(masked), points);
    if (diff < 0) diff = -diff;
    if (diff > best) {
      best = diff;
      arg = w;
    }
  }
  if (best_table) *best_table = arg;
  return best;
}

bool is_prg(std::span<const BitString> r, std::size_t n) {
  return max_small_circuit_advantage(r, n) <= Rational(1, n);
}

YaoPredictor yao_predictor(const Circuit& c, std::span<const BitString> r) {
  const std::size_t n = common_length(r);
  require(n >= 2 && n <= 12, Errc::budget, "predictor search needs 2 <= n <= 12");
  const Rational adv = prg_advantage(r, c);
  require(adv > Rational(1, n), Errc::invalid_argument,
          "distinguisher advantage " + to_string(adv) + " does not exceed 1/n");

  std::optional<YaoPredictor> best;
  std::size_t best_hits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t tail = n - i;
    for (std::uint64_t completion = 0; completion < (std::uint64_t{1} << tail); ++completion) {
      // C(x_0 .. x_{i-1}, r_i .. r_{n-1}) for each string in R.
      std::size_t ones_match = 0;  // strings where C's output equals x_i
      for (const auto& x : r) {
        std::uint64_t in = (x.to_uint() >> tail << tail) | completion;
        bool out = (c.eval_packed(in) & 1U) != 0;
        ones_match += out == x[i] ? 1 : 0;
      }
      for (int flip = 0; flip < 2; ++flip) {
        std::size_t hits = flip ? r.size() - ones_match : ones_match;
        if (best && hits <= best_hits) continue;
        CircuitBuilder b(n - 1);
        std::vector<Ref> ins(n);
        for (std::size_t j = 0; j < i; ++j) ins[j] = b.input(j);
        for (std::size_t j = i; j < n; ++j) ins[j] = ((completion >> (n - 1 - j)) & 1U) ? b.one() : b.zero();
        Ref out = b.embed(c, ins)[0];
        if (flip) out = b.lnot(out);
        best = YaoPredictor{i, std::move(b).finish({out}), Rational(hits, r.size())};
        best_hits = hits;
      }
    }
  }
  return *best;
}

}  // namespace pigeon
