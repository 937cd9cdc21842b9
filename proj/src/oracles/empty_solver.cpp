#include "pigeon/empty_solver.hpp"

#include "pigeon/error.hpp"

namespace pigeon {

BitString Rng::bits(std::size_t n) {
  BitString s(n);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i % 64 == 0) word = gen_();
    s.set(i, (word >> (63 - i % 64)) & 1U);
  }
  return s;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  require(bound >= 1, Errc::invalid_argument, "empty sampling range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    std::uint64_t v = gen_();
    if (v < limit) return v % bound;
  }
}

std::size_t randomized_trial_cap(const StretchMap& map) {
  return 10 * (map.out_width() - map.in_width() + 1) * 64;
}

RandomSolution solve_empty_randomized(const StretchMap& map, Inverter& inverter, std::uint64_t seed) {
  require_stretching(map, "randomized EMPTY solver");
  Rng rng(seed);
  const std::size_t cap = randomized_trial_cap(map);
  for (std::size_t t = 1; t <= cap; ++t) {
    BitString y = rng.bits(map.out_width());
    if (!inverter.invert(map, y).member()) return {std::move(y), t};
  }
  fail(Errc::not_found, "no solution after " + std::to_string(cap) + " samples; the range is far denser than 2^in/2^out");
}

BitString smallest_non_member(const StretchMap& map, Inverter& inverter) {
  require_stretching(map, "smallest non-member search");
  require(map.out_width() <= 63, Errc::budget, "target scan limited to outputs of at most 63 bits");
  const std::uint64_t count = std::uint64_t{1} << map.out_width();
  for (std::uint64_t v = 0; v < count; ++v) {
    BitString y = BitString::from_uint(v, map.out_width());
    if (!inverter.invert(map, y).member()) return y;
  }
  fail(Errc::not_found, "every target has a preimage, which a stretching map cannot do");
}

}  // namespace pigeon
