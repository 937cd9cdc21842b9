#include <bit>

#include "pigeon/error.hpp"
#include "pigeon/verifiers.hpp"

namespace pigeon {

std::size_t rigidity_distance(const Matrix& m, std::size_t r) {
  const std::size_t n = m.rows();
  require(m.cols() == n && n >= 1 && n <= 4, Errc::budget, "rigidity_distance needs a square matrix with n <= 4");
  require(r <= 2, Errc::budget, "rigidity_distance enumerates L and R; r must be <= 2");
  // Rows as bitmasks.
  std::vector<std::uint32_t> target(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      require(m(i, j) <= 1, Errc::invalid_argument, "rigidity_distance works over F2");
      if (m(i, j)) target[i] |= 1U << j;
    }
  std::size_t best = 0;
  for (auto row : target) best += std::popcount(row);
  if (r == 0) return best;
  const std::uint32_t row_space = 1U << n;
  // R as r row masks; every row of L R is a combination selected by a row of L.
  std::vector<std::uint32_t> rrows(r, 0);
  const std::uint64_t r_count = std::uint64_t{1} << (r * n);
  for (std::uint64_t code = 0; code < r_count; ++code) {
    for (std::size_t t = 0; t < r; ++t) rrows[t] = static_cast<std::uint32_t>((code >> (t * n)) & (row_space - 1));
    std::vector<std::uint32_t> combos(std::size_t{1} << r, 0);
    for (std::size_t sel = 0; sel < combos.size(); ++sel)
      for (std::size_t t = 0; t < r; ++t)
        if ((sel >> t) & 1U) combos[sel] ^= rrows[t];
    // Each row of L picks independently, so minimize per row.
    std::size_t dist = 0;
    for (auto row : target) {
      std::size_t row_best = n;
      for (auto cmb : combos) row_best = std::min<std::size_t>(row_best, std::popcount(row ^ cmb));
      dist += row_best;
    }
    best = std::min(best, dist);
  }
  return best;
}

}  // namespace pigeon
