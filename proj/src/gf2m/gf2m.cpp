#include "pigeon/gf2m.hpp"

#include <algorithm>

#include "pigeon/error.hpp"

namespace pigeon {

namespace {

int degree_of(std::uint64_t p) { return p == 0 ? -1 : 63 - __builtin_clzll(p); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = degree_of(m);
  for (int da = degree_of(a); da >= dm; da = degree_of(a)) a ^= m << (da - dm);
  return a;
}

}  // namespace

bool is_irreducible_gf2(std::uint64_t poly) {
  const int d = degree_of(poly);
  if (d < 1) return false;
  for (int dd = 1; dd <= d / 2; ++dd)
    for (std::uint64_t q = std::uint64_t{1} << dd; q < (std::uint64_t{2} << dd); ++q)
      if (poly_mod(poly, q) == 0) return false;
  return true;
}

FieldCtx::FieldCtx(unsigned m) : m_(m), modulus_(0) {
  require(m >= 1 && m <= 32, Errc::invalid_argument, "field degree must be in 1..32");
  for (std::uint64_t p = std::uint64_t{1} << m; p < (std::uint64_t{2} << m); ++p) {
    if (is_irreducible_gf2(p)) {
      modulus_ = p;
      return;
    }
  }
  fail(Errc::invalid_argument, "no irreducible polynomial found");
}

FieldCtx::Elem FieldCtx::mul(Elem a, Elem b) const noexcept {
  Elem r = 0;
  const Elem top = Elem{1} << m_;
  while (b != 0) {
    if (b & 1U) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= modulus_;
  }
  return r;
}

FieldCtx::Elem FieldCtx::pow(Elem a, std::uint64_t e) const noexcept {
  Elem r = 1;
  while (e != 0) {
    if (e & 1U) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FieldCtx::Elem FieldCtx::inv(Elem a) const {
  require(a != 0 && a < order(), Errc::invalid_argument, "inverse of zero (or of a non-element)");
  return pow(a, order() - 2);
}

FieldCtx::Elem poly_eval(const FieldCtx& f, std::span<const FieldCtx::Elem> coeffs, FieldCtx::Elem x) {
  FieldCtx::Elem acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
  return acc;
}

std::vector<FieldCtx::Elem> vandermonde_solve(const FieldCtx& f, std::span<const FieldCtx::Elem> points,
                                              std::span<const FieldCtx::Elem> values) {
  const std::size_t k = points.size();
  require(values.size() == k, Errc::invalid_argument, "points and values differ in length");
  {
    std::vector<FieldCtx::Elem> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), Errc::invalid_argument,
            "interpolation points must be distinct");
  }
  // Augmented matrix rows: [1, p, p^2, ..., p^{k-1} | v].
  std::vector<std::vector<FieldCtx::Elem>> a(k, std::vector<FieldCtx::Elem>(k + 1));
  for (std::size_t r = 0; r < k; ++r) {
    FieldCtx::Elem pw = 1;
    for (std::size_t c = 0; c < k; ++c) {
      a[r][c] = pw;
      pw = f.mul(pw, points[r]);
    }
    a[r][k] = values[r];
  }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && a[piv][col] == 0) ++piv;
    require(piv < k, Errc::invalid_argument, "singular Vandermonde system");
    std::swap(a[piv], a[col]);
    const FieldCtx::Elem s = f.inv(a[col][col]);
    for (std::size_t c = col; c <= k; ++c) a[col][c] = f.mul(a[col][c], s);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const FieldCtx::Elem factor = a[r][col];
      for (std::size_t c = col; c <= k; ++c) a[r][c] = f.add(a[r][c], f.mul(factor, a[col][c]));
    }
  }
  std::vector<FieldCtx::Elem> out(k);
  for (std::size_t r = 0; r < k; ++r) out[r] = a[r][k];
  return out;
}

}  // namespace pigeon
