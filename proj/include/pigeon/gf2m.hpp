#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pigeon {

// GF(2^m) with elements stored as polynomials over GF(2): bit j is the
// coefficient of x^j. The modulus is the numerically smallest irreducible
// polynomial of degree m.
class FieldCtx {
 public:
  using Elem = std::uint64_t;

  explicit FieldCtx(unsigned m);

  unsigned degree() const noexcept { return m_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t order() const noexcept { return std::uint64_t{1} << m_; }

  Elem add(Elem a, Elem b) const noexcept { return a ^ b; }
  Elem mul(Elem a, Elem b) const noexcept;
  Elem inv(Elem a) const;  // throws on 0
  Elem pow(Elem a, std::uint64_t e) const noexcept;

 private:
  unsigned m_;
  std::uint64_t modulus_;
};

bool is_irreducible_gf2(std::uint64_t poly);

// sum_i coeffs[i] * x^i, by Horner's rule.
FieldCtx::Elem poly_eval(const FieldCtx& f, std::span<const FieldCtx::Elem> coeffs, FieldCtx::Elem x);

// Coefficients c with poly_eval(c, points[i]) == values[i], by Gaussian
// elimination on the Vandermonde matrix. Points must be distinct.
std::vector<FieldCtx::Elem> vandermonde_solve(const FieldCtx& f, std::span<const FieldCtx::Elem> points,
                                              std::span<const FieldCtx::Elem> values);

}  // namespace pigeon
