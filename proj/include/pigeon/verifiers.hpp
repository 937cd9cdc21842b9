#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pigeon/bits.hpp"
#include "pigeon/circuit.hpp"
#include "pigeon/forge/turing.hpp"
#include "pigeon/gf2m.hpp"
#include "pigeon/matrix.hpp"
#include "pigeon/numeric.hpp"

namespace pigeon {

// |Pr_{x in R}[C(x) = 1] - Pr_{y uniform}[C(y) = 1]|, with R a multiset.
Rational prg_advantage(std::span<const BitString> r, const Circuit& c);

// Largest advantage over every function computed by a circuit with at most
// n gates on n inputs; `best_table` receives a maximizing table word.
Rational max_small_circuit_advantage(std::span<const BitString> r, std::size_t n,
                                     std::uint64_t* best_table = nullptr);
bool is_prg(std::span<const BitString> r, std::size_t n);

struct YaoPredictor {
  std::size_t index = 0;  // 0-based position of the predicted bit
  Circuit predictor;      // reads the other n - 1 bits
  Rational correctness;
};
YaoPredictor yao_predictor(const Circuit& c, std::span<const BitString> r);

// |Pr_{x in X, y in Y}[g(x || y) = 1] - 1/2| where g is the low bit of the
// polynomial with the given coefficients over GF(2^(2n)).
Rational extractor_bias(std::span<const FieldCtx::Elem> alphas, std::size_t n,
                        std::span<const FieldCtx::Elem> xs, std::span<const FieldCtx::Elem> ys);
bool is_extractor(std::span<const FieldCtx::Elem> alphas, std::size_t n, std::size_t k, const Rational& eps);

// Minimum Hamming distance from M to a matrix of rank <= r over F2.
std::size_t rigidity_distance(const Matrix& m, std::size_t r);

// Length of the shortest program (<= len_cap bits) on which the machine
// outputs y within t steps; empty when there is none.
std::optional<std::size_t> kt_complexity(const BitString& y, const TuringMachine& m, std::size_t t,
                                         std::size_t len_cap);

}  // namespace pigeon
