#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <variant>

#include "pigeon/circuit.hpp"

namespace pigeon {

struct ComplexityReport {
  TruthTable tt;
  std::size_t s_star = 0;
  Circuit witness;
};

// No circuit with at most `cap` gates computes the table.
struct AboveCap {
  std::size_t cap = 0;
};

using ComplexityResult = std::variant<ComplexityReport, AboveCap>;

inline constexpr std::size_t kMaxEnumerationLength = 64;
inline constexpr std::size_t kDefaultComplexityCap = 6;

// Exact minimum circuit size (NOT gates counted) by enumerating circuits in
// increasing size. Pruning keeps at least one minimum circuit of every
// function: no two wires compute the same function, every gate feeds the
// output, adjacent independent gates appear in increasing table order, and
// AND/OR refs are ordered.
ComplexityResult exact_complexity(const TruthTable& tt, std::size_t s_cap = kDefaultComplexityCap,
                                  std::size_t budget_cap = kDefaultComplexityCap);

// Whole-domain tables (bit p = value at position p) of every function on
// n_in <= 6 inputs whose circuit complexity is at most s.
std::set<std::uint64_t> functions_up_to(std::size_t n_in, std::size_t s);

// Smallest (lexicographically) n-bit string of complexity <= s accepted by
// the checker, or nothing.
std::optional<TruthTable> easy_witness_search(std::size_t n, std::size_t s,
                                              const std::function<bool(const TruthTable&)>& checker,
                                              std::size_t budget_cap = kDefaultComplexityCap);

// Converts a whole-domain table word to a truth table of length n and back.
TruthTable table_from_word(std::uint64_t word, std::size_t n);
std::uint64_t word_from_table(const TruthTable& tt);

}  // namespace pigeon
