#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pigeon/bits.hpp"
#include "pigeon/circuit.hpp"

namespace pigeon {

struct Cnf {
  std::size_t num_vars = 0;
  std::vector<std::vector<int>> clauses;
  std::string to_dimacs() const;
};

// Tseitin encoding of "circuit outputs equal target". Variable j+1 is input j,
// gate g is variable n_in + g + 1.
Cnf to_cnf(const Circuit& c, const BitString& target);

}  // namespace pigeon
