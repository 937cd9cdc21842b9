#pragma once

#include <span>

#include "pigeon/circuit.hpp"
#include "pigeon/gadgets.hpp"

namespace pigeon {

// Shannon cofactor synthesis on the most significant variable first, sharing
// equal subfunctions. Size is at most 4 * max(N, 2). Positions past N are
// treated as 0.
Circuit synthesize(const TruthTable& tt);

// Same, inside an existing builder: `vars` are the table's input wires
// (MSB-first); tt.length() may be at most 2^vars.size().
Ref synthesize_into(CircuitBuilder& b, std::span<const Ref> vars, const TruthTable& tt);

}  // namespace pigeon
