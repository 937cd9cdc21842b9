#include "pigeon/cnf.hpp"

#include <sstream>

#include "pigeon/error.hpp"

namespace pigeon {

Cnf to_cnf(const Circuit& c, const BitString& target) {
  require(target.size() == c.num_outputs(), Errc::invalid_argument, "target length must equal output count");
  Cnf f;
  f.num_vars = c.wire_count();
  auto var = [](Ref r) { return static_cast<int>(r) + 1; };
  for (std::size_t g = 0; g < c.size(); ++g) {
    const Gate& gt = c.gates()[g];
    int z = var(c.gate_ref(g)), a = var(gt.a), b = var(gt.b);
    switch (gt.kind) {
      case GateKind::And:
        f.clauses.push_back({-z, a});
        f.clauses.push_back({-z, b});
        f.clauses.push_back({z, -a, -b});
        break;
      case GateKind::Or:
        f.clauses.push_back({z, -a});
        f.clauses.push_back({z, -b});
        f.clauses.push_back({-z, a, b});
        break;
      case GateKind::Not:
        f.clauses.push_back({z, a});
        f.clauses.push_back({-z, -a});
        break;
    }
  }
  for (std::size_t o = 0; o < c.num_outputs(); ++o) {
    int v = var(c.outputs()[o]);
    f.clauses.push_back({target[o] ? v : -v});
  }
  return f;
}

std::string Cnf::to_dimacs() const {
  std::ostringstream out;
  out << "p cnf " << num_vars << ' ' << clauses.size() << '\n';
  for (const auto& cl : clauses) {
    for (int lit : cl) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace pigeon
