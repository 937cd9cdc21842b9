#include "pigeon/synthesis.hpp"

#include <map>

#include "pigeon/error.hpp"

namespace pigeon {

namespace {

class Shannon {
 public:
  Shannon(CircuitBuilder& b, std::span<const Ref> vars) : b_(b), vars_(vars) {}

  Ref build(const BitString& f, std::size_t depth) {
    if (is_const(f, false)) return b_.zero();
    if (is_const(f, true)) return b_.one();
    auto key = std::make_pair(depth, f);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const std::size_t half = f.size() / 2;
    BitString f0 = f.slice(0, half), f1 = f.slice(half, half);
    Ref x = vars_[depth];
    Ref r;
    if (f0 == f1) {
      r = build(f0, depth + 1);
    } else if (is_const(f0, false) && is_const(f1, true)) {
      r = x;
    } else if (is_const(f0, true) && is_const(f1, false)) {
      r = b_.lnot(x);
    } else if (is_const(f0, false)) {
      r = b_.land(x, build(f1, depth + 1));
    } else if (is_const(f1, false)) {
      r = b_.land(b_.lnot(x), build(f0, depth + 1));
    } else if (is_const(f0, true)) {
      r = b_.lor(b_.lnot(x), build(f1, depth + 1));
    } else if (is_const(f1, true)) {
      r = b_.lor(x, build(f0, depth + 1));
    } else {
      Ref r0 = build(f0, depth + 1);
      Ref r1 = build(f1, depth + 1);
      r = b_.mux2(x, r0, r1);
    }
    memo_.emplace(std::move(key), r);
    return r;
  }

 private:
  static bool is_const(const BitString& f, bool v) {
    for (std::size_t i = 0; i < f.size(); ++i)
      if (f[i] != v) return false;
    return true;
  }

  CircuitBuilder& b_;
  std::span<const Ref> vars_;
  std::map<std::pair<std::size_t, BitString>, Ref> memo_;
};

}  // namespace

Ref synthesize_into(CircuitBuilder& b, std::span<const Ref> vars, const TruthTable& tt) {
  require(!vars.empty() && vars.size() < 30, Errc::invalid_argument, "synthesis needs 1..29 variables");
  const std::size_t full = std::size_t{1} << vars.size();
  require(tt.length() <= full, Errc::invalid_argument, "table longer than the variables can address");
  BitString padded = tt.bits();
  padded.resize(full);
  Shannon s(b, vars);
  return s.build(padded, 0);
}

Circuit synthesize(const TruthTable& tt) {
  require(tt.length() >= 1, Errc::invalid_argument, "cannot synthesize an empty table");
  const std::size_t n_in = table_inputs(tt.length());
  CircuitBuilder b(n_in);
  std::vector<Ref> vars(n_in);
  for (std::size_t j = 0; j < n_in; ++j) vars[j] = static_cast<Ref>(j);
  Ref out = synthesize_into(b, vars, tt);
  return std::move(b).finish({out});
}

}  // namespace pigeon
