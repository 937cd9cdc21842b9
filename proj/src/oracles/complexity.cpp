#include "pigeon/complexity.hpp"

#include <algorithm>
#include <vector>

#include "pigeon/error.hpp"

namespace pigeon {

namespace {

std::uint64_t domain_mask(std::size_t n_in) {
  const std::size_t points = std::size_t{1} << n_in;
  return points >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << points) - 1);
}

class Enumerator {
 public:
  // Search mode: stops at the first circuit of exactly `limit` gates whose
  // last gate agrees with `target` on `care`.
  Enumerator(std::size_t n_in, std::size_t limit) : n_in_(n_in), limit_(limit), mask_(domain_mask(n_in)) {
    for (std::size_t j = 0; j < n_in; ++j) tab_.push_back(input_word(j, n_in));
  }

  std::optional<Circuit> search(std::uint64_t target, std::uint64_t care) {
    target_ = target;
    care_ = care;
    collect_ = nullptr;
    if (dfs()) return to_circuit();
    return std::nullopt;
  }

  void collect(std::set<std::uint64_t>& out) {
    collect_ = &out;
    for (auto t : tab_) out.insert(t);
    dfs();
  }

 private:
  bool try_gate(GateKind kind, Ref a, Ref b) {
    const std::size_t g = gates_.size();
    std::uint64_t t = 0;
    switch (kind) {
      case GateKind::And: t = tab_[a] & tab_[b]; break;
      case GateKind::Or: t = tab_[a] | tab_[b]; break;
      case GateKind::Not: t = ~tab_[a] & mask_; break;
    }
    if (std::find(tab_.begin(), tab_.end(), t) != tab_.end()) return false;
    if (g > 0) {
      const Ref prev = static_cast<Ref>(n_in_ + g - 1);
      const bool reads_prev = a == prev || (kind != GateKind::Not && b == prev);
      if (!reads_prev && t < tab_[prev]) return false;
    }
    // Fresh uses of gates nobody read yet.
    std::size_t consumed = 0;
    auto fresh = [&](Ref r) { return r >= n_in_ && uses_[r - n_in_] == 0; };
    if (fresh(a)) ++consumed;
    if (kind != GateKind::Not && b != a && fresh(b)) ++consumed;
    const std::size_t unused_after = unused_ + 1 - consumed;
    if (unused_after > limit_ - g) return false;

    const bool last = g + 1 == limit_;
    if (collect_ == nullptr && last) {
      if (unused_after != 1 || (t & care_) != target_) return false;
      gates_.push_back(Gate{kind, a, b});
      return true;
    }
    if (collect_ != nullptr) collect_->insert(t);
    if (last) return false;

    if (a >= n_in_) ++uses_[a - n_in_];
    if (kind != GateKind::Not && b >= n_in_) ++uses_[b - n_in_];
    gates_.push_back(Gate{kind, a, b});
    uses_.push_back(0);
    tab_.push_back(t);
    const std::size_t saved = unused_;
    unused_ = unused_after;
    if (dfs()) return true;
    unused_ = saved;
    tab_.pop_back();
    uses_.pop_back();
    gates_.pop_back();
    if (a >= n_in_) --uses_[a - n_in_];
    if (kind != GateKind::Not && b >= n_in_) --uses_[b - n_in_];
    return false;
  }

  bool dfs() {
    if (gates_.size() >= limit_) return false;
    const auto wires = static_cast<Ref>(tab_.size());
    for (Ref a = 0; a < wires; ++a)
      for (Ref b = a + 1; b < wires; ++b)
        if (try_gate(GateKind::And, a, b)) return true;
    for (Ref a = 0; a < wires; ++a)
      for (Ref b = a + 1; b < wires; ++b)
        if (try_gate(GateKind::Or, a, b)) return true;
    for (Ref a = 0; a < wires; ++a)
      if (try_gate(GateKind::Not, a, 0)) return true;
    return false;
  }

  Circuit to_circuit() const {
    Circuit c(n_in_);
    for (const Gate& g : gates_) c.add_gate(g.kind, g.a, g.b);
    c.add_output(static_cast<Ref>(c.wire_count() - 1));
    return c;
  }

  std::size_t n_in_;
  std::size_t limit_;
  std::uint64_t mask_;
  std::uint64_t target_ = 0;
  std::uint64_t care_ = 0;
  std::set<std::uint64_t>* collect_ = nullptr;
  std::vector<std::uint64_t> tab_;
  std::vector<Gate> gates_;
  std::vector<std::uint8_t> uses_;
  std::size_t unused_ = 0;
};

}  // namespace

TruthTable table_from_word(std::uint64_t word, std::size_t n) {
  require(n <= 64, Errc::invalid_argument, "table words hold at most 64 positions");
  BitString bits(n);
  for (std::size_t p = 0; p < n; ++p) bits.set(p, (word >> p) & 1U);
  return TruthTable(std::move(bits));
}

std::uint64_t word_from_table(const TruthTable& tt) {
  require(tt.length() <= 64, Errc::invalid_argument, "table words hold at most 64 positions");
  std::uint64_t w = 0;
  for (std::size_t p = 0; p < tt.length(); ++p)
    if (tt[p]) w |= std::uint64_t{1} << p;
  return w;
}

ComplexityResult exact_complexity(const TruthTable& tt, std::size_t s_cap, std::size_t budget_cap) {
  const std::size_t n = tt.length();
  require(n >= 1, Errc::invalid_argument, "empty truth table");
  require(n <= kMaxEnumerationLength, Errc::budget,
          "exact complexity enumerates tables of length <= 64; got " + std::to_string(n));
  require(s_cap <= budget_cap, Errc::budget,
          "size cap " + std::to_string(s_cap) + " exceeds the enumeration budget " + std::to_string(budget_cap));
  const std::size_t n_in = table_inputs(n);
  const std::uint64_t care = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  const std::uint64_t target = word_from_table(tt);
  for (std::size_t j = 0; j < n_in; ++j) {
    if ((input_word(j, n_in) & care) == target) {
      Circuit c(n_in);
      c.add_output(static_cast<Ref>(j));
      return ComplexityReport{tt, 0, std::move(c)};
    }
  }
  for (std::size_t s = 1; s <= s_cap; ++s) {
    Enumerator e(n_in, s);
    if (auto c = e.search(target, care)) return ComplexityReport{tt, s, std::move(*c)};
  }
  return AboveCap{s_cap};
}

std::set<std::uint64_t> functions_up_to(std::size_t n_in, std::size_t s) {
  require(n_in >= 1 && n_in <= 6, Errc::budget, "function enumeration supports 1..6 inputs");
  std::set<std::uint64_t> out;
  Enumerator e(n_in, s);
  e.collect(out);
  return out;
}

std::optional<TruthTable> easy_witness_search(std::size_t n, std::size_t s,
                                              const std::function<bool(const TruthTable&)>& checker,
                                              std::size_t budget_cap) {
  require(n >= 1 && n <= kMaxEnumerationLength, Errc::budget, "easy-witness search supports lengths 1..64");
  require(s <= budget_cap, Errc::budget, "size bound exceeds the enumeration budget");
  std::set<TruthTable> tables;
  for (std::uint64_t w : functions_up_to(table_inputs(n), s)) tables.insert(table_from_word(w, n));
  for (const auto& t : tables)
    if (checker(t)) return t;
  return std::nullopt;
}

}  // namespace pigeon
