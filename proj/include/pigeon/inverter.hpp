#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "pigeon/bits.hpp"
#include "pigeon/stretch_map.hpp"

namespace pigeon {

struct Inversion {
  std::optional<BitString> preimage;  // empty: the target is outside the range
  bool member() const noexcept { return preimage.has_value(); }
};

// "Is y in the range of the map; if so, give a preimage."
class Inverter {
 public:
  virtual ~Inverter() = default;

  Inversion invert(const StretchMap& map, const BitString& y);
  std::size_t calls() const noexcept { return calls_; }
  void reset_calls() noexcept { calls_ = 0; }
  // Canonical inverters always return the lexicographically smallest preimage.
  virtual bool canonical() const noexcept = 0;

 protected:
  virtual Inversion do_invert(const StretchMap& map, const BitString& y) = 0;

 private:
  std::size_t calls_ = 0;
};

class BruteInverter final : public Inverter {
 public:
  static constexpr std::size_t kDefaultBudgetBits = 28;
  explicit BruteInverter(std::size_t budget_bits = kDefaultBudgetBits) : budget_bits_(budget_bits) {}
  bool canonical() const noexcept override { return true; }

 protected:
  Inversion do_invert(const StretchMap& map, const BitString& y) override;

 private:
  std::size_t budget_bits_;
};

// One external solver process per query, DIMACS file in a temp directory,
// answer read from the `s` and `v` lines of its standard output.
class SatInverter final : public Inverter {
 public:
  explicit SatInverter(std::string command, bool keep_cnf = false);
  bool canonical() const noexcept override { return false; }
  const std::string& last_cnf_path() const noexcept { return last_cnf_; }

 protected:
  Inversion do_invert(const StretchMap& map, const BitString& y) override;

 private:
  std::string command_;
  bool keep_cnf_;
  std::string last_cnf_;
  std::size_t counter_ = 0;
};

Inversion invert_brute(const StretchMap& map, const BitString& y,
                       std::size_t budget_bits = BruteInverter::kDefaultBudgetBits);
Inversion invert_sat(const StretchMap& map, const BitString& y, const std::string& solver_command);

// Solver lookup: explicit command, then PIGEON_SAT_CMD, then well-known
// solvers on PATH, then the bundled python-sat adapter when importable.
std::optional<std::string> find_sat_command(const std::string& explicit_command = "");

// True iff the inverter reports y outside the range.
bool verify_solution(const StretchMap& map, const BitString& y, Inverter& inverter);

}  // namespace pigeon
