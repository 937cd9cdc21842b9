#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pigeon/bits.hpp"
#include "pigeon/stretch_map.hpp"

namespace pigeon {

// Single-tape machine over the alphabet {0, 1, a, b, _}. Programs are written
// onto the tape as a (for 0) and b (for 1), so a machine must rewrite them to
// produce output; '_' is the blank.
class TuringMachine {
 public:
  struct Action {
    std::size_t next = 0;
    char write = '_';
    bool right = true;
  };

  static constexpr std::string_view kAlphabet = "01ab_";

  TuringMachine(std::size_t states, std::size_t start, std::size_t halt);

  std::size_t states() const noexcept { return states_; }
  std::size_t start() const noexcept { return start_; }
  std::size_t halt() const noexcept { return halt_; }

  void set(std::size_t state, char read, Action a);
  const Action& action(std::size_t state, char read) const;
  // Every non-halting state has a rule for every symbol.
  bool total() const noexcept;

 private:
  static std::size_t symbol_index(char c);
  std::size_t states_, start_, halt_;
  std::vector<std::optional<Action>> table_;
};

TuringMachine parse_tm(std::string_view text);
std::string to_text(const TuringMachine& m);

struct TmResult {
  bool halted = false;
  std::string output;  // 0/1 symbols on the tape in cell order, when halted
  std::size_t steps = 0;
};

TmResult tm_run(const TuringMachine& m, const BitString& program, std::size_t steps);

TuringMachine copy_machine();
TuringMachine halting_machine();
TuringMachine looping_machine();

// Maps 0^* 1 y (n - 1 bits) to the machine's output on y within t steps,
// padded with zeros or cut to n bits; everything else goes to 0^n.
StretchMap phi_kt(std::size_t n, const TuringMachine& m, std::size_t t);

}  // namespace pigeon
