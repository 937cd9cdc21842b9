#include "pigeon/error.hpp"
#include "pigeon/verifiers.hpp"

namespace pigeon {

namespace {

// Own step loop, kept apart from the instance builder's simulator.
std::optional<std::string> simulate(const TuringMachine& m, std::uint64_t program, std::size_t len, std::size_t t) {
  std::string tape(len, 'a');
  for (std::size_t i = 0; i < len; ++i)
    if ((program >> (len - 1 - i)) & 1U) tape[i] = 'b';
  std::size_t head = 0, state = m.start();
  for (std::size_t step = 0; state != m.halt(); ++step) {
    if (step == t) return std::nullopt;
    if (head == tape.size()) tape.push_back('_');
    const auto& a = m.action(state, tape[head]);
    tape[head] = a.write;
    state = a.next;
    head = a.right ? head + 1 : (head == 0 ? 0 : head - 1);
  }
  std::string out;
  for (char c : tape)
    if (c == '0' || c == '1') out.push_back(c);
  return out;
}

}  // namespace

std::optional<std::size_t> kt_complexity(const BitString& y, const TuringMachine& m, std::size_t t,
                                         std::size_t len_cap) {
  require(len_cap <= 20, Errc::budget, "kt_complexity enumerates 2^len programs; len_cap must be <= 20");
  const std::string want = y.to_string();
  for (std::size_t len = 0; len <= len_cap; ++len)
    for (std::uint64_t p = 0; p < (std::uint64_t{1} << len); ++p) {
      auto out = simulate(m, p, len, t);
      if (out && *out == want) return len;
    }
  return std::nullopt;
}

}  // namespace pigeon
