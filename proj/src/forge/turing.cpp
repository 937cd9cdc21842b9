#include "pigeon/forge/turing.hpp"

#include <memory>
#include <sstream>

#include "pigeon/error.hpp"

namespace pigeon {

TuringMachine::TuringMachine(std::size_t states, std::size_t start, std::size_t halt)
    : states_(states), start_(start), halt_(halt), table_(states * kAlphabet.size()) {
  require(states >= 1 && start < states && halt < states, Errc::invalid_argument, "start and halt must be valid states");
}

std::size_t TuringMachine::symbol_index(char c) {
  auto p = kAlphabet.find(c);
  require(p != std::string_view::npos, Errc::invalid_argument, std::string("unknown tape symbol '") + c + "'");
  return p;
}

void TuringMachine::set(std::size_t state, char read, Action a) {
  require(state < states_ && a.next < states_, Errc::invalid_argument, "transition names an unknown state");
  symbol_index(a.write);
  table_[state * kAlphabet.size() + symbol_index(read)] = a;
}

const TuringMachine::Action& TuringMachine::action(std::size_t state, char read) const {
  const auto& a = table_[state * kAlphabet.size() + symbol_index(read)];
  require(a.has_value(), Errc::invalid_argument,
          "no transition for state " + std::to_string(state) + " reading '" + read + "'");
  return *a;
}

bool TuringMachine::total() const noexcept {
  for (std::size_t s = 0; s < states_; ++s) {
    if (s == halt_) continue;
    for (std::size_t c = 0; c < kAlphabet.size(); ++c)
      if (!table_[s * kAlphabet.size() + c]) return false;
  }
  return true;
}

TuringMachine parse_tm(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> states, start, halt;
  struct Rule {
    std::size_t from;
    char read;
    TuringMachine::Action a;
  };
  std::vector<Rule> rules;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    auto bad = [&](const std::string& why) {
      fail(Errc::parse_error, "machine line " + std::to_string(lineno) + ": " + why);
    };
    if (key == "states" || key == "start" || key == "halt") {
      std::size_t v;
      if (!(ls >> v)) bad("expected a number after " + key);
      (key == "states" ? states : key == "start" ? start : halt) = v;
    } else if (key == "delta") {
      Rule r{};
      std::string arrow, dir;
      if (!(ls >> r.from >> r.read >> arrow >> r.a.next >> r.a.write >> dir) || arrow != "->" ||
          (dir != "L" && dir != "R"))
        bad("expected 'delta <state> <read> -> <state> <write> <L|R>'");
      r.a.right = dir == "R";
      rules.push_back(r);
    } else {
      bad("unknown keyword '" + key + "'");
    }
  }
  require(states && start && halt, Errc::parse_error, "machine needs states, start and halt lines");
  TuringMachine m(*states, *start, *halt);
  for (const auto& r : rules) m.set(r.from, r.read, r.a);
  require(m.total(), Errc::parse_error, "transition table is not total");
  return m;
}

std::string to_text(const TuringMachine& m) {
  std::ostringstream out;
  out << "states " << m.states() << "\nstart " << m.start() << "\nhalt " << m.halt() << "\n";
  for (std::size_t s = 0; s < m.states(); ++s) {
    if (s == m.halt()) continue;
    for (char c : TuringMachine::kAlphabet) {
      const auto& a = m.action(s, c);
      out << "delta " << s << ' ' << c << " -> " << a.next << ' ' << a.write << ' ' << (a.right ? 'R' : 'L') << "\n";
    }
  }
  return out.str();
}

TmResult tm_run(const TuringMachine& m, const BitString& program, std::size_t steps) {
  std::string tape;
  for (std::size_t i = 0; i < program.size(); ++i) tape.push_back(program[i] ? 'b' : 'a');
  std::size_t head = 0, state = m.start();
  TmResult res;
  while (state != m.halt()) {
    if (res.steps == steps) return res;
    if (head >= tape.size()) tape.resize(head + 1, '_');
    const auto& a = m.action(state, tape[head]);
    tape[head] = a.write;
    state = a.next;
    if (a.right) {
      ++head;
    } else if (head > 0) {
      --head;
    }
    ++res.steps;
  }
  res.halted = true;
  for (char c : tape)
    if (c == '0' || c == '1') res.output.push_back(c);
  return res;
}

namespace {
void fill(TuringMachine& m, std::size_t state, TuringMachine::Action a) {
  for (char c : TuringMachine::kAlphabet) m.set(state, c, a);
}
}  // namespace

TuringMachine copy_machine() {
  TuringMachine m(3, 0, 2);
  fill(m, 0, {1, '_', false});
  m.set(0, 'a', {0, '0', true});
  m.set(0, 'b', {0, '1', true});
  fill(m, 1, {2, '_', true});
  for (char c : std::string_view("01ab")) m.set(1, c, {2, c, true});
  return m;
}

TuringMachine halting_machine() { return TuringMachine(1, 0, 0); }

TuringMachine looping_machine() {
  TuringMachine m(2, 0, 1);
  for (char c : TuringMachine::kAlphabet) m.set(0, c, {0, c, false});
  return m;
}

StretchMap phi_kt(std::size_t n, const TuringMachine& m, std::size_t t) {
  require(n >= 2, Errc::small_n, "K^t instances need n >= 2");
  require(m.total(), Errc::invalid_argument, "machine transition table must be total");
  auto machine = std::make_shared<TuringMachine>(m);
  auto eval = [machine, n, t](const BitString& x) {
    BitString out(n);
    std::size_t first = 0;
    while (first < x.size() && !x[first]) ++first;
    if (first == x.size()) return out;
    auto run = tm_run(*machine, x.slice(first + 1, x.size() - first - 1), t);
    if (!run.halted) return out;
    for (std::size_t i = 0; i < n && i < run.output.size(); ++i) out.set(i, run.output[i] == '1');
    return out;
  };
  return StretchMap(n - 1, n, MapKind::Kt, "kt n=" + std::to_string(n) + " t=" + std::to_string(t), eval);
}

}  // namespace pigeon
