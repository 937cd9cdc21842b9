#include "pigeon/inverter.hpp"

#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <vector>

#include "pigeon/cnf.hpp"
#include "pigeon/error.hpp"

namespace pigeon {

Inversion Inverter::invert(const StretchMap& map, const BitString& y) {
  require(y.size() == map.out_width(), Errc::invalid_argument,
          "target has " + std::to_string(y.size()) + " bits, map outputs " + std::to_string(map.out_width()));
  ++calls_;
  return do_invert(map, y);
}

Inversion BruteInverter::do_invert(const StretchMap& map, const BitString& y) {
  const std::size_t a = map.in_width();
  require(a <= budget_bits_, Errc::budget,
          "brute-force inversion over " + std::to_string(a) + " input bits exceeds the budget of " +
              std::to_string(budget_bits_) + " bits");
  const std::uint64_t count = std::uint64_t{1} << a;
  if (map.packable()) {
    const std::uint64_t target = y.to_uint();
    for (std::uint64_t x = 0; x < count; ++x)
      if (map.eval_packed(x) == target) return {BitString::from_uint(x, a)};
    return {};
  }
  for (std::uint64_t x = 0; x < count; ++x) {
    BitString in = BitString::from_uint(x, a);
    if (map(in) == y) return {std::move(in)};
  }
  return {};
}

SatInverter::SatInverter(std::string command, bool keep_cnf) : command_(std::move(command)), keep_cnf_(keep_cnf) {
  require(!command_.empty(), Errc::invalid_argument, "SAT inverter needs a solver command");
}

namespace {

struct SolverAnswer {
  bool sat = false;
  std::vector<int> literals;
};

SolverAnswer run_solver(const std::string& command, const std::string& path) {
  const std::string cmd = command + " '" + path + "' 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  require(pipe != nullptr, Errc::solver_failure, "could not start `" + command + "`");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe.get()) != nullptr) out += buf.data();
  pipe.reset();

  SolverAnswer ans;
  bool status_seen = false;
  std::istringstream lines(out);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind("s ", 0) == 0) {
      if (line.find("UNSATISFIABLE") != std::string::npos) {
        ans.sat = false;
        status_seen = true;
      } else if (line.find("SATISFIABLE") != std::string::npos) {
        ans.sat = true;
        status_seen = true;
      }
    } else if (line.rfind("v", 0) == 0) {
      std::istringstream ls(line.substr(1));
      int lit = 0;
      while (ls >> lit)
        if (lit != 0) ans.literals.push_back(lit);
    }
  }
  require(status_seen, Errc::solver_failure, "solver `" + command + "` printed no `s` status line");
  return ans;
}

}  // namespace

Inversion SatInverter::do_invert(const StretchMap& map, const BitString& y) {
  const Circuit c = map.compile();
  const Cnf cnf = to_cnf(c, y);
  namespace fs = std::filesystem;
  fs::path path = fs::temp_directory_path() /
                  ("pigeon-" + std::to_string(::getpid()) + "-" + std::to_string(counter_++) + ".cnf");
  {
    std::ofstream f(path);
    require(static_cast<bool>(f), Errc::solver_failure, "cannot write " + path.string());
    f << cnf.to_dimacs();
  }
  last_cnf_ = path.string();
  SolverAnswer ans;
  try {
    ans = run_solver(command_, path.string());
  } catch (...) {
    if (!keep_cnf_) fs::remove(path);
    throw;
  }
  if (!keep_cnf_) fs::remove(path);
  if (!ans.sat) return {};
  BitString x(map.in_width());
  for (int lit : ans.literals) {
    std::size_t v = static_cast<std::size_t>(lit > 0 ? lit : -lit);
    if (v >= 1 && v <= x.size()) x.set(v - 1, lit > 0);
  }
  require(map(x) == y, Errc::solver_failure, "solver model does not map to the target");
  return {std::move(x)};
}

Inversion invert_brute(const StretchMap& map, const BitString& y, std::size_t budget_bits) {
  BruteInverter inv(budget_bits);
  return inv.invert(map, y);
}

Inversion invert_sat(const StretchMap& map, const BitString& y, const std::string& solver_command) {
  SatInverter inv(solver_command);
  return inv.invert(map, y);
}

namespace {

std::optional<std::string> on_path(const std::string& name) {
  const char* path = std::getenv("PATH");
  if (path == nullptr) return std::nullopt;
  std::istringstream dirs(path);
  std::string dir;
  while (std::getline(dirs, dir, ':')) {
    if (dir.empty()) continue;
    std::filesystem::path p = std::filesystem::path(dir) / name;
    if (::access(p.c_str(), X_OK) == 0) return p.string();
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> find_sat_command(const std::string& explicit_command) {
  if (!explicit_command.empty()) return explicit_command;
  if (const char* env = std::getenv("PIGEON_SAT_CMD"); env != nullptr && *env != '\0') return std::string(env);
  for (const char* name : {"kissat", "cadical", "cryptominisat5", "picosat"}) {
    if (auto p = on_path(name)) return *p;
  }
#ifdef PIGEON_PYSAT_ADAPTER
  if (std::filesystem::exists(PIGEON_PYSAT_ADAPTER) &&
      std::system("python3 -c 'import pysat.solvers' >/dev/null 2>&1") == 0)
    return std::string("python3 ") + PIGEON_PYSAT_ADAPTER;
#endif
  return std::nullopt;
}

bool verify_solution(const StretchMap& map, const BitString& y, Inverter& inverter) {
  return !inverter.invert(map, y).member();
}

}  // namespace pigeon
