#include "pigeon/forge/manifest.hpp"

#include <sstream>

#include "pigeon/error.hpp"
#include "pigeon/forge/extractor.hpp"
#include "pigeon/forge/hard_tt.hpp"
#include "pigeon/forge/prg.hpp"
#include "pigeon/forge/rigid.hpp"
#include "pigeon/forge/turing.hpp"

namespace pigeon {

std::string Manifest::kind() const { return get("kind"); }

std::string Manifest::get(const std::string& key) const {
  auto it = values.find(key);
  require(it != values.end(), Errc::parse_error, "manifest is missing '" + key + "'");
  return it->second;
}

std::string Manifest::get_or(const std::string& key, const std::string& fallback) const {
  auto it = values.find(key);
  return it == values.end() ? fallback : it->second;
}

std::optional<std::size_t> Manifest::find_size(const std::string& key) const {
  auto it = values.find(key);
  if (it == values.end()) return std::nullopt;
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(it->second, &used);
    if (used == it->second.size()) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  fail(Errc::parse_error, "manifest value " + key + "=" + it->second + " is not a non-negative integer");
}

std::size_t Manifest::get_size(const std::string& key) const {
  auto v = find_size(key);
  require(v.has_value(), Errc::parse_error, "manifest is missing '" + key + "'");
  return *v;
}

Manifest parse_manifest(std::string_view text) {
  Manifest m;
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::string> block;
  std::string body;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (block) {
      if (line == "end") {
        m.blocks[*block] = body;
        block.reset();
        body.clear();
      } else {
        body += line + "\n";
      }
      continue;
    }
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("begin ", 0) == 0) {
      block = line.substr(6);
      continue;
    }
    auto eq = line.find('=');
    require(eq != std::string::npos && eq > 0, Errc::parse_error,
            "manifest line " + std::to_string(lineno) + ": expected key=value");
    m.values[line.substr(0, eq)] = line.substr(eq + 1);
  }
  require(!block, Errc::parse_error, "manifest block '" + block.value_or("") + "' is not closed");
  return m;
}

std::string to_text(const Manifest& m) {
  std::string out;
  if (auto it = m.values.find("kind"); it != m.values.end()) out += "kind=" + it->second + "\n";
  for (const auto& [k, v] : m.values)
    if (k != "kind") out += k + "=" + v + "\n";
  for (const auto& [name, body] : m.blocks) out += "begin " + name + "\n" + body + "end\n";
  return out;
}

StretchMap build_map(const Manifest& m) {
  const std::string kind = m.kind();
  if (kind == "hard_tt") {
    const std::size_t n = m.get_size("N");
    auto s = m.find_size("s_max");
    return s ? phi_hard_tt(n, *s) : phi_hard_tt(n);
  }
  if (kind == "prg") {
    const std::size_t n = m.get_size("n");
    PrgParams p = PrgParams::faithful(n, m.find_size("c").value_or(16));
    if (auto count = m.find_size("count")) p.count = *count;
    if (auto eps = m.values.find("eps"); eps != m.values.end()) p.eps = parse_rational(eps->second);
    return phi_prg(p);
  }
  if (kind == "extractor") {
    return phi_extractor(m.get_size("n"), parse_rational(m.get("eps")), m.find_size("d"));
  }
  if (kind == "rigid") {
    return phi_rigid(m.get_size("n"), m.get_size("r"), m.get_size("s"),
                     static_cast<unsigned>(m.find_size("q").value_or(2)));
  }
  if (kind == "kt") {
    auto tm = m.blocks.find("tm");
    TuringMachine machine = tm == m.blocks.end() ? copy_machine() : parse_tm(tm->second);
    return phi_kt(m.get_size("n"), machine, m.get_size("t"));
  }
  if (kind == "circuit") {
    auto c = m.blocks.find("circuit");
    require(c != m.blocks.end(), Errc::parse_error, "circuit instance needs a 'begin circuit' block");
    StretchMap map = StretchMap::from_circuit(parse_circuit(c->second));
    require_stretching(map, "circuit instance");
    return map;
  }
  fail(Errc::parse_error, "unknown instance kind '" + kind + "'");
}

}  // namespace pigeon
