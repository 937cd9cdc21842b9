#include "pigeon/property_circuits.hpp"

#include <sstream>

#include "pigeon/error.hpp"
#include "pigeon/gadgets.hpp"
#include "pigeon/synthesis.hpp"

namespace pigeon {

std::size_t SizeReport::sum() const noexcept {
  std::size_t s = 0;
  for (const auto& [name, size] : parts) s += size;
  return s;
}

std::size_t SizeReport::part(std::string_view name) const {
  std::size_t s = 0;
  for (const auto& [n, size] : parts)
    if (n == name) s += size;
  return s;
}

std::string SizeReport::to_text() const {
  std::string out;
  for (const auto& [name, size] : parts) out += name + "=" + std::to_string(size) + "\n";
  out += "total=" + std::to_string(total) + "\n";
  return out;
}

namespace {

// Synthesizes `tt` (2^vars.size() entries) as its own circuit and embeds it.
Ref embed_table(CircuitBuilder& b, std::span<const Ref> vars, const TruthTable& tt, SizeReport& report,
                const std::string& name) {
  Circuit part = synthesize(tt);
  report.parts.emplace_back(name, part.size());
  return b.embed(part, vars)[0];
}

std::vector<Ref> input_range(const CircuitBuilder& b, std::size_t from, std::size_t count) {
  std::vector<Ref> v;
  for (std::size_t t = 0; t < count; ++t) v.push_back(b.input(from + t));
  return v;
}

}  // namespace

WitnessCircuit nonrigid_circuit(const Matrix& l, const Matrix& r, const std::vector<SparseEntry>& s) {
  const std::size_t n = l.rows(), rank = l.cols();
  require(n >= 2, Errc::invalid_argument, "non-rigid circuit needs n >= 2");
  require(r.rows() == rank && r.cols() == n, Errc::invalid_argument, "L must be n x r and R must be r x n");
  for (auto v : l.entries()) require(v <= 1, Errc::invalid_argument, "L must be over F2");
  for (auto v : r.entries()) require(v <= 1, Errc::invalid_argument, "R must be over F2");
  const std::size_t w = ceil_log2(n), span = std::size_t{1} << w;

  CircuitBuilder b(2 * w);
  const auto iv = input_range(b, 0, w), jv = input_range(b, w, w);
  WitnessCircuit out;
  SizeReport& rep = out.size;

  std::vector<Ref> lcols, rrows;
  for (std::size_t t = 0; t < rank; ++t) {
    BitString col(span);
    for (std::size_t i = 0; i < n; ++i) col.set(i, l(i, t) != 0);
    lcols.push_back(embed_table(b, iv, TruthTable(col), rep, "L"));
  }
  for (std::size_t t = 0; t < rank; ++t) {
    BitString row(span);
    for (std::size_t j = 0; j < n; ++j) row.set(j, r(t, j) != 0);
    rrows.push_back(embed_table(b, jv, TruthTable(row), rep, "R"));
  }
  BitString stab(span * span);
  for (const auto& e : s) {
    require(e.row < n && e.col < n && e.value <= 1, Errc::invalid_argument, "sparse entry out of range");
    if (e.value) stab.flip(e.row * span + e.col);
  }
  std::vector<Ref> all(iv);
  all.insert(all.end(), jv.begin(), jv.end());
  Ref sref = embed_table(b, all, TruthTable(stab), rep, "S");

  const std::size_t before = b.size();
  Ref ip = rank == 0 ? b.zero() : build_inner_product(b, lcols, rrows);
  Ref result = b.lxor(ip, sref);
  rep.parts.emplace_back("gadgets", b.size() - before);
  out.circuit = std::move(b).finish({result});
  rep.total = out.circuit.size();
  return out;
}

void BitProbeScheme::validate() const {
  require(n >= 1 && n <= 16, Errc::invalid_argument, "scheme needs 1 <= n <= 16");
  require(b >= 1 && k >= 1 && k <= 16, Errc::invalid_argument, "scheme needs b >= 1 and 1 <= k <= 16");
  const std::size_t rows = std::size_t{1} << n;
  require(g.size() == rows && h.size() == rows && z.size() == (std::size_t{1} << k), Errc::invalid_argument,
          "scheme tables have the wrong number of rows");
  for (const auto& row : g) require(row.size() == b, Errc::invalid_argument, "G rows must have b bits");
  for (const auto& row : h) {
    require(row.size() == k, Errc::invalid_argument, "H rows must list k indices");
    for (auto idx : row) require(idx < b, Errc::invalid_argument, "H index outside the memory");
  }
  for (const auto& row : z) require(row.size() == rows, Errc::invalid_argument, "Z rows must have 2^n bits");
}

bool scheme_eval(const BitProbeScheme& s, std::uint64_t x, std::uint64_t y) {
  std::uint64_t w = 0;
  for (std::size_t t = 0; t < s.k; ++t) w = (w << 1) | (s.g[x][s.h[y][t]] ? 1U : 0U);
  return s.z[w][y];
}

BitProbeScheme parse_scheme(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tag;
  BitProbeScheme s;
  require(static_cast<bool>(in >> tag >> s.n >> s.b >> s.k) && tag == "bitprobe", Errc::parse_error,
          "scheme must start with 'bitprobe <n> <b> <k>'");
  require(s.n >= 1 && s.n <= 16 && s.k >= 1 && s.k <= 16, Errc::parse_error, "scheme sizes out of range");
  const std::size_t rows = std::size_t{1} << s.n;
  auto bits_row = [&](std::size_t len, const char* what) {
    std::string row;
    require(static_cast<bool>(in >> row) && row.size() == len, Errc::parse_error,
            std::string("expected a ") + what + " row of " + std::to_string(len) + " bits");
    return BitString::from_string(row);
  };
  for (std::size_t x = 0; x < rows; ++x) s.g.push_back(bits_row(s.b, "G"));
  for (std::size_t y = 0; y < rows; ++y) {
    std::vector<std::size_t> idx(s.k);
    for (auto& v : idx) require(static_cast<bool>(in >> v), Errc::parse_error, "expected k indices per H row");
    s.h.push_back(std::move(idx));
  }
  for (std::size_t w = 0; w < (std::size_t{1} << s.k); ++w) s.z.push_back(bits_row(rows, "Z"));
  try {
    s.validate();
  } catch (const Error& e) {
    fail(Errc::parse_error, e.what());
  }
  return s;
}

std::string to_text(const BitProbeScheme& s) {
  std::ostringstream out;
  out << "bitprobe " << s.n << ' ' << s.b << ' ' << s.k << "\n";
  for (const auto& row : s.g) out << row.to_string() << "\n";
  for (const auto& row : s.h) {
    for (std::size_t t = 0; t < row.size(); ++t) out << (t ? " " : "") << row[t];
    out << "\n";
  }
  for (const auto& row : s.z) out << row.to_string() << "\n";
  return out.str();
}

WitnessCircuit bitprobe_circuit(const BitProbeScheme& s) {
  s.validate();
  const std::size_t n = s.n, rows = std::size_t{1} << n, iw = ceil_log2(s.b);
  CircuitBuilder b(2 * n);
  const auto xv = input_range(b, 0, n), yv = input_range(b, n, n);
  WitnessCircuit out;
  SizeReport& rep = out.size;

  // Probe addresses as functions of y, one circuit per address bit.
  std::vector<std::vector<Ref>> addr(s.k);
  for (std::size_t t = 0; t < s.k; ++t)
    for (std::size_t bit = 0; bit < iw; ++bit) {
      BitString tt(rows);
      for (std::size_t y = 0; y < rows; ++y) tt.set(y, (s.h[y][t] >> (iw - 1 - bit)) & 1U);
      addr[t].push_back(embed_table(b, yv, TruthTable(tt), rep, "H"));
    }
  // Memory contents as functions of x.
  std::vector<Ref> mem;
  for (std::size_t m = 0; m < s.b; ++m) {
    BitString tt(rows);
    for (std::size_t x = 0; x < rows; ++x) tt.set(x, s.g[x][m]);
    mem.push_back(embed_table(b, xv, TruthTable(tt), rep, "G"));
  }
  std::size_t before = b.size();
  std::vector<Ref> probes;
  for (std::size_t t = 0; t < s.k; ++t) probes.push_back(build_mux(b, mem, addr[t]));
  rep.parts.emplace_back("mux", b.size() - before);
  // Decision table over (w, y).
  BitString ztab(rows << s.k);
  for (std::size_t w = 0; w < s.z.size(); ++w)
    for (std::size_t y = 0; y < rows; ++y) ztab.set(w * rows + y, s.z[w][y]);
  std::vector<Ref> zvars(probes);
  zvars.insert(zvars.end(), yv.begin(), yv.end());
  Ref result = embed_table(b, zvars, TruthTable(ztab), rep, "Z");
  out.circuit = std::move(b).finish({result});
  rep.total = out.circuit.size();
  return out;
}

}  // namespace pigeon
