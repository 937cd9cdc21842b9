#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>

#include "io.hpp"
#include "pigeon/cnf.hpp"
#include "pigeon/complexity.hpp"
#include "pigeon/empty_solver.hpp"
#include "pigeon/error.hpp"
#include "pigeon/forge/manifest.hpp"
#include "pigeon/forge/turing.hpp"
#include "pigeon/ggm.hpp"
#include "pigeon/forge/hard_tt.hpp"
#include "pigeon/inverter.hpp"
#include "pigeon/property_circuits.hpp"
#include "pigeon/verifiers.hpp"
#include "pigeon/weight_codec.hpp"

using namespace pigeon;
using forge::Result;

namespace {

constexpr int kOk = 0, kVerifyFailed = 1, kUsage = 2, kRefused = 3;

struct OracleOptions {
  std::string oracle = "brute";
  std::string sat_cmd;
  std::size_t budget_bits = BruteInverter::kDefaultBudgetBits;
  bool keep_cnf = false;
};

void add_oracle_flags(CLI::App* cmd, OracleOptions& o) {
  cmd->add_option("--oracle", o.oracle, "inverter backend")->check(CLI::IsMember({"brute", "sat"}));
  cmd->add_option("--sat-cmd", o.sat_cmd, "DIMACS solver command (default: PIGEON_SAT_CMD or PATH search)");
  cmd->add_option("--budget-bits", o.budget_bits, "largest input width brute force will enumerate");
  cmd->add_flag("--keep-cnf", o.keep_cnf, "keep the DIMACS file of each SAT query");
}

std::unique_ptr<Inverter> make_inverter(const OracleOptions& o) {
  if (o.oracle == "brute") return std::make_unique<BruteInverter>(o.budget_bits);
  auto cmd = find_sat_command(o.sat_cmd);
  require(cmd.has_value(), Errc::solver_failure,
          "no DIMACS solver found; pass --sat-cmd or set PIGEON_SAT_CMD");
  return std::make_unique<SatInverter>(*cmd, o.keep_cnf);
}

StretchMap load_instance(const std::string& path) { return build_map(parse_manifest(forge::read_file(path))); }

BitString load_candidate(const std::string& path, std::size_t width) {
  TruthTable t = parse_truth_table(forge::read_file(path));
  require(t.length() == width, Errc::invalid_argument,
          "candidate has " + std::to_string(t.length()) + " bits, the instance outputs " + std::to_string(width));
  return t.bits();
}

void print_inverter_note(const Inverter& inv, const OracleOptions& o) {
  if (!o.keep_cnf) return;
  if (auto* sat = dynamic_cast<const SatInverter*>(&inv); sat && !sat->last_cnf_path().empty())
    std::cerr << "cnf: " << sat->last_cnf_path() << "\n";
}

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::small_n:
    case Errc::budget:
    case Errc::solver_failure: return kRefused;
    case Errc::walk_exhausted:
    case Errc::not_found: return kVerifyFailed;
    default: return kUsage;
  }
}

// ------------------------------------------------------------------ gen

struct GenOptions {
  std::string kind, out;
  std::optional<std::size_t> big_n, s_max, n, count, c, d, r, s, q, t;
  std::optional<std::string> eps, tm, circuit;
  bool brute_construct = false;
};

// Exhaustive search for the object itself at lengths too small for a
// stretching instance. Writes the object instead of a manifest.
int brute_construct(const GenOptions& g) {
  auto need = [](const std::optional<std::size_t>& v, const char* name) {
    require(v.has_value(), Errc::invalid_argument, std::string("--brute-construct needs --") + name);
    return *v;
  };
  Result res;
  res.add("kind", g.kind).add("construction", "brute");
  if (g.kind == "hard_tt") {
    const std::size_t n = need(g.big_n, "N");
    const std::size_t s = g.s_max ? *g.s_max : hard_tt_s_max(n);
    require(n >= 1 && n <= 16, Errc::budget, "brute construction of hard tables stops at N = 16");
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      TruthTable t(BitString::from_uint(v, n));
      if (!std::holds_alternative<AboveCap>(exact_complexity(t, s))) continue;
      forge::write_file(g.out, to_text(t));
      res.add("s_max", s).add("table", t.to_string()).print();
      return kOk;
    }
  } else if (g.kind == "rigid") {
    const std::size_t n = need(g.n, "n"), r = need(g.r, "r"), s = need(g.s, "s");
    require(!g.q || *g.q == 2, Errc::budget, "brute construction of rigid matrices is over F2 only");
    require(n >= 1 && n <= 4, Errc::budget, "brute construction of rigid matrices stops at n = 4");
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << (n * n)); ++v) {
      Matrix m(n, n);
      for (std::size_t i = 0; i < n * n; ++i) m(i / n, i % n) = (v >> (n * n - 1 - i)) & 1U;
      if (rigidity_distance(m, r) <= s) continue;
      forge::write_file(g.out, to_text(m));
      res.add("n", n).add("r", r).add("s", s).add("distance", rigidity_distance(m, r)).print();
      return kOk;
    }
  } else if (g.kind == "kt") {
    const std::size_t n = need(g.n, "n"), t = g.t ? *g.t : 100;
    require(n >= 2 && n <= 20, Errc::budget, "brute construction of high-KT strings needs 2 <= n <= 20");
    TuringMachine m = g.tm ? parse_tm(forge::read_file(*g.tm)) : copy_machine();
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      BitString y = BitString::from_uint(v, n);
      if (kt_complexity(y, m, t, n - 2)) continue;
      forge::write_file(g.out, to_text(TruthTable(y)));
      res.add("n", n).add("t", t).add("string", y.to_string()).print();
      return kOk;
    }
  } else {
    fail(Errc::budget, "no brute construction for kind " + g.kind + "; the search space is too large");
  }
  fail(Errc::not_found, "exhaustive search found no object with the requested property");
}

int run_gen(const GenOptions& g) {
  if (g.brute_construct) return brute_construct(g);
  Manifest m;
  m.values["kind"] = g.kind;
  auto put = [&](const char* key, const auto& v) {
    if (v) m.values[key] = std::to_string(*v);
  };
  put("N", g.big_n);
  put("s_max", g.s_max);
  put("n", g.n);
  put("count", g.count);
  put("c", g.c);
  put("d", g.d);
  put("r", g.r);
  put("s", g.s);
  put("q", g.q);
  put("t", g.t);
  if (g.eps) m.values["eps"] = *g.eps;
  if (g.tm) m.blocks["tm"] = to_text(parse_tm(forge::read_file(*g.tm)));
  if (g.circuit) m.blocks["circuit"] = to_text(parse_circuit(forge::read_file(*g.circuit)));
  StretchMap map = build_map(m);
  forge::write_file(g.out, to_text(m));
  Result().add("kind", g.kind).add("in", map.in_width()).add("out", map.out_width()).add("file", g.out).print();
  return kOk;
}

// ------------------------------------------------------------------ solve

struct SolveOptions {
  std::string instance, mode = "random", hard_tt, out;
  std::uint64_t seed = 0;
  std::optional<std::size_t> k_override;
  std::string eps = "1/2";
  OracleOptions oracle;
};

int run_solve(const SolveOptions& o) {
  StretchMap map = load_instance(o.instance);
  require_stretching(map, "instance");
  auto inv = make_inverter(o.oracle);
  Result res;
  BitString y;
  if (o.mode == "random") {
    auto sol = solve_empty_randomized(map, *inv, o.seed);
    y = sol.y;
    res.add("mode", "random").add("trials", sol.trials);
  } else if (o.mode == "brute") {
    y = smallest_non_member(map, *inv);
    res.add("mode", "brute");
  } else {
    PipelineOptions p;
    p.eps = parse_rational(o.eps);
    p.k_override = o.k_override;
    StretchMap base = pipeline_base(map);
    HardTableSource source;
    if (!o.hard_tt.empty()) {
      TruthTable t = parse_truth_table(forge::read_file(o.hard_tt));
      source = [t](std::size_t) { return t; };
    } else {
      const std::size_t k = o.k_override ? *o.k_override : ggm_depth(map.compile().size(), p.eps);
      source = random_hard_table_source(ggm_expand(base, k), o.seed, *inv);
    }
    auto r = solve_empty_from_hard_tt(map, source, *inv, p);
    y = r.solution;
    res.add("mode", "hard-tt").add("k", r.k).add("table_length", r.table_length).add("tree_calls", r.tree_calls);
    res.add("chain_calls", r.chain_calls);
    if (r.succinct_bound) res.add("succinct_bound", *r.succinct_bound);
  }
  print_inverter_note(*inv, o.oracle);
  if (!o.out.empty()) forge::write_file(o.out, to_text(TruthTable(y)));
  res.add("y", y.to_string()).add("calls", inv->calls()).print();
  return kOk;
}

// ------------------------------------------------------------------ verify

struct VerifyOptions {
  std::string instance, candidate, strings, matrix, alphas, tm, y;
  std::size_t n = 0, r = 0, s = 0, k = 0, t = 100, cap = 0;
  std::string eps = "1/4";
  bool approx = false;
  std::size_t samples = 2000;
  std::uint64_t seed = 0;
  OracleOptions oracle;
};

int run_verify_empty(const VerifyOptions& o) {
  StretchMap map = load_instance(o.instance);
  BitString y = load_candidate(o.candidate, map.out_width());
  auto inv = make_inverter(o.oracle);
  const bool ok = verify_solution(map, y, *inv);
  print_inverter_note(*inv, o.oracle);
  Result().add("verdict", ok ? "NON_MEMBER" : "MEMBER").print();
  return ok ? kOk : kVerifyFailed;
}

int run_verify_prg(const VerifyOptions& o) {
  auto r = forge::parse_strings(forge::read_file(o.strings));
  require(!r.empty(), Errc::invalid_argument, "R must be non-empty");
  const std::size_t n = r.front().size();
  std::uint64_t table = 0;
  Rational adv = max_small_circuit_advantage(r, n, &table);
  const bool ok = adv <= Rational(1, n);
  Result().add("prg", ok ? 1 : 0).add("max_advantage", to_string(adv)).add("witness_table", table).print();
  return ok ? kOk : kVerifyFailed;
}

int run_verify_rigid(const VerifyOptions& o) {
  Matrix m = parse_bit_matrix(forge::read_file(o.matrix));
  const std::size_t d = rigidity_distance(m, o.r);
  const bool ok = d > o.s;
  Result().add("distance", d).add("rigid", ok ? 1 : 0).print();
  return ok ? kOk : kVerifyFailed;
}

int run_verify_extractor(const VerifyOptions& o) {
  std::size_t n = 0;
  auto alphas = forge::parse_alphas(forge::read_file(o.alphas), &n);
  const Rational eps = parse_rational(o.eps);
  if (!o.approx) {
    const bool ok = is_extractor(alphas, n, o.k, eps);
    Result().add("extractor", ok ? 1 : 0).add("exhaustive", 1).print();
    return ok ? kOk : kVerifyFailed;
  }
  // Sampled source pairs; never a certificate.
  Rng rng(o.seed);
  const std::size_t universe = std::size_t{1} << n, size = std::size_t{1} << o.k;
  require(size <= universe, Errc::invalid_argument, "k must not exceed n");
  Rational worst = 0;
  auto sample = [&] {
    std::vector<FieldCtx::Elem> all(universe);
    for (std::size_t i = 0; i < universe; ++i) all[i] = i;
    for (std::size_t i = 0; i < size; ++i) std::swap(all[i], all[i + rng.below(universe - i)]);
    all.resize(size);
    return all;
  };
  for (std::size_t t = 0; t < o.samples; ++t) worst = std::max(worst, extractor_bias(alphas, n, sample(), sample()));
  Result().add("extractor_sampled", worst <= eps ? 1 : 0).add("worst_bias", to_string(worst)).add("exhaustive", 0).print();
  return worst <= eps ? kOk : kVerifyFailed;
}

int run_verify_kt(const VerifyOptions& o) {
  TuringMachine m = o.tm.empty() ? copy_machine() : parse_tm(forge::read_file(o.tm));
  BitString y = BitString::from_string(o.y);
  const std::size_t cap = o.cap ? o.cap : (y.size() >= 2 ? y.size() - 2 : 0);
  auto kt = kt_complexity(y, m, o.t, cap);
  Result res;
  if (kt) {
    res.add("kt", *kt);
  } else {
    res.add("kt_above", cap);
  }
  res.print();
  return kt ? kVerifyFailed : kOk;
}

// ------------------------------------------------------------------ complexity / extract

int run_complexity(const std::string& path, std::size_t cap) {
  TruthTable t = parse_truth_table(forge::read_file(path));
  auto r = exact_complexity(t, cap, std::max(cap, kDefaultComplexityCap));
  if (auto* rep = std::get_if<ComplexityReport>(&r)) {
    Result().add("s_star", rep->s_star).print();
    return kOk;
  }
  Result().add("above_cap", std::get<AboveCap>(r).cap).print();
  return kOk;
}

struct Certificate {
  std::size_t n = 0;
  std::size_t s = 0;
  std::string witness;
};

Certificate parse_certificate(const std::string& text) {
  Manifest m = parse_manifest(text);
  Certificate c;
  c.n = m.get_size("N");
  if (auto s = m.find_size("s_star")) {
    c.s = *s;
  } else {
    c.s = m.get_size("s_lower");
  }
  c.witness = m.get_or("witness", "");
  return c;
}

int run_extract(const std::string& tt_path, const std::string& cert_path, const std::string& scale,
                const OracleOptions& oo, bool recheck) {
  TruthTable x = parse_truth_table(forge::read_file(tt_path));
  Certificate cert = parse_certificate(forge::read_file(cert_path));
  require(cert.n == x.length(), Errc::invalid_argument, "certificate length does not match the table");
  if (recheck) {
    auto r = exact_complexity(x, cert.s - 1 == 0 ? 0 : cert.s - 1, kDefaultComplexityCap);
    require(std::holds_alternative<AboveCap>(r), Errc::invalid_argument,
            "certificate claims complexity >= " + std::to_string(cert.s) + " but a smaller circuit exists");
  }
  if (!cert.witness.empty()) {
    // A witness circuit pins s_star from above; it must compute the table.
    auto path = std::filesystem::path(cert_path).parent_path() / cert.witness;
    Circuit w = parse_circuit(forge::read_file(path.string()));
    require(truth_table(w, x.length()) == x, Errc::invalid_argument, "certificate witness does not compute the table");
    require(w.size() >= cert.s, Errc::invalid_argument, "certificate witness is smaller than the claimed complexity");
  }
  auto inv = make_inverter(oo);
  auto res = hardness_extract(x, cert.s, *inv, parse_rational(scale));
  Result()
      .add("N", res.n)
      .add("k", res.k)
      .add("guarantee", res.guarantee)
      .add("encoding", res.encoding)
      .add("calls", res.calls)
      .add("table", res.table.to_string())
      .print();
  return kOk;
}

// ------------------------------------------------------------------ witness

Matrix parse_matrix_file(const std::string& path) { return parse_bit_matrix(forge::read_file(path)); }

int run_witness_nonrigid(const std::string& l, const std::string& r, const std::string& s, const std::string& out) {
  Matrix lm = parse_matrix_file(l), rm = parse_matrix_file(r);
  std::vector<SparseEntry> entries;
  if (!s.empty()) {
    Matrix sm = parse_matrix_file(s);
    for (std::size_t i = 0; i < sm.rows(); ++i)
      for (std::size_t j = 0; j < sm.cols(); ++j)
        if (sm(i, j)) entries.push_back({i, j, 1});
  }
  auto wc = nonrigid_circuit(lm, rm, entries);
  if (!out.empty()) forge::write_file(out, to_text(wc.circuit));
  Result res;
  res.add("inputs", wc.circuit.num_inputs()).add("size", wc.size.total);
  for (const auto& [name, size] : wc.size.parts) res.add("part_" + name, size);
  res.print();
  return kOk;
}

int run_witness_bitprobe(const std::string& scheme, const std::string& out) {
  auto wc = bitprobe_circuit(parse_scheme(forge::read_file(scheme)));
  if (!out.empty()) forge::write_file(out, to_text(wc.circuit));
  Result().add("inputs", wc.circuit.num_inputs()).add("size", wc.size.total).print();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"forge: stretch-map instances, EMPTY solvers and exhaustive verifiers"};
  app.require_subcommand(1);
  int code = kOk;

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "write an instance manifest");
  gen_cmd->add_option("--kind", gen.kind, "hard_tt, prg, extractor, rigid, kt or circuit")->required();
  gen_cmd->add_option("-o,--out", gen.out, "manifest path")->required();
  gen_cmd->add_option("--N", gen.big_n, "table length (hard_tt)");
  gen_cmd->add_option("--s-max", gen.s_max, "gate slots (hard_tt)");
  gen_cmd->add_option("--n", gen.n, "size parameter");
  gen_cmd->add_option("--count", gen.count, "number of strings (prg)");
  gen_cmd->add_option("--c", gen.c, "predictor size constant (prg)");
  gen_cmd->add_option("--d", gen.d, "set-size factor override (extractor)");
  gen_cmd->add_option("--r", gen.r, "rank bound (rigid)");
  gen_cmd->add_option("--s", gen.s, "sparse entries (rigid)");
  gen_cmd->add_option("--q", gen.q, "field order (rigid)");
  gen_cmd->add_option("--t", gen.t, "step bound (kt)");
  gen_cmd->add_option("--eps", gen.eps, "rational eps");
  gen_cmd->add_option("--tm", gen.tm, "machine description file (kt)");
  gen_cmd->add_option("--circuit", gen.circuit, "circuit file (circuit)");
  gen_cmd->add_flag("--brute-construct", gen.brute_construct,
                    "find the object by exhaustive search (hard_tt, rigid, kt) instead of writing an instance");
  gen_cmd->callback([&] { code = run_gen(gen); });

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "find a string outside an instance's range");
  solve_cmd->add_option("--instance", solve.instance)->required();
  solve_cmd->add_option("--mode", solve.mode)->check(CLI::IsMember({"random", "hard-tt", "brute"}));
  solve_cmd->add_option("--seed", solve.seed);
  solve_cmd->add_option("--hard-tt", solve.hard_tt, "truth table to expand from (hard-tt mode)");
  solve_cmd->add_option("--k-override", solve.k_override, "GGM depth instead of the formula");
  solve_cmd->add_option("--eps", solve.eps, "eps in the depth formula");
  solve_cmd->add_option("-o,--out", solve.out, "write the solution as a truth-table file");
  add_oracle_flags(solve_cmd, solve.oracle);
  solve_cmd->callback([&] { code = run_solve(solve); });

  VerifyOptions ver;
  auto* verify_cmd = app.add_subcommand("verify", "check a solution or a property");
  verify_cmd->require_subcommand(1);
  auto* v_empty = verify_cmd->add_subcommand("empty", "candidate is outside the instance's range");
  v_empty->add_option("--instance", ver.instance)->required();
  v_empty->add_option("--candidate", ver.candidate)->required();
  add_oracle_flags(v_empty, ver.oracle);
  v_empty->callback([&] { code = run_verify_empty(ver); });
  auto* v_prg = verify_cmd->add_subcommand("prg", "no n-gate circuit distinguishes R by more than 1/n");
  v_prg->add_option("--strings", ver.strings)->required();
  v_prg->callback([&] { code = run_verify_prg(ver); });
  auto* v_rigid = verify_cmd->add_subcommand("rigid", "matrix is far from every rank-r matrix");
  v_rigid->add_option("--matrix", ver.matrix)->required();
  v_rigid->add_option("--r", ver.r)->required();
  v_rigid->add_option("--s", ver.s)->required();
  v_rigid->callback([&] { code = run_verify_rigid(ver); });
  auto* v_ext = verify_cmd->add_subcommand("extractor", "bias on every pair of flat sources");
  v_ext->add_option("--alphas", ver.alphas)->required();
  v_ext->add_option("--k", ver.k)->required();
  v_ext->add_option("--eps", ver.eps);
  v_ext->add_flag("--approx", ver.approx, "sample source pairs instead of enumerating them");
  v_ext->add_option("--samples", ver.samples);
  v_ext->add_option("--seed", ver.seed);
  v_ext->callback([&] { code = run_verify_extractor(ver); });
  auto* v_kt = verify_cmd->add_subcommand("kt", "no short program prints the string in time");
  v_kt->add_option("--y", ver.y)->required();
  v_kt->add_option("--tm", ver.tm, "machine file (default: the copy machine)");
  v_kt->add_option("--t", ver.t);
  v_kt->add_option("--cap", ver.cap, "longest program length to try (default |y| - 2)");
  v_kt->callback([&] { code = run_verify_kt(ver); });

  std::string tt_path;
  std::size_t cap = kDefaultComplexityCap;
  auto* cx = app.add_subcommand("complexity", "exact circuit complexity of a truth table");
  cx->add_option("--tt", tt_path)->required();
  cx->add_option("--cap", cap);
  cx->callback([&] { code = run_complexity(tt_path, cap); });

  std::string cert_path, scale = "1";
  bool recheck = false;
  OracleOptions ext_oracle;
  auto* ext = app.add_subcommand("extract", "shorter hard table from a long one");
  ext->add_option("--tt", tt_path)->required();
  ext->add_option("--complexity-cert", cert_path)->required();
  ext->add_option("--eps-scale", scale);
  ext->add_flag("--recheck", recheck, "re-certify the complexity claim by enumeration");
  add_oracle_flags(ext, ext_oracle);
  ext->callback([&] { code = run_extract(tt_path, cert_path, scale, ext_oracle, recheck); });

  std::string wl, wr, ws, wout, scheme;
  auto* wit = app.add_subcommand("witness", "compile witness circuits");
  wit->require_subcommand(1);
  auto* w_nr = wit->add_subcommand("nonrigid", "circuit for L R + S");
  w_nr->add_option("--L", wl)->required();
  w_nr->add_option("--R", wr)->required();
  w_nr->add_option("--S", ws);
  w_nr->add_option("-o,--out", wout);
  w_nr->callback([&] { code = run_witness_nonrigid(wl, wr, ws, wout); });
  auto* w_bp = wit->add_subcommand("bitprobe", "circuit for a bit-probe scheme");
  w_bp->add_option("--scheme", scheme)->required();
  w_bp->add_option("-o,--out", wout);
  w_bp->callback([&] { code = run_witness_bitprobe(scheme, wout); });

  std::size_t cn = 0, ck = 0;
  std::string cstr, cidx, ceps = "1/4";
  auto* codec = app.add_subcommand("codec", "fixed-weight ranking and sparse codes");
  codec->require_subcommand(1);
  auto* c_rank = codec->add_subcommand("rank");
  c_rank->add_option("--string", cstr)->required();
  c_rank->callback([&] {
    BitString s = BitString::from_string(cstr);
    Result().add("n", s.size()).add("k", s.weight()).add("index", rank(s.size(), s.weight(), s).str()).print();
  });
  auto* c_unrank = codec->add_subcommand("unrank");
  c_unrank->add_option("--n", cn)->required();
  c_unrank->add_option("--k", ck)->required();
  c_unrank->add_option("--index", cidx)->required();
  c_unrank->callback([&] { Result().add("string", unrank(cn, ck, BigInt(cidx)).to_string()).print(); });
  auto* c_enc = codec->add_subcommand("sparse-encode");
  c_enc->add_option("--string", cstr)->required();
  c_enc->add_option("--eps", ceps);
  c_enc->callback([&] {
    BitString s = BitString::from_string(cstr);
    SparseCode code_(s.size(), parse_rational(ceps));
    Result().add("width", code_.width()).add("payload", code_.encode(s).to_string()).print();
  });
  auto* c_dec = codec->add_subcommand("sparse-decode");
  c_dec->add_option("--n", cn)->required();
  c_dec->add_option("--payload", cstr)->required();
  c_dec->add_option("--eps", ceps);
  c_dec->callback([&] {
    SparseCode code_(cn, parse_rational(ceps));
    Result().add("string", code_.decode(BitString::from_string(cstr)).to_string()).print();
  });

  std::string cnf_inst, cnf_target, cnf_out;
  auto* cnf = app.add_subcommand("cnf", "DIMACS encoding of 'instance outputs target'");
  cnf->add_option("--instance", cnf_inst)->required();
  cnf->add_option("--target", cnf_target)->required();
  cnf->add_option("-o,--out", cnf_out)->required();
  cnf->callback([&] {
    StretchMap map = load_instance(cnf_inst);
    Cnf f = to_cnf(map.compile(), load_candidate(cnf_target, map.out_width()));
    forge::write_file(cnf_out, f.to_dimacs());
    Result().add("vars", f.num_vars).add("clauses", f.clauses.size()).add("file", cnf_out).print();
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}
