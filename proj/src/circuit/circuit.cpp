#include "pigeon/circuit.hpp"

#include <sstream>

#include "pigeon/error.hpp"

namespace pigeon {

Ref Circuit::add_gate(GateKind kind, Ref a, Ref b) {
  Ref next = static_cast<Ref>(wire_count());
  require(a < next, Errc::invalid_argument, "gate input must name an input or an earlier gate");
  if (kind == GateKind::Not) {
    b = 0;
  } else {
    require(b < next, Errc::invalid_argument, "gate input must name an input or an earlier gate");
  }
  gates_.push_back(Gate{kind, a, b});
  return next;
}

void Circuit::add_output(Ref r) {
  require(r < wire_count(), Errc::invalid_argument, "output must name an existing wire");
  outputs_.push_back(r);
}

void Circuit::set_outputs(std::vector<Ref> outs) {
  for (Ref r : outs) require(r < wire_count(), Errc::invalid_argument, "output must name an existing wire");
  outputs_ = std::move(outs);
}

BitString Circuit::eval(const BitString& input) const {
  require(input.size() == n_in_, Errc::invalid_argument,
          "circuit expects " + std::to_string(n_in_) + " input bits, got " + std::to_string(input.size()));
  std::vector<std::uint8_t> w(wire_count());
  for (std::size_t j = 0; j < n_in_; ++j) w[j] = input[j];
  for (std::size_t g = 0; g < gates_.size(); ++g) {
    const Gate& gt = gates_[g];
    std::uint8_t v = 0;
    switch (gt.kind) {
      case GateKind::And: v = w[gt.a] & w[gt.b]; break;
      case GateKind::Or: v = w[gt.a] | w[gt.b]; break;
      case GateKind::Not: v = w[gt.a] ^ 1U; break;
    }
    w[n_in_ + g] = v;
  }
  BitString out(outputs_.size());
  for (std::size_t o = 0; o < outputs_.size(); ++o) out.set(o, w[outputs_[o]] != 0);
  return out;
}

std::vector<std::uint64_t> Circuit::eval_words(std::span<const std::uint64_t> inputs) const {
  require(inputs.size() == n_in_, Errc::invalid_argument, "eval_words arity mismatch");
  std::vector<std::uint64_t> w(wire_count());
  std::copy(inputs.begin(), inputs.end(), w.begin());
  for (std::size_t g = 0; g < gates_.size(); ++g) {
    const Gate& gt = gates_[g];
    switch (gt.kind) {
      case GateKind::And: w[n_in_ + g] = w[gt.a] & w[gt.b]; break;
      case GateKind::Or: w[n_in_ + g] = w[gt.a] | w[gt.b]; break;
      case GateKind::Not: w[n_in_ + g] = ~w[gt.a]; break;
    }
  }
  std::vector<std::uint64_t> out(outputs_.size());
  for (std::size_t o = 0; o < outputs_.size(); ++o) out[o] = w[outputs_[o]];
  return out;
}

std::uint64_t Circuit::eval_packed(std::uint64_t input) const {
  require(n_in_ <= 64 && outputs_.size() <= 64, Errc::invalid_argument, "eval_packed needs widths <= 64");
  std::vector<std::uint8_t> w(wire_count());
  for (std::size_t j = 0; j < n_in_; ++j) w[j] = static_cast<std::uint8_t>((input >> (n_in_ - 1 - j)) & 1U);
  for (std::size_t g = 0; g < gates_.size(); ++g) {
    const Gate& gt = gates_[g];
    std::uint8_t v = 0;
    switch (gt.kind) {
      case GateKind::And: v = w[gt.a] & w[gt.b]; break;
      case GateKind::Or: v = w[gt.a] | w[gt.b]; break;
      case GateKind::Not: v = w[gt.a] ^ 1U; break;
    }
    w[n_in_ + g] = v;
  }
  std::uint64_t out = 0;
  for (Ref r : outputs_) out = (out << 1) | w[r];
  return out;
}

Circuit without_dead_gates(const Circuit& c) {
  std::vector<bool> live(c.wire_count(), false);
  for (Ref r : c.outputs()) live[r] = true;
  for (std::size_t g = c.size(); g-- > 0;) {
    if (!live[c.gate_ref(g)]) continue;
    const Gate& gt = c.gates()[g];
    live[gt.a] = true;
    if (gt.kind != GateKind::Not) live[gt.b] = true;
  }
  Circuit out(c.num_inputs());
  std::vector<Ref> remap(c.wire_count());
  for (std::size_t j = 0; j < c.num_inputs(); ++j) remap[j] = static_cast<Ref>(j);
  for (std::size_t g = 0; g < c.size(); ++g) {
    if (!live[c.gate_ref(g)]) continue;
    const Gate& gt = c.gates()[g];
    remap[c.gate_ref(g)] = out.add_gate(gt.kind, remap[gt.a], gt.kind == GateKind::Not ? 0 : remap[gt.b]);
  }
  std::vector<Ref> outs;
  for (Ref r : c.outputs()) outs.push_back(remap[r]);
  out.set_outputs(std::move(outs));
  return out;
}

std::uint64_t input_word(std::size_t j, std::size_t n_in) {
  std::uint64_t w = 0;
  std::size_t points = std::size_t{1} << n_in;
  for (std::size_t p = 0; p < points; ++p)
    if ((p >> (n_in - 1 - j)) & 1U) w |= std::uint64_t{1} << p;
  return w;
}

std::uint64_t table_word(const Circuit& c) {
  require(c.num_inputs() <= 6 && c.num_outputs() == 1, Errc::invalid_argument,
          "table_word needs a single-output circuit on at most 6 inputs");
  std::vector<std::uint64_t> in(c.num_inputs());
  for (std::size_t j = 0; j < in.size(); ++j) in[j] = input_word(j, c.num_inputs());
  std::uint64_t w = c.eval_words(in)[0];
  std::size_t points = std::size_t{1} << c.num_inputs();
  return points == 64 ? w : (w & ((std::uint64_t{1} << points) - 1));
}

TruthTable truth_table(const Circuit& c, std::size_t n) {
  require(c.num_outputs() == 1, Errc::invalid_argument, "truth_table needs a single-output circuit");
  require(c.num_inputs() == table_inputs(n), Errc::invalid_argument,
          "a table of length " + std::to_string(n) + " needs a circuit with " +
              std::to_string(table_inputs(n)) + " inputs, got " + std::to_string(c.num_inputs()));
  const std::size_t k = c.num_inputs();
  require(k < 40, Errc::budget, "truth table too long to evaluate");
  BitString bits(n);
  std::vector<std::uint64_t> in(k);
  for (std::size_t base = 0; base < n; base += 64) {
    for (std::size_t j = 0; j < k; ++j) {
      std::uint64_t w = 0;
      for (std::size_t lane = 0; lane < 64; ++lane) {
        std::uint64_t p = base + lane;
        if ((p >> (k - 1 - j)) & 1U) w |= std::uint64_t{1} << lane;
      }
      in[j] = w;
    }
    std::uint64_t out = c.eval_words(in)[0];
    for (std::size_t lane = 0; lane < 64 && base + lane < n; ++lane) bits.set(base + lane, (out >> lane) & 1U);
  }
  return TruthTable(std::move(bits));
}

namespace {

Ref parse_ref(const std::string& tok, std::size_t n_in, std::size_t gates_so_far) {
  require(tok.size() >= 2 && (tok[0] == 'x' || tok[0] == 'g'), Errc::parse_error,
          "wire reference must look like x<j> or g<k>, got '" + tok + "'");
  std::size_t idx = 0;
  try {
    idx = std::stoul(tok.substr(1));
  } catch (const std::exception&) {
    fail(Errc::parse_error, "bad wire index in '" + tok + "'");
  }
  if (tok[0] == 'x') {
    require(idx < n_in, Errc::parse_error, "input " + tok + " out of range");
    return static_cast<Ref>(idx);
  }
  require(idx < gates_so_far, Errc::parse_error, "gate " + tok + " referenced before definition");
  return static_cast<Ref>(n_in + idx);
}

std::string ref_name(const Circuit& c, Ref r) {
  return c.is_input(r) ? "x" + std::to_string(r) : "g" + std::to_string(r - c.num_inputs());
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t n_in = 0, n_out = 0;
  bool header = false, have_out = false;
  Circuit c;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw) || kw[0] == '#') continue;
    if (kw == "circuit") {
      require(!header, Errc::parse_error, "duplicate circuit header");
      require(static_cast<bool>(ls >> n_in >> n_out), Errc::parse_error, "header is `circuit <n_in> <n_out>`");
      c = Circuit(n_in);
      header = true;
    } else if (kw == "gate") {
      require(header && !have_out, Errc::parse_error, "gate lines go between the header and the out line");
      std::size_t id = 0;
      std::string kind, a, b;
      require(static_cast<bool>(ls >> id >> kind >> a), Errc::parse_error, "gate line is `gate <k> KIND <ref> [<ref>]`");
      require(id == c.size(), Errc::parse_error, "gate ids must count up from 0");
      Ref ra = parse_ref(a, n_in, c.size());
      if (kind == "NOT") {
        c.add_gate(GateKind::Not, ra);
      } else {
        require(kind == "AND" || kind == "OR", Errc::parse_error, "gate kind must be AND, OR or NOT");
        require(static_cast<bool>(ls >> b), Errc::parse_error, kind + " needs two inputs");
        c.add_gate(kind == "AND" ? GateKind::And : GateKind::Or, ra, parse_ref(b, n_in, c.size()));
      }
    } else if (kw == "out") {
      require(header && !have_out, Errc::parse_error, "exactly one out line, after the header");
      std::string tok;
      std::vector<Ref> outs;
      while (ls >> tok) outs.push_back(parse_ref(tok, n_in, c.size()));
      require(outs.size() == n_out, Errc::parse_error, "out line lists the wrong number of outputs");
      c.set_outputs(std::move(outs));
      have_out = true;
    } else {
      fail(Errc::parse_error, "unknown circuit line '" + kw + "'");
    }
  }
  require(header && have_out, Errc::parse_error, "circuit file needs a header and an out line");
  return c;
}

std::string to_text(const Circuit& c) {
  std::ostringstream out;
  out << "circuit " << c.num_inputs() << ' ' << c.num_outputs() << '\n';
  for (std::size_t g = 0; g < c.size(); ++g) {
    const Gate& gt = c.gates()[g];
    out << "gate " << g << ' ';
    switch (gt.kind) {
      case GateKind::And: out << "AND " << ref_name(c, gt.a) << ' ' << ref_name(c, gt.b); break;
      case GateKind::Or: out << "OR " << ref_name(c, gt.a) << ' ' << ref_name(c, gt.b); break;
      case GateKind::Not: out << "NOT " << ref_name(c, gt.a); break;
    }
    out << '\n';
  }
  out << "out";
  for (Ref r : c.outputs()) out << ' ' << ref_name(c, r);
  out << '\n';
  return out.str();
}

TruthTable parse_truth_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tag, bits;
  std::size_t n = 0;
  require(static_cast<bool>(in >> tag >> n) && tag == "tt", Errc::parse_error, "truth-table file starts with `tt <N>`");
  if (n == 0) return TruthTable{};
  require(static_cast<bool>(in >> bits) && bits.size() == n, Errc::parse_error,
          "truth-table file must hold exactly " + std::to_string(n) + " bits");
  return TruthTable::from_string(bits);
}

std::string to_text(const TruthTable& t) {
  return "tt " + std::to_string(t.length()) + "\n" + t.to_string() + "\n";
}

}  // namespace pigeon
