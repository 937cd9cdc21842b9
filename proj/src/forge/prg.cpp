#include "pigeon/forge/prg.hpp"

#include <memory>

#include "pigeon/error.hpp"

namespace pigeon {

PrgParams PrgParams::faithful(std::size_t n, std::size_t c) {
  require(n >= 2, Errc::invalid_argument, "PRG strings need n >= 2");
  std::size_t count = 1;
  for (int e = 0; e < 6; ++e) count *= n;
  return PrgParams{n, count, c, Rational(1, n * n)};
}

namespace {
PrgParams checked(PrgParams p) {
  require(p.n >= 2, Errc::invalid_argument, "PRG strings need n >= 2");
  require(p.count >= 1, Errc::invalid_argument, "PRG needs at least one string");
  require(p.c >= 1, Errc::invalid_argument, "predictor size constant must be positive");
  return p;
}
}  // namespace

PrgReduction::PrgReduction(PrgParams p)
    : p_(checked(std::move(p))), sparse_(p_.count, p_.eps), layout_(CircuitCodeLayout::make(p_.n - 1, p_.c * p_.n)) {}

std::size_t PrgReduction::in_width() const noexcept {
  return p_.count * (p_.n - 1) + layout_.width() + index_width() + sparse_.width();
}

BitString PrgReduction::encode(const PrgWitness& w) const {
  require(w.r_minus.size() == p_.count, Errc::invalid_argument, "witness must hold count strings");
  require(w.index < p_.n, Errc::invalid_argument, "predicted index out of range");
  BitString out;
  for (const auto& x : w.r_minus) {
    require(x.size() == p_.n - 1, Errc::invalid_argument, "R- strings must have n - 1 bits");
    out.append(x);
  }
  require(w.predictor.num_inputs() == p_.n - 1, Errc::invalid_argument, "predictor must read n - 1 bits");
  out.append(encode_circuit(w.predictor, predictor_slots()).payload);
  out.append(BitString::from_uint(w.index, index_width()));
  out.append(sparse_.encode(w.corrections));
  return out;
}

PrgWitness PrgReduction::decode(const BitString& payload) const {
  require(payload.size() == in_width(), Errc::invalid_argument, "PRG payload width mismatch");
  BitReader rd(payload);
  PrgWitness w;
  for (std::size_t j = 0; j < p_.count; ++j) w.r_minus.push_back(rd.take(p_.n - 1));
  w.predictor = decode_circuit(CircuitCode{predictor_slots(), rd.take(layout_.width())}, p_.n - 1);
  w.index = static_cast<std::size_t>(rd.take_uint(index_width()));
  if (w.index >= p_.n) w.index = p_.n - 1;
  w.corrections = sparse_.decode(rd.take(sparse_.width()));
  return w;
}

std::vector<BitString> PrgReduction::apply(const PrgWitness& w) const {
  std::vector<BitString> r;
  r.reserve(w.r_minus.size());
  for (std::size_t j = 0; j < w.r_minus.size(); ++j) {
    const BitString& x = w.r_minus[j];
    bool bit = w.predictor.eval(x)[0] != w.corrections[j];
    BitString full = x.slice(0, w.index);
    full.push_back(bit);
    full.append(x.slice(w.index, x.size() - w.index));
    r.push_back(std::move(full));
  }
  return r;
}

BitString PrgReduction::eval(const BitString& payload) const { return concat(apply(decode(payload))); }

StretchMap PrgReduction::map() const {
  auto self = std::make_shared<PrgReduction>(*this);
  return StretchMap(in_width(), out_width(), MapKind::Prg,
                    "prg n=" + std::to_string(p_.n) + " count=" + std::to_string(p_.count) + " c=" + std::to_string(p_.c),
                    [self](const BitString& x) { return self->eval(x); });
}

std::size_t prg_width_formula(const PrgParams& p) {
  const auto layout = CircuitCodeLayout::make(p.n - 1, p.c * p.n);
  return p.count * (p.n - 1) + layout.width() + ceil_log2(p.n) + ceil_log2(p.count) + p.count -
         sparse_savings(p.count, p.eps);
}

StretchMap phi_prg(const PrgParams& p) {
  // Checked arithmetically first: building the sparse code for a huge count is expensive.
  const std::size_t in = prg_width_formula(checked(p));
  require(in < p.count * p.n, Errc::small_n,
          "PRG encoding takes " + std::to_string(in) + " bits but R has only " + std::to_string(p.count * p.n) +
              "; n = " + std::to_string(p.n) + " is too small for the map to stretch");
  return PrgReduction(p).map();
}

StretchMap phi_prg(std::size_t n, std::size_t c) { return phi_prg(PrgParams::faithful(n, c)); }

std::vector<BitString> split_blocks(const BitString& s, std::size_t block) {
  require(block > 0 && s.size() % block == 0, Errc::invalid_argument, "string does not split into whole blocks");
  std::vector<BitString> out;
  for (std::size_t p = 0; p < s.size(); p += block) out.push_back(s.slice(p, block));
  return out;
}

BitString concat(const std::vector<BitString>& parts) {
  BitString out;
  for (const auto& p : parts) out.append(p);
  return out;
}

}  // namespace pigeon
