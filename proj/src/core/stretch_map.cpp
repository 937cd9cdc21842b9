#include "pigeon/stretch_map.hpp"

#include "pigeon/error.hpp"
#include "pigeon/gadgets.hpp"
#include "pigeon/synthesis.hpp"

namespace pigeon {

const char* kind_name(MapKind k) noexcept {
  switch (k) {
    case MapKind::HardTt: return "hard_tt";
    case MapKind::Prg: return "prg";
    case MapKind::Extractor: return "extractor";
    case MapKind::Rigid: return "rigid";
    case MapKind::Kt: return "kt";
    case MapKind::Ggm: return "ggm";
    case MapKind::PadChain: return "pad_chain";
    case MapKind::Custom: return "custom";
  }
  return "unknown";
}

StretchMap::StretchMap(std::size_t in_width, std::size_t out_width, MapKind kind, std::string description,
                       Eval eval, PackedEval packed, Compiler compiler)
    : in_(in_width),
      out_(out_width),
      kind_(kind),
      description_(std::move(description)),
      eval_(std::move(eval)),
      packed_(std::move(packed)),
      compiler_(std::move(compiler)) {
  require(static_cast<bool>(eval_), Errc::invalid_argument, "map needs an evaluator");
}

StretchMap StretchMap::from_circuit(Circuit c, MapKind kind, std::string description) {
  auto shared = std::make_shared<const Circuit>(std::move(c));
  const std::size_t in = shared->num_inputs(), out = shared->num_outputs();
  PackedEval packed;
  if (in <= 64 && out <= 64) packed = [shared](std::uint64_t x) { return shared->eval_packed(x); };
  return StretchMap(
      in, out, kind, std::move(description), [shared](const BitString& x) { return shared->eval(x); },
      std::move(packed), [shared] { return *shared; });
}

BitString StretchMap::operator()(const BitString& x) const {
  require(x.size() == in_, Errc::invalid_argument,
          "map expects " + std::to_string(in_) + " input bits, got " + std::to_string(x.size()));
  BitString y = eval_(x);
  require(y.size() == out_, Errc::invalid_argument, "evaluator produced the wrong output width");
  return y;
}

std::uint64_t StretchMap::eval_packed(std::uint64_t x) const {
  require(packable(), Errc::invalid_argument, "packed evaluation needs widths <= 64");
  if (packed_) return packed_(x);
  return eval_(BitString::from_uint(x, in_)).to_uint();
}

Circuit StretchMap::compile() const {
  if (compiler_) return compiler_();
  require(in_ <= kSynthesisInputLimit, Errc::budget,
          std::string(kind_name(kind_)) + " map has no gate-level backend and " + std::to_string(in_) +
              " input bits is too many to synthesize from its truth tables");
  const std::size_t points = std::size_t{1} << in_;
  std::vector<BitString> columns(out_, BitString(points));
  for (std::size_t x = 0; x < points; ++x) {
    BitString y = (*this)(BitString::from_uint(x, in_));
    for (std::size_t o = 0; o < out_; ++o) columns[o].set(x, y[o]);
  }
  require(in_ >= 1, Errc::invalid_argument, "cannot compile a map without inputs");
  CircuitBuilder b(in_);
  std::vector<Ref> vars(in_);
  for (std::size_t j = 0; j < in_; ++j) vars[j] = static_cast<Ref>(j);
  std::vector<Ref> outs;
  for (auto& col : columns) outs.push_back(synthesize_into(b, vars, TruthTable(col)));
  return std::move(b).finish(std::move(outs));
}

void require_stretching(const StretchMap& m, const std::string& what) {
  require(m.is_stretching(), Errc::small_n,
          what + ": input width " + std::to_string(m.in_width()) + " is not below output width " +
              std::to_string(m.out_width()) + ", so the map is not an EMPTY instance");
}

}  // namespace pigeon
