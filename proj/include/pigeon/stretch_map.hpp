#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "pigeon/bits.hpp"
#include "pigeon/circuit.hpp"

namespace pigeon {

enum class MapKind { HardTt, Prg, Extractor, Rigid, Kt, Ggm, PadChain, Custom };

const char* kind_name(MapKind k) noexcept;

// Total, deterministic map {0,1}^a -> {0,1}^b. Maps are evaluated
// semantically; a gate-level circuit is produced on demand for the SAT
// oracle. Builders of EMPTY instances enforce a < b; the same type also
// carries the non-stretching block maps that backward walks query.
class StretchMap {
 public:
  using Eval = std::function<BitString(const BitString&)>;
  using PackedEval = std::function<std::uint64_t(std::uint64_t)>;
  using Compiler = std::function<Circuit()>;

  StretchMap(std::size_t in_width, std::size_t out_width, MapKind kind, std::string description, Eval eval,
             PackedEval packed = {}, Compiler compiler = {});

  static StretchMap from_circuit(Circuit c, MapKind kind = MapKind::Custom, std::string description = "circuit");

  std::size_t in_width() const noexcept { return in_; }
  std::size_t out_width() const noexcept { return out_; }
  MapKind kind() const noexcept { return kind_; }
  const std::string& description() const noexcept { return description_; }
  bool is_stretching() const noexcept { return in_ < out_; }

  BitString operator()(const BitString& x) const;

  // Packed evaluation, MSB-first, available when both widths are <= 64.
  bool packable() const noexcept { return in_ <= 64 && out_ <= 64; }
  std::uint64_t eval_packed(std::uint64_t x) const;

  bool has_native_circuit() const noexcept { return static_cast<bool>(compiler_); }
  // Native circuit if there is one, otherwise per-output synthesis when the
  // input is small enough (in_width <= kSynthesisInputLimit).
  Circuit compile() const;

  static constexpr std::size_t kSynthesisInputLimit = 12;

 private:
  std::size_t in_;
  std::size_t out_;
  MapKind kind_;
  std::string description_;
  Eval eval_;
  PackedEval packed_;
  Compiler compiler_;
};

// Throws SMALL_N unless the map stretches.
void require_stretching(const StretchMap& m, const std::string& what);

}  // namespace pigeon
