#include "pigeon/forge/hard_tt.hpp"

#include <memory>
#include <set>

#include "pigeon/complexity.hpp"
#include "pigeon/error.hpp"
#include "pigeon/gadgets.hpp"

namespace pigeon {

namespace {

// Packs the first n bits of a table word (bit p = position p) MSB-first.
std::uint64_t word_to_packed(std::uint64_t word, std::size_t n) {
  std::uint64_t out = 0;
  for (std::size_t p = 0; p < n; ++p) out = (out << 1) | ((word >> p) & 1U);
  return out;
}

BitString word_to_bits(std::uint64_t word, std::size_t n) {
  BitString s(n);
  for (std::size_t p = 0; p < n; ++p) s.set(p, (word >> p) & 1U);
  return s;
}

}  // namespace

std::size_t hard_tt_s_max(std::size_t n) {
  require(n >= 2, Errc::small_n, "hard tables need N >= 2");
  return n / (2 * ceil_log2(n));
}

StretchMap phi_hard_tt(std::size_t n) { return phi_hard_tt(n, hard_tt_s_max(n)); }

StretchMap phi_hard_tt(std::size_t n, std::size_t s_max) {
  require(n >= 2, Errc::small_n, "hard tables need N >= 2");
  require(s_max >= 1, Errc::small_n,
          "N = " + std::to_string(n) + " leaves no gate slots; tables this short are handled by brute-force search");
  const std::size_t n_in = table_inputs(n);
  const auto layout = CircuitCodeLayout::make(n_in, s_max);
  require(layout.width() < n, Errc::small_n,
          "circuit code for " + std::to_string(s_max) + " gates on " + std::to_string(n_in) + " inputs takes " +
              std::to_string(layout.width()) + " bits, not fewer than the table length " + std::to_string(n) +
              "; the map would not stretch");
  const std::string desc = "hard_tt N=" + std::to_string(n) + " s_max=" + std::to_string(s_max);
  if (n_in <= 6 && layout.width() <= 64) {
    auto inputs = std::make_shared<std::vector<std::uint64_t>>();
    for (std::size_t j = 0; j < n_in; ++j) inputs->push_back(input_word(j, n_in));
    auto packed = [layout, inputs, n](std::uint64_t payload) {
      return word_to_packed(decoded_table_word(payload, layout, *inputs), n);
    };
    auto eval = [layout, inputs, n](const BitString& x) {
      return word_to_bits(decoded_table_word(x.to_uint(), layout, *inputs), n);
    };
    return StretchMap(layout.width(), n, MapKind::HardTt, desc, eval, packed,
                      [n, s_max] { return compile_hard_tt(n, s_max); });
  }
  auto eval = [n, n_in, s_max](const BitString& x) {
    return truth_table(decode_circuit(CircuitCode{s_max, x}, n_in), n).bits();
  };
  return StretchMap(layout.width(), n, MapKind::HardTt, desc, eval, {},
                    [n, s_max] { return compile_hard_tt(n, s_max); });
}

Circuit compile_hard_tt(std::size_t n, std::size_t s_max) {
  const std::size_t n_in = table_inputs(n);
  const auto l = CircuitCodeLayout::make(n_in, s_max);
  const std::size_t points = std::size_t{1} << n_in;
  require(points <= 4096, Errc::budget, "universal decoder limited to tables of length <= 4096");
  CircuitBuilder b(l.width());
  std::size_t cursor = 0;
  auto field = [&](std::size_t w) {
    std::vector<Ref> f(w);
    for (auto& r : f) r = static_cast<Ref>(cursor++);
    return f;
  };
  // tables[wire][p]
  std::vector<std::vector<Ref>> tables;
  for (std::size_t j = 0; j < n_in; ++j) {
    std::vector<Ref> t(points);
    for (std::size_t p = 0; p < points; ++p) t[p] = ((p >> (n_in - 1 - j)) & 1U) ? b.one() : b.zero();
    tables.push_back(std::move(t));
  }
  const std::size_t ref_span = std::size_t{1} << l.ref_width;
  std::vector<std::vector<Ref>> slots;
  for (std::size_t s = 0; s < l.s_max; ++s) {
    auto kind = field(2);
    auto ra = field(l.ref_width);
    auto rb = field(l.ref_width);
    auto operand = [&](const std::vector<Ref>& ref, std::size_t p) {
      std::vector<Ref> bus(ref_span);
      for (std::size_t v = 0; v < ref_span; ++v) bus[v] = v < n_in + s ? tables[v][p] : tables[0][p];
      return build_mux(b, bus, ref);
    };
    std::vector<Ref> out(points);
    for (std::size_t p = 0; p < points; ++p) {
      Ref a = operand(ra, p);
      Ref c = operand(rb, p);
      std::vector<Ref> choices{b.land(a, c), b.lor(a, c), b.lnot(a), a};
      out[p] = build_mux(b, choices, kind);
    }
    tables.push_back(out);
    slots.push_back(std::move(out));
  }
  auto sel = field(l.selector_width);
  std::vector<Ref> outs;
  const std::size_t sel_span = std::size_t{1} << l.selector_width;
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<Ref> bus(sel_span);
    for (std::size_t v = 0; v < sel_span; ++v) bus[v] = slots[std::min(v, l.s_max - 1)][p];
    outs.push_back(build_mux(b, bus, sel));
  }
  return std::move(b).finish(std::move(outs));
}

HardTableMap compact_hard_tt(std::size_t n, std::size_t in_width) {
  require(in_width >= 1 && in_width < n, Errc::invalid_argument, "compact hard-table map must stretch");
  const std::size_t n_in = table_inputs(n);
  std::size_t best_code = 0;
  for (std::size_t s = 1; CircuitCodeLayout::make(n_in, s).width() <= in_width; ++s) best_code = s;

  // Codebook alternative: all tables of complexity <= s, if they fit 2^in_width entries.
  std::size_t best_book = 0;
  std::vector<BitString> book;
  if (n <= kCodebookMaxLength && in_width < 63) {
    for (std::size_t s = 0; s <= kDefaultComplexityCap; ++s) {
      std::set<BitString> tables;
      for (std::uint64_t w : functions_up_to(n_in, s)) tables.insert(word_to_bits(w, n));
      if (tables.size() > (std::uint64_t{1} << in_width)) break;
      best_book = s;
      book.assign(tables.begin(), tables.end());
    }
  }
  if (best_code >= 1 && best_code >= best_book) {
    // Pad the code on the right: extra payload bits are ignored.
    StretchMap inner = phi_hard_tt(n, best_code);
    const std::size_t used = inner.in_width();
    auto shared = std::make_shared<StretchMap>(inner);
    StretchMap m(
        in_width, n, MapKind::HardTt, "hard_tt N=" + std::to_string(n) + " code s_max=" + std::to_string(best_code),
        [shared, used](const BitString& x) { return (*shared)(x.slice(0, used)); });
    return HardTableMap{std::move(m), best_code, "circuit-code"};
  }
  require(!book.empty(), Errc::small_n, "no hard-table encoding fits " + std::to_string(in_width) + " input bits");
  auto shared = std::make_shared<std::vector<BitString>>(std::move(book));
  StretchMap m(in_width, n, MapKind::HardTt,
               "hard_tt N=" + std::to_string(n) + " codebook s=" + std::to_string(best_book),
               [shared](const BitString& x) {
                 std::uint64_t i = x.to_uint();
                 return (*shared)[std::min<std::uint64_t>(i, shared->size() - 1)];
               });
  return HardTableMap{std::move(m), best_book, "codebook"};
}

}  // namespace pigeon
