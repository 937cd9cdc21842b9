#include "pigeon/forge/extractor.hpp"

#include <algorithm>
#include <memory>

#include "pigeon/error.hpp"

namespace pigeon {

std::size_t extractor_d(const Rational& eps) {
  require(eps > 0, Errc::invalid_argument, "eps must be positive");
  return static_cast<std::size_t>(ceil_of(Rational(4) / (eps * eps)));
}

ExtractorParams ExtractorParams::make(std::size_t n, const Rational& eps, std::optional<std::size_t> d_override) {
  require(n >= 1 && 2 * n <= 32, Errc::invalid_argument, "extractor needs 1 <= n <= 16");
  require(eps > 0 && eps < Rational(1, 2), Errc::invalid_argument, "extractor needs 0 < eps < 1/2");
  ExtractorParams p{n, eps, d_override.value_or(extractor_d(eps)), !d_override.has_value()};
  require(p.d >= 1, Errc::invalid_argument, "d must be positive");
  require(n >= 63 || p.set_size() <= (std::size_t{1} << n), Errc::small_n,
          "X and Y need d*n = " + std::to_string(p.set_size()) + " distinct strings but only 2^" +
              std::to_string(n) + " exist");
  return p;
}

ExtractorReduction::ExtractorReduction(ExtractorParams p)
    : p_(std::move(p)), field_(static_cast<unsigned>(2 * p_.n)), sparse_(p_.points(), p_.eps) {}

std::size_t ExtractorReduction::in_width() const noexcept {
  return 2 * p_.set_size() * p_.n + 1 + sparse_.width() + p_.points() * (2 * p_.n - 1);
}

std::vector<Elem> ExtractorReduction::points(const ExtractorWitness& w) const {
  std::vector<Elem> pts;
  pts.reserve(w.x_set.size() * w.y_set.size());
  for (Elem x : w.x_set)
    for (Elem y : w.y_set) pts.push_back((x << p_.n) | y);
  return pts;
}

namespace {

// Sorted, deduplicated, then topped up with the smallest unused values.
std::vector<Elem> normalize_set(std::vector<Elem> v, std::size_t size) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  std::vector<Elem> out;
  out.reserve(size);
  std::size_t pos = 0;
  for (Elem cand = 0; out.size() < size; ++cand) {
    while (pos < v.size() && v[pos] < cand) ++pos;
    if (pos < v.size() && v[pos] == cand) {
      out.push_back(cand);
    } else if (out.size() + (v.size() - pos) < size) {
      out.push_back(cand);
    }
  }
  return out;
}

}  // namespace

BitString ExtractorReduction::encode(const ExtractorWitness& w) const {
  const std::size_t n = p_.n, k = p_.points();
  require(w.x_set.size() == p_.set_size() && w.y_set.size() == p_.set_size(), Errc::invalid_argument,
          "X and Y must each hold d*n strings");
  require(std::is_sorted(w.x_set.begin(), w.x_set.end()) && std::is_sorted(w.y_set.begin(), w.y_set.end()) &&
              std::adjacent_find(w.x_set.begin(), w.x_set.end()) == w.x_set.end() &&
              std::adjacent_find(w.y_set.begin(), w.y_set.end()) == w.y_set.end(),
          Errc::invalid_argument, "X and Y must be sorted sets");
  require(w.betas.size() == k && w.corrections.size() == k, Errc::invalid_argument, "one beta and one S bit per point");
  BitString out;
  for (Elem x : w.x_set) out.append(BitString::from_uint(x, n));
  for (Elem y : w.y_set) out.append(BitString::from_uint(y, n));
  out.push_back(w.b);
  out.append(sparse_.encode(w.corrections));
  for (Elem beta : w.betas) out.append(BitString::from_uint(beta, 2 * n - 1));
  return out;
}

ExtractorWitness ExtractorReduction::decode(const BitString& payload) const {
  require(payload.size() == in_width(), Errc::invalid_argument, "extractor payload width mismatch");
  const std::size_t n = p_.n;
  BitReader rd(payload);
  ExtractorWitness w;
  std::vector<Elem> xs, ys;
  for (std::size_t i = 0; i < p_.set_size(); ++i) xs.push_back(rd.take_uint(n));
  for (std::size_t i = 0; i < p_.set_size(); ++i) ys.push_back(rd.take_uint(n));
  w.x_set = normalize_set(std::move(xs), p_.set_size());
  w.y_set = normalize_set(std::move(ys), p_.set_size());
  w.b = rd.take_uint(1) != 0;
  w.corrections = sparse_.decode(rd.take(sparse_.width()));
  for (std::size_t i = 0; i < p_.points(); ++i) w.betas.push_back(rd.take_uint(2 * n - 1));
  return w;
}

std::vector<Elem> ExtractorReduction::apply(const ExtractorWitness& w) const {
  auto pts = points(w);
  std::vector<Elem> values(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) values[i] = (w.betas[i] << 1) | ((w.b != w.corrections[i]) ? 1U : 0U);
  return vandermonde_solve(field_, pts, values);
}

BitString ExtractorReduction::eval(const BitString& payload) const {
  return alphas_to_bits(apply(decode(payload)), 2 * p_.n);
}

ExtractorWitness ExtractorReduction::witness_for(std::span<const Elem> alphas, std::vector<Elem> x_set,
                                                 std::vector<Elem> y_set, bool b) const {
  require(alphas.size() == p_.points(), Errc::invalid_argument, "need one coefficient per point");
  ExtractorWitness w;
  w.x_set = std::move(x_set);
  w.y_set = std::move(y_set);
  std::sort(w.x_set.begin(), w.x_set.end());
  std::sort(w.y_set.begin(), w.y_set.end());
  w.b = b;
  w.corrections = BitString(p_.points());
  auto pts = points(w);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Elem f = poly_eval(field_, alphas, pts[i]);
    w.betas.push_back(f >> 1);
    w.corrections.set(i, ((f & 1U) != 0) != b);
  }
  require(w.corrections.weight() <= sparse_.max_weight(), Errc::invalid_argument,
          "g is too unbalanced on X x Y for the correction string to fit");
  return w;
}

StretchMap ExtractorReduction::map() const {
  auto self = std::make_shared<ExtractorReduction>(*this);
  return StretchMap(in_width(), out_width(), MapKind::Extractor,
                    "extractor n=" + std::to_string(p_.n) + " d=" + std::to_string(p_.d) + " eps=" + to_string(p_.eps),
                    [self](const BitString& x) { return self->eval(x); });
}

BigInt extractor_width_bound(std::size_t n, const Rational& eps, std::size_t d) {
  const BigInt bn = n, bd = d;
  return 2 * bd * bd * bn * bn * bn + 2 * bd * bn * bn - ceil_of(eps * eps * Rational(bd * bd * bn * bn)) +
         2 * ceil_log2(2 * d * n) + 1;
}

StretchMap phi_extractor(std::size_t n, const Rational& eps, std::optional<std::size_t> d_override) {
  auto p = ExtractorParams::make(n, eps, d_override);
  ExtractorReduction red(p);
  require(red.in_width() < red.out_width(), Errc::small_n,
          "extractor encoding takes " + std::to_string(red.in_width()) + " bits but the coefficients take only " +
              std::to_string(red.out_width()) + "; raise n or d");
  return red.map();
}

bool extractor_eval(const FieldCtx& f, std::span<const Elem> alphas, Elem x) { return (poly_eval(f, alphas, x) & 1U) != 0; }

BitString alphas_to_bits(std::span<const Elem> alphas, std::size_t elem_width) {
  BitString out;
  for (Elem a : alphas) out.append(BitString::from_uint(a, elem_width));
  return out;
}

std::vector<Elem> alphas_from_bits(const BitString& s, std::size_t elem_width) {
  require(elem_width > 0 && s.size() % elem_width == 0, Errc::invalid_argument, "coefficient string has a ragged tail");
  std::vector<Elem> out;
  BitReader rd(s);
  while (rd.remaining() > 0) out.push_back(rd.take_uint(elem_width));
  return out;
}

}  // namespace pigeon
