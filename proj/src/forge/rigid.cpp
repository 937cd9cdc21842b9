#include "pigeon/forge/rigid.hpp"

#include <memory>

#include "pigeon/error.hpp"

namespace pigeon {

namespace {

using Poly = std::vector<unsigned>;  // base-p coefficients, constant first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned inv_mod(unsigned a, unsigned p) {
  for (unsigned x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  fail(Errc::invalid_argument, "no inverse");
}

Poly poly_mod(Poly a, const Poly& m, unsigned p) {
  trim(a);
  const unsigned lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const unsigned factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = (a[shift + i] + p * p - factor * m[i] % p) % p;
    trim(a);
  }
  return a;
}

Poly digits(unsigned v, unsigned p, unsigned m) {
  Poly d(m);
  for (unsigned i = 0; i < m; ++i, v /= p) d[i] = v % p;
  return d;
}

unsigned from_digits(const Poly& d, unsigned p) {
  unsigned v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

bool irreducible(const Poly& f, unsigned p) {
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  for (unsigned deg = 1; deg <= m / 2; ++deg) {
    unsigned total = 1;
    for (unsigned i = 0; i < deg; ++i) total *= p;
    for (unsigned low = 0; low < total; ++low) {
      Poly g = digits(low, p, deg);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime_power(unsigned q) {
  if (q < 2) return false;
  unsigned p = 2;
  while (q % p != 0) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

SmallField::SmallField(unsigned q) : q_(q) {
  require(q >= 2 && q <= 256 && is_prime_power(q), Errc::invalid_argument,
          "field order must be a prime power between 2 and 256, got " + std::to_string(q));
  p_ = 2;
  while (q % p_ != 0) ++p_;
  m_ = 0;
  for (unsigned t = q; t > 1; t /= p_) ++m_;
  // Smallest monic irreducible of degree m, by base-p value of its lower coefficients.
  for (unsigned low = 0;; ++low) {
    Poly f = digits(low, p_, m_);
    f.push_back(1);
    if (m_ == 1 || (f[0] != 0 && irreducible(f, p_))) {
      modulus_ = f;
      break;
    }
  }
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  for (unsigned a = 0; a < q; ++a) {
    const Poly da = digits(a, p_, m_);
    Poly na(m_);
    for (unsigned i = 0; i < m_; ++i) na[i] = (p_ - da[i]) % p_;
    neg_[a] = static_cast<std::uint16_t>(from_digits(na, p_));
    for (unsigned b = 0; b < q; ++b) {
      const Poly db = digits(b, p_, m_);
      Poly sum(m_);
      for (unsigned i = 0; i < m_; ++i) sum[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = static_cast<std::uint16_t>(from_digits(sum, p_));
      Poly prod(2 * m_ - 1, 0);
      for (unsigned i = 0; i < m_; ++i)
        for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      Poly red = poly_mod(prod, modulus_, p_);
      red.resize(m_, 0);
      mul_[a * q + b] = static_cast<std::uint16_t>(from_digits(red, p_));
    }
  }
}

Matrix multiply(const SmallField& f, const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), Errc::invalid_argument, "matrix shapes do not chain");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::uint16_t acc = 0;
      for (std::size_t t = 0; t < a.cols(); ++t) acc = f.add(acc, f.mul(a(i, t), b(t, j)));
      out(i, j) = acc;
    }
  return out;
}

RigidReduction::RigidReduction(std::size_t n, std::size_t rank, std::size_t s_count, unsigned q)
    : n_(n), r_(rank), s_count_(s_count), field_(q) {
  require(n >= 1, Errc::invalid_argument, "matrix dimension must be positive");
}

std::size_t RigidReduction::in_width() const noexcept {
  return 2 * r_ * n_ * entry_width() + s_count_ * (2 * index_width() + entry_width());
}

BitString RigidReduction::encode(const RigidWitness& w) const {
  require(w.l.rows() == n_ && w.l.cols() == r_ && w.r.rows() == r_ && w.r.cols() == n_, Errc::invalid_argument,
          "L must be n x r and R must be r x n");
  require(w.s.size() == s_count_, Errc::invalid_argument, "S must list exactly s_count entries");
  const std::size_t e = entry_width(), iw = index_width();
  BitString out;
  for (auto v : w.l.entries()) out.append(BitString::from_uint(v, e));
  for (auto v : w.r.entries()) out.append(BitString::from_uint(v, e));
  for (const auto& t : w.s) {
    require(t.row < n_ && t.col < n_ && t.value < field_.order(), Errc::invalid_argument, "sparse entry out of range");
    out.append(BitString::from_uint(t.row, iw));
    out.append(BitString::from_uint(t.col, iw));
    out.append(BitString::from_uint(t.value, e));
  }
  return out;
}

RigidWitness RigidReduction::decode(const BitString& payload) const {
  require(payload.size() == in_width(), Errc::invalid_argument, "rigid payload width mismatch");
  const std::size_t e = entry_width(), iw = index_width();
  const std::uint64_t top = field_.order() - 1;
  BitReader rd(payload);
  auto entry = [&] { return static_cast<std::uint16_t>(std::min<std::uint64_t>(rd.take_uint(e), top)); };
  auto index = [&] { return static_cast<std::size_t>(std::min<std::uint64_t>(rd.take_uint(iw), n_ - 1)); };
  RigidWitness w{Matrix(n_, r_), Matrix(r_, n_), {}};
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < r_; ++j) w.l(i, j) = entry();
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < n_; ++j) w.r(i, j) = entry();
  for (std::size_t t = 0; t < s_count_; ++t) {
    SparseEntry s;
    s.row = index();
    s.col = index();
    s.value = entry();
    w.s.push_back(s);
  }
  return w;
}

Matrix RigidReduction::apply(const RigidWitness& w) const {
  Matrix m = r_ == 0 ? Matrix(n_, n_) : multiply(field_, w.l, w.r);
  for (const auto& s : w.s) m(s.row, s.col) = field_.sub(m(s.row, s.col), s.value);
  return m;
}

BitString RigidReduction::eval(const BitString& payload) const { return matrix_to_bits(apply(decode(payload))); }

BitString RigidReduction::matrix_to_bits(const Matrix& m) const {
  BitString out;
  for (auto v : m.entries()) out.append(BitString::from_uint(v, entry_width()));
  return out;
}

Matrix RigidReduction::matrix_from_bits(const BitString& s) const {
  require(s.size() == out_width(), Errc::invalid_argument, "matrix string width mismatch");
  BitReader rd(s);
  Matrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      m(i, j) = static_cast<std::uint16_t>(std::min<std::uint64_t>(rd.take_uint(entry_width()), field_.order() - 1));
  return m;
}

StretchMap RigidReduction::map() const {
  auto self = std::make_shared<RigidReduction>(*this);
  return StretchMap(in_width(), out_width(), MapKind::Rigid,
                    "rigid n=" + std::to_string(n_) + " r=" + std::to_string(r_) + " s=" + std::to_string(s_count_) +
                        " q=" + std::to_string(field_.order()),
                    [self](const BitString& x) { return self->eval(x); });
}

StretchMap phi_rigid(std::size_t n, std::size_t rank, std::size_t s_count, unsigned q) {
  RigidReduction red(n, rank, s_count, q);
  require(red.in_width() < red.out_width(), Errc::small_n,
          "encoding of L, R and S takes " + std::to_string(red.in_width()) + " bits, not fewer than the " +
              std::to_string(red.out_width()) + " bits of an n x n matrix");
  return red.map();
}

RigidBudget rigid_budget(std::size_t n, const Rational& eps, const Rational& delta) {
  require(n >= 2, Errc::invalid_argument, "rigidity budget needs n >= 2");
  RigidBudget b;
  b.rank = static_cast<std::size_t>(floor_of(eps * n));
  b.s_count = static_cast<std::size_t>(floor_of(delta * n * n / Rational(ceil_log2(n))));
  return b;
}

StretchMap phi_rigid_faithful(std::size_t n, const Rational& eps, const Rational& delta, unsigned q) {
  auto b = rigid_budget(n, eps, delta);
  return phi_rigid(n, b.rank, b.s_count, q);
}

}  // namespace pigeon
