#pragma once

// Dense univariate polynomials over GF(2^k) in the transcendental T.

#include <asq2/gf2k.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace asq2 {

class Poly {
 public:
  using Coeff = FqField::Elem;

  /// The zero polynomial.
  explicit Poly(const FqField& field) : field_(&field) {}

  /// Coefficients low to high; each must already be reduced in `field`.
  Poly(const FqField& field, std::vector<Coeff> coeffs) : field_(&field), c_(std::move(coeffs)) { trim(); }

  static Poly constant(const FqField& f, Coeff c) { return Poly(f, std::vector<Coeff>{c}); }
  static Poly one(const FqField& f) { return constant(f, 1); }
  static Poly monomial(const FqField& f, Coeff c, std::size_t n) {
    std::vector<Coeff> v(n + 1, 0);
    v[n] = c;
    return Poly(f, std::move(v));
  }
  /// The polynomial T.
  static Poly variable(const FqField& f) { return monomial(f, 1, 1); }
  /// GF(2)-coefficient polynomial from packed bits (bit i = coefficient of T^i).
  static Poly from_bits(const FqField& f, std::uint64_t bits) {
    std::vector<Coeff> v;
    for (; bits != 0; bits >>= 1) v.push_back(static_cast<Coeff>(bits & 1u));
    return Poly(f, std::move(v));
  }

  const FqField& field() const noexcept { return *field_; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

  /// Degree, or nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  /// Degree of a nonzero polynomial.
  std::size_t deg() const {
    if (c_.empty()) throw ZeroPolynomial();
    return c_.size() - 1;
  }

  Coeff coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : Coeff{0}; }
  Coeff lead() const noexcept { return c_.empty() ? Coeff{0} : c_.back(); }
  std::span<const Coeff> coeffs() const noexcept { return c_; }
  /// Number of nonzero coefficients.
  std::size_t term_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](Coeff c) { return c != 0; }));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] ^= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) { return *this += o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a += b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(*a.field_);
    const FqField& f = *a.field_;
    std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, 0);
    if (f.degree() == 1) {
      for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (!a.c_[i]) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] ^= b.c_[j];
      }
    } else {
      for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (!a.c_[i]) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] ^= f.mul(a.c_[i], b.c_[j]);
      }
    }
    return Poly(f, std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(Coeff s) const {
    if (s == 0) return Poly(*field_);
    if (s == 1) return *this;
    std::vector<Coeff> r(c_);
    for (auto& x : r) x = field_->mul(x, s);
    return Poly(*field_, std::move(r));
  }

  /// this * T^n.
  Poly shifted(std::size_t n) const {
    if (is_zero() || n == 0) return *this;
    std::vector<Coeff> r(n, 0);
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(*field_, std::move(r));
  }

  Poly monic() const {
    if (is_zero() || is_monic()) return *this;
    return scaled(field_->inv(lead()));
  }

  /// Formal derivative; in characteristic 2 only odd-degree terms survive.
  Poly derivative() const {
    std::vector<Coeff> r(c_.size() > 1 ? c_.size() - 1 : 0, 0);
    for (std::size_t i = 1; i < c_.size(); i += 2) r[i - 1] = c_[i];
    return Poly(*field_, std::move(r));
  }

  /// Squaring is additive in characteristic 2: coefficients are squared and
  /// spread to even exponents.
  Poly square() const {
    if (is_zero()) return *this;
    std::vector<Coeff> r(2 * c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[2 * i] = field_->square(c_[i]);
    return Poly(*field_, std::move(r));
  }

  /// Exact square root, present iff every odd coefficient vanishes.
  std::optional<Poly> sqrt() const {
    std::vector<Coeff> r((c_.size() + 1) / 2, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i % 2 == 1) {
        if (c_[i] != 0) return std::nullopt;
      } else {
        r[i / 2] = field_->sqrt(c_[i]);
      }
    }
    return Poly(*field_, std::move(r));
  }

  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero();
    const FqField& f = *a.field_;
    if (a.c_.size() < b.c_.size()) return {Poly(f), a};
    std::vector<Coeff> r(a.c_);
    std::vector<Coeff> q(a.c_.size() - b.c_.size() + 1, 0);
    const std::size_t db = b.c_.size() - 1;
    const Coeff inv_lead = f.inv(b.c_.back());
    for (std::size_t i = r.size(); i-- > db;) {
      if (r[i] == 0) continue;
      const Coeff factor = f.mul(r[i], inv_lead);
      q[i - db] = factor;
      for (std::size_t j = 0; j <= db; ++j) r[i - db + j] ^= f.mul(factor, b.c_[j]);
    }
    r.resize(db);
    return {Poly(f, std::move(q)), Poly(f, std::move(r))};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.c_.size() < b.c_.size()) return a;
    const FqField& f = *a.field_;
    std::vector<Coeff> r(a.c_);
    const std::size_t db = b.c_.size() - 1;
    const Coeff inv_lead = f.inv(b.c_.back());
    for (std::size_t i = r.size(); i-- > db;) {
      if (r[i] == 0) continue;
      const Coeff factor = f.mul(r[i], inv_lead);
      for (std::size_t j = 0; j <= db; ++j) r[i - db + j] ^= f.mul(factor, b.c_[j]);
    }
    r.resize(db);
    return Poly(f, std::move(r));
  }

  /// Monic gcd; gcd(0, 0) = 0.
  friend Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// True iff b divides this.
  bool divisible_by(const Poly& b) const { return (*this % b).is_zero(); }

  friend bool operator==(const Poly& a, const Poly& b) noexcept { return a.c_ == b.c_; }

  /// Degree first (zero is smallest), then coefficients from the top down.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept {
    if (auto c = a.c_.size() <=> b.c_.size(); c != 0) return c;
    for (std::size_t i = a.c_.size(); i-- > 0;) {
      if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  void trim() noexcept {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  const FqField* field_;
  std::vector<Coeff> c_;
};

inline Poly pow(Poly base, unsigned e) {
  Poly r = Poly::one(base.field());
  while (e != 0) {
    if (e & 1u) r *= base;
    e >>= 1;
    if (e != 0) base = base.square();
  }
  return r;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

/// a^(2^n) mod m.
inline Poly frobenius_mod(Poly a, unsigned n, const Poly& m) {
  a = a % m;
  for (unsigned i = 0; i < n; ++i) a = a.square() % m;
  return a;
}

/// Exponent of the monic irreducible p in a nonzero a.
inline unsigned valuation(Poly a, const Poly& p) {
  if (a.is_zero()) throw ZeroPolynomial();
  unsigned v = 0;
  while (true) {
    auto [q, r] = divmod(a, p);
    if (!r.is_zero()) return v;
    a = std::move(q);
    ++v;
  }
}

}  // namespace asq2
