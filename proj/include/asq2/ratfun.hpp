#pragma once

// Rational functions GF(2^k)(T) in canonical form: gcd(num, den) = 1, den monic.
// Canonical form makes equality structural.

#include <asq2/poly.hpp>

#include <compare>
#include <optional>
#include <utility>

namespace asq2 {

class RatFun {
 public:
  /// Zero.
  explicit RatFun(const FqField& f) : num_(f), den_(Poly::one(f)) {}
  explicit RatFun(Poly num) : num_(std::move(num)), den_(Poly::one(num_.field())) {}
  RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RatFun zero(const FqField& f) { return RatFun(f); }
  static RatFun one(const FqField& f) { return RatFun(Poly::one(f)); }
  static RatFun constant(const FqField& f, Poly::Coeff c) { return RatFun(Poly::constant(f, c)); }
  static RatFun variable(const FqField& f) { return RatFun(Poly::variable(f)); }

  const FqField& field() const noexcept { return num_.field(); }
  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const noexcept { return den_.is_one(); }

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
    if (a.den_.is_one()) return RatFun(a.num_ * b.den_ + b.num_, b.den_, Canonical{});
    if (b.den_.is_one()) return RatFun(a.num_ + b.num_ * a.den_, a.den_, Canonical{});
    const Poly g = gcd(a.den_, b.den_);
    if (g.is_one()) return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, Canonical{});
    const Poly bd = b.den_ / g;
    return RatFun(a.num_ * bd + b.num_ * (a.den_ / g), a.den_ * bd);
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + b; }
  RatFun operator-() const { return *this; }

  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun(a.field());
    if (a.den_.is_one() && b.den_.is_one()) return RatFun(a.num_ * b.num_);
    // Cross-cancel so the product is already reduced.
    const Poly g1 = gcd(a.num_, b.den_);
    const Poly g2 = gcd(b.num_, a.den_);
    Poly n = (g1.is_one() ? a.num_ : a.num_ / g1) * (g2.is_one() ? b.num_ : b.num_ / g2);
    Poly d = (g2.is_one() ? a.den_ : a.den_ / g2) * (g1.is_one() ? b.den_ : b.den_ / g1);
    return RatFun(std::move(n), std::move(d), Monic{});
  }

  RatFun inverse() const {
    if (is_zero()) throw DivisionByZero();
    return RatFun(den_, num_, Monic{});
  }
  friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

  RatFun square() const { return RatFun(num_.square(), den_.square(), Canonical{}); }

  /// Square root in GF(2^k)(T). Frobenius is injective, so the root is unique
  /// when present; it is present iff numerator and denominator are squares.
  std::optional<RatFun> sqrt() const {
    auto n = num_.sqrt();
    if (!n) return std::nullopt;
    auto d = den_.sqrt();
    if (!d) return std::nullopt;
    return RatFun(std::move(*n), std::move(*d), Canonical{});
  }

  friend bool operator==(const RatFun& a, const RatFun& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const RatFun& a, const RatFun& b) noexcept {
    if (auto c = a.num_ <=> b.num_; c != 0) return c;
    return a.den_ <=> b.den_;
  }

 private:
  struct Canonical {};
  struct Monic {};

  /// Caller guarantees canonical form.
  RatFun(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  /// Caller guarantees coprimality; only the leading coefficient is fixed.
  RatFun(Poly num, Poly den, Monic) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
      den_ = Poly::one(num_.field());
    } else if (!den_.is_monic()) {
      const auto s = num_.field().inv(den_.lead());
      num_ = num_.scaled(s);
      den_ = den_.scaled(s);
    }
  }

  void normalize() {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
      den_ = Poly::one(num_.field());
      return;
    }
    if (!den_.is_one()) {
      const Poly g = gcd(num_, den_);
      if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
      }
    }
    if (!den_.is_monic()) {
      const auto s = num_.field().inv(den_.lead());
      num_ = num_.scaled(s);
      den_ = den_.scaled(s);
    }
  }

  Poly num_;
  Poly den_;
};

inline RatFun pow(RatFun base, unsigned e) {
  RatFun r = RatFun::one(base.field());
  while (e != 0) {
    if (e & 1u) r *= base;
    e >>= 1;
    if (e != 0) base = base.square();
  }
  return r;
}

}  // namespace asq2
