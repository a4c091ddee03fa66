#pragma once

// The constant field GF(2^k) = GF(2)[g] / (modulus), k <= 8.

#include <asq2/error.hpp>

#include <bit>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

namespace asq2 {

/// Degree of a nonzero GF(2) polynomial packed into bits.
inline int gf2_degree(unsigned bits) { return bits == 0 ? -1 : std::bit_width(bits) - 1; }

/// Remainder of a by m over GF(2), both packed.
inline unsigned gf2_mod(unsigned a, unsigned m) {
  const int dm = gf2_degree(m);
  for (int da = gf2_degree(a); da >= dm; da = gf2_degree(a)) a ^= m << (da - dm);
  return a;
}

/// Irreducibility over GF(2) by trial division with every polynomial of degree
/// 1 .. deg/2.
inline bool gf2_irreducible(unsigned m) {
  const int d = gf2_degree(m);
  if (d < 1) return false;
  for (unsigned f = 2; gf2_degree(f) <= d / 2; ++f) {
    if (gf2_mod(m, f) == 0) return false;
  }
  return true;
}

/// Parses `g^3+g+1` style text into packed GF(2) coefficient bits (no reduction).
inline unsigned parse_gf2_polynomial(std::string_view text) {
  unsigned bits = 0;
  std::size_t i = 0;
  bool expect_term = true;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_uint = [&]() -> unsigned {
    const std::size_t start = i;
    unsigned v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + static_cast<unsigned>(text[i] - '0');
      if (v > 31) throw SyntaxError("exponent too large", start);
      ++i;
    }
    if (i == start) throw SyntaxError("expected integer", start);
    return v;
  };
  skip();
  if (i == text.size()) throw SyntaxError("empty field element", 0);
  while (true) {
    skip();
    if (i == text.size()) {
      if (expect_term) throw SyntaxError("expected term", i);
      break;
    }
    if (!expect_term) {
      if (text[i] != '+' && text[i] != '-') throw SyntaxError("expected '+'", i);
      ++i;
      expect_term = true;
      continue;
    }
    if (text[i] == 'g') {
      ++i;
      skip();
      unsigned e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip();
        e = read_uint();
      }
      bits ^= 1u << e;
    } else if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      bits ^= read_uint() & 1u;
    } else {
      throw UnknownSymbol(std::string(1, text[i]), i);
    }
    expect_term = false;
  }
  return bits;
}

/// Canonical text of packed GF(2) bits, highest power first: `g^2+g+1`.
inline std::string format_gf2_polynomial(unsigned bits) {
  if (bits == 0) return "0";
  std::string out;
  for (int e = gf2_degree(bits); e >= 0; --e) {
    if (!(bits >> e & 1u)) continue;
    if (!out.empty()) out += '+';
    if (e == 0) {
      out += '1';
    } else if (e == 1) {
      out += 'g';
    } else {
      out += "g^" + std::to_string(e);
    }
  }
  return out;
}

/// GF(2^k) context. Instances are interned and live for the whole program, so
/// references and pointers to them never dangle.
class FqField {
 public:
  using Elem = std::uint8_t;
  static constexpr unsigned kMaxDegree = 8;

  /// Field defined by `modulus`, a packed irreducible GF(2) polynomial.
  static const FqField& get(unsigned modulus) {
    static std::mutex mutex;
    static std::map<unsigned, std::unique_ptr<const FqField>> registry;
    std::lock_guard lock(mutex);
    auto it = registry.find(modulus);
    if (it == registry.end()) {
      it = registry.emplace(modulus, std::unique_ptr<const FqField>(new FqField(modulus))).first;
    }
    return *it->second;
  }

  /// Field of degree k using the smallest irreducible modulus of that degree.
  /// k = 1 gives GF(2) with modulus g.
  static const FqField& standard(unsigned k) {
    if (k < 1 || k > kMaxDegree) throw Error("field degree must be in 1..8");
    for (unsigned m = 1u << k; m < (2u << k); ++m) {
      if (gf2_irreducible(m)) return get(m);
    }
    throw InvariantViolation("no irreducible polynomial found");
  }

  FqField(const FqField&) = delete;
  FqField& operator=(const FqField&) = delete;

  unsigned degree() const noexcept { return k_; }
  unsigned modulus() const noexcept { return modulus_; }
  std::size_t order() const noexcept { return std::size_t{1} << k_; }

  Elem reduce(unsigned bits) const { return static_cast<Elem>(gf2_mod(bits, modulus_)); }

  Elem add(Elem a, Elem b) const noexcept { return a ^ b; }

  Elem mul(Elem a, Elem b) const noexcept {
    if (k_ == 1) return a & b;
    unsigned x = a, r = 0;
    for (unsigned y = b; y != 0; y >>= 1) {
      if (y & 1u) r ^= x;
      x <<= 1;
      if (x >> k_ & 1u) x ^= modulus_;
    }
    return static_cast<Elem>(r);
  }

  /// Inverse by extended Euclid over GF(2)[g].
  Elem inv(Elem a) const {
    if (a == 0) throw DivisionByZero();
    unsigned r0 = modulus_, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
      unsigned q = 0, r = r0;
      const int d1 = gf2_degree(r1);
      for (int dr = gf2_degree(r); dr >= d1; dr = gf2_degree(r)) {
        q ^= 1u << (dr - d1);
        r ^= r1 << (dr - d1);
      }
      r0 = r1;
      r1 = r;
      const unsigned s = s0 ^ clmul(q, s1);
      s0 = s1;
      s1 = s;
    }
    return reduce(s0);
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem square(Elem a) const noexcept { return mul(a, a); }

  /// The unique square root a^(2^(k-1)).
  Elem sqrt(Elem a) const noexcept {
    for (unsigned i = 1; i < k_; ++i) a = square(a);
    return a;
  }

  /// All e with e^2 + e = c: empty or {e, e+1}.
  std::vector<Elem> artin_schreier_roots(Elem c) const {
    std::vector<Elem> out;
    for (unsigned e = 0; e < order(); ++e) {
      const auto v = static_cast<Elem>(e);
      if ((square(v) ^ v) == c) out.push_back(v);
    }
    return out;
  }

  /// Absolute trace to GF(2).
  Elem trace(Elem a) const noexcept {
    Elem t = 0, p = a;
    for (unsigned i = 0; i < k_; ++i) {
      t ^= p;
      p = square(p);
    }
    return t;
  }

  std::string format(Elem a) const { return format_gf2_polynomial(a); }
  Elem parse(std::string_view text) const { return reduce(parse_gf2_polynomial(text)); }

 private:
  explicit FqField(unsigned modulus) : modulus_(modulus) {
    const int d = gf2_degree(modulus);
    if (d < 1 || d > static_cast<int>(kMaxDegree)) throw Error("field modulus degree must be in 1..8");
    if (!gf2_irreducible(modulus)) {
      throw Error("field modulus " + format_gf2_polynomial(modulus) + " is reducible");
    }
    k_ = static_cast<unsigned>(d);
  }

  static unsigned clmul(unsigned a, unsigned b) noexcept {
    unsigned r = 0;
    for (; b != 0; b >>= 1, a <<= 1) {
      if (b & 1u) r ^= a;
    }
    return r;
  }

  unsigned modulus_;
  unsigned k_ = 0;
};

/// A GF(2^k) element bound to its field.
class FqElem {
 public:
  FqElem(const FqField& field, unsigned bits) : field_(&field), bits_(field.reduce(bits)) {}

  static FqElem zero(const FqField& f) { return {f, 0}; }
  static FqElem one(const FqField& f) { return {f, 1}; }
  static FqElem parse(const FqField& f, std::string_view text) { return {f, f.parse(text)}; }

  const FqField& field() const noexcept { return *field_; }
  FqField::Elem bits() const noexcept { return bits_; }
  bool is_zero() const noexcept { return bits_ == 0; }

  friend FqElem operator+(FqElem a, FqElem b) { return {*a.field_, a.field_->add(a.bits_, b.bits_)}; }
  friend FqElem operator-(FqElem a, FqElem b) { return a + b; }
  friend FqElem operator*(FqElem a, FqElem b) { return {*a.field_, a.field_->mul(a.bits_, b.bits_)}; }
  friend FqElem operator/(FqElem a, FqElem b) { return {*a.field_, a.field_->div(a.bits_, b.bits_)}; }
  friend bool operator==(FqElem a, FqElem b) noexcept {
    return a.field_ == b.field_ && a.bits_ == b.bits_;
  }

  FqElem inverse() const { return {*field_, field_->inv(bits_)}; }
  std::string str() const { return field_->format(bits_); }

 private:
  const FqField* field_;
  FqField::Elem bits_;
};

inline FqElem sqrt(FqElem a) { return {a.field(), a.field().sqrt(a.bits())}; }

/// The set {e : e^2 + e = c}.
inline std::vector<FqElem> as_solve(FqElem c) {
  std::vector<FqElem> out;
  for (auto e : c.field().artin_schreier_roots(c.bits())) out.emplace_back(c.field(), e);
  return out;
}

}  // namespace asq2
