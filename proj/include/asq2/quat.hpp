#pragma once

// The quaternion algebra [alpha, beta) over F = GF(2^k)(T):
//   F + Fx + Fy + Fxy,  x^2 + x = alpha,  y^2 = beta,  xy + yx = y.

#include <asq2/fieldsolve.hpp>

#include <array>
#include <atomic>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace asq2 {

class Quaternion;

/// Algebra context. Elements keep a pointer to it, so it is neither copyable
/// nor movable and must outlive them. Apart from the split latch it is
/// immutable after construction.
class QuatAlgebra {
 public:
  /// Necessary conditions for a division algebra, checked at construction.
  struct Preflight {
    bool alpha_irreducible = false;    ///< x^2 + x = alpha has no root in F
    bool beta_not_visible_norm = false;  ///< no p^2 + pq + alpha q^2 = beta within bound
    int bound = kDefaultWitnessBound;
    bool passed() const noexcept { return alpha_irreducible && beta_not_visible_norm; }
  };

  QuatAlgebra(RatFun alpha, RatFun beta, int witness_bound = kDefaultWitnessBound)
      : alpha_(std::move(alpha)), beta_(std::move(beta)), alpha_beta_(alpha_ * beta_) {
    if (beta_.is_zero()) throw Error("beta must be nonzero");
    preflight_.bound = witness_bound;
    preflight_.alpha_irreducible = as_solve_F(alpha_).empty();
    QuadraticForm norm_form{2,
                            {{FormTerm::Kind::square, RatFun::one(field()), 0, 0},
                             {FormTerm::Kind::cross, RatFun::one(field()), 0, 1},
                             {FormTerm::Kind::square, alpha_, 1, 0}},
                            {}};
    preflight_.beta_not_visible_norm =
        std::holds_alternative<NoneWithinBound>(bounded_form_witness(norm_form, beta_, witness_bound));
    build_table();
  }

  QuatAlgebra(const QuatAlgebra&) = delete;
  QuatAlgebra& operator=(const QuatAlgebra&) = delete;

  const FqField& field() const noexcept { return alpha_.field(); }
  const RatFun& alpha() const noexcept { return alpha_; }
  const RatFun& beta() const noexcept { return beta_; }
  const Preflight& preflight() const noexcept { return preflight_; }

  /// Throws SplitAlgebra unless the preflight passed.
  void require_preflight() const {
    if (!preflight_.passed()) {
      throw SplitAlgebra(preflight_.alpha_irreducible ? "beta is a norm from F[x]"
                                                      : "x^2 + x = alpha has a root in F");
    }
  }

  /// Set once a nonzero element of norm zero has been seen.
  bool split_detected() const noexcept { return split_.load(std::memory_order_acquire); }
  void flag_split() const noexcept { split_.store(true, std::memory_order_release); }

  /// Nonzero entries of e_i * e_j on the basis (1, x, y, xy).
  struct TableEntry {
    int index;
    const RatFun* coeff;  ///< nullptr means 1
  };
  const std::vector<TableEntry>& product(int i, int j) const noexcept { return table_[i * 4 + j]; }

 private:
  void build_table() {
    using E = std::vector<TableEntry>;
    const RatFun* a = &alpha_;
    const RatFun* b = &beta_;
    for (int j = 0; j < 4; ++j) {
      table_[j] = E{{j, nullptr}};
      table_[j * 4] = E{{j, nullptr}};
    }
    table_[1 * 4 + 1] = E{{0, a}, {1, nullptr}};            // x x   = alpha + x
    table_[1 * 4 + 2] = E{{3, nullptr}};                     // x y   = xy
    table_[1 * 4 + 3] = E{{2, a}, {3, nullptr}};             // x xy  = alpha y + xy
    table_[2 * 4 + 1] = E{{2, nullptr}, {3, nullptr}};       // y x   = y + xy
    table_[2 * 4 + 2] = E{{0, b}};                           // y y   = beta
    table_[2 * 4 + 3] = E{{0, b}, {1, b}};                   // y xy  = beta + beta x
    table_[3 * 4 + 1] = E{{2, a}};                           // xy x  = alpha y
    table_[3 * 4 + 2] = E{{1, b}};                           // xy y  = beta x
    table_[3 * 4 + 3] = E{{0, &alpha_beta_}};                // xy xy = alpha beta
  }

  RatFun alpha_;
  RatFun beta_;
  RatFun alpha_beta_;
  Preflight preflight_;
  std::array<std::vector<TableEntry>, 16> table_;
  mutable std::atomic<bool> split_{false};
};

/// a + b x + c y + d xy.
class Quaternion {
 public:
  Quaternion(const QuatAlgebra& alg, RatFun a, RatFun b, RatFun c, RatFun d)
      : alg_(&alg), c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static Quaternion zero(const QuatAlgebra& alg) { return central(alg, RatFun::zero(alg.field())); }
  static Quaternion one(const QuatAlgebra& alg) { return central(alg, RatFun::one(alg.field())); }
  static Quaternion central(const QuatAlgebra& alg, RatFun a) {
    const RatFun z = RatFun::zero(alg.field());
    return {alg, std::move(a), z, z, z};
  }
  static Quaternion basis(const QuatAlgebra& alg, int i) {
    Quaternion q = zero(alg);
    q.c_[i] = RatFun::one(alg.field());
    return q;
  }
  static Quaternion x(const QuatAlgebra& alg) { return basis(alg, 1); }
  static Quaternion y(const QuatAlgebra& alg) { return basis(alg, 2); }
  static Quaternion xy(const QuatAlgebra& alg) { return basis(alg, 3); }

  const QuatAlgebra& algebra() const noexcept { return *alg_; }
  const FqField& field() const noexcept { return alg_->field(); }
  const RatFun& coord(int i) const noexcept { return c_[i]; }
  const std::array<RatFun, 4>& coords() const noexcept { return c_; }
  const RatFun& a() const noexcept { return c_[0]; }
  const RatFun& b() const noexcept { return c_[1]; }
  const RatFun& c() const noexcept { return c_[2]; }
  const RatFun& d() const noexcept { return c_[3]; }

  bool is_zero() const noexcept {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
  }
  bool is_central() const noexcept { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

  friend Quaternion operator+(const Quaternion& p, const Quaternion& q) {
    return {*p.alg_, p.c_[0] + q.c_[0], p.c_[1] + q.c_[1], p.c_[2] + q.c_[2], p.c_[3] + q.c_[3]};
  }
  friend Quaternion operator-(const Quaternion& p, const Quaternion& q) { return p + q; }
  Quaternion& operator+=(const Quaternion& q) { return *this = *this + q; }

  friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    Quaternion r = zero(*p.alg_);
    for (int i = 0; i < 4; ++i) {
      if (p.c_[i].is_zero()) continue;
      for (int j = 0; j < 4; ++j) {
        if (q.c_[j].is_zero()) continue;
        const RatFun pq = p.c_[i] * q.c_[j];
        for (const auto& e : p.alg_->product(i, j)) {
          r.c_[e.index] += e.coeff ? pq * *e.coeff : pq;
        }
      }
    }
    return r;
  }
  Quaternion& operator*=(const Quaternion& q) { return *this = *this * q; }

  friend Quaternion operator*(const RatFun& s, const Quaternion& q) {
    return {*q.alg_, s * q.c_[0], s * q.c_[1], s * q.c_[2], s * q.c_[3]};
  }
  friend Quaternion operator*(const Quaternion& q, const RatFun& s) { return s * q; }
  friend Quaternion operator/(const Quaternion& q, const RatFun& s) { return s.inverse() * q; }
  friend Quaternion operator+(const Quaternion& q, const RatFun& s) {
    Quaternion r = q;
    r.c_[0] += s;
    return r;
  }

  /// Canonical involution: a + b + b x + c y + d xy.
  Quaternion sigma() const { return {*alg_, c_[0] + c_[1], c_[1], c_[2], c_[3]}; }
  /// q + sigma(q).
  const RatFun& trace() const noexcept { return c_[1]; }
  /// q sigma(q) = a^2 + ab + alpha b^2 + beta (c^2 + cd + alpha d^2).
  RatFun norm() const {
    const RatFun& al = alg_->alpha();
    return c_[0].square() + c_[0] * c_[1] + al * c_[1].square() +
           alg_->beta() * (c_[2].square() + c_[2] * c_[3] + al * c_[3].square());
  }

  /// sigma(q) / norm(q). A nonzero element of norm zero latches the algebra
  /// as split and throws NotDivision.
  Quaternion inverse() const {
    if (is_zero()) throw DivisionByZero();
    const RatFun n = norm();
    if (n.is_zero()) {
      alg_->flag_split();
      throw NotDivision("nonzero element of norm zero: the algebra is split");
    }
    return sigma() / n;
  }

  friend bool operator==(const Quaternion& p, const Quaternion& q) noexcept { return p.c_ == q.c_; }
  friend std::strong_ordering operator<=>(const Quaternion& p, const Quaternion& q) noexcept {
    for (int i = 0; i < 4; ++i) {
      if (auto c = p.c_[i] <=> q.c_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  const QuatAlgebra* alg_;
  std::array<RatFun, 4> c_;
};

/// Partition of Q into {0}, F^x, square-central elements and the rest (Q').
struct ElementClass {
  enum class Kind { zero, central, square_central, general };
  Kind kind;
  std::optional<RatFun> eta;  ///< the trace, for general elements
};

inline std::string_view class_name(ElementClass::Kind k) {
  switch (k) {
    case ElementClass::Kind::zero: return "zero";
    case ElementClass::Kind::central: return "central";
    case ElementClass::Kind::square_central: return "square-central";
    case ElementClass::Kind::general: return "general";
  }
  return "?";
}

/// Zero, central, square-central (trace zero, not central), or general with
/// eta = trace; in the last case q / eta is Artin-Schreier.
inline ElementClass classify(const Quaternion& q) {
  if (q.is_zero()) return {ElementClass::Kind::zero, std::nullopt};
  if (q.is_central()) return {ElementClass::Kind::central, std::nullopt};
  if (q.trace().is_zero()) return {ElementClass::Kind::square_central, std::nullopt};
  return {ElementClass::Kind::general, q.trace()};
}

/// e not in F with e^2 + e in F; equivalently trace(e) = 1.
inline bool is_artin_schreier(const Quaternion& e) { return e.trace().is_one(); }

/// q = q0 + q1 with q0 e = e q0 and q1 e + e q1 = q1. The map q -> qe + eq
/// projects onto the second summand.
inline std::pair<Quaternion, Quaternion> v_split(const Quaternion& q, const Quaternion& e) {
  if (!is_artin_schreier(e)) throw NotArtinSchreier();
  Quaternion q1 = q * e + e * q;
  Quaternion q0 = q + q1;
  return {std::move(q0), std::move(q1)};
}

/// nu0 = nu00 + nu01 e and, when a partner f is given, nu1 = nu10 f + nu11 f e.
struct SplitCoords {
  Quaternion nu0;
  Quaternion nu1;
  RatFun nu00;
  RatFun nu01;
  RatFun nu10;
  RatFun nu11;
};

namespace detail {

/// Solves sum_j x_j cols[j] = rhs over F for a 4x4 system.
inline std::optional<std::array<RatFun, 4>> solve4(const std::array<Quaternion, 4>& cols, const Quaternion& rhs) {
  const FqField& f = rhs.field();
  std::array<std::array<RatFun, 5>, 4> m{{
      {RatFun(f), RatFun(f), RatFun(f), RatFun(f), RatFun(f)},
      {RatFun(f), RatFun(f), RatFun(f), RatFun(f), RatFun(f)},
      {RatFun(f), RatFun(f), RatFun(f), RatFun(f), RatFun(f)},
      {RatFun(f), RatFun(f), RatFun(f), RatFun(f), RatFun(f)},
  }};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m[r][c] = cols[c].coord(r);
    m[r][4] = rhs.coord(r);
  }
  for (int c = 0; c < 4; ++c) {
    int p = c;
    while (p < 4 && m[p][c].is_zero()) ++p;
    if (p == 4) return std::nullopt;
    std::swap(m[p], m[c]);
    const RatFun inv = m[c][c].inverse();
    for (auto& x : m[c]) x *= inv;
    for (int r = 0; r < 4; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      const RatFun s = m[r][c];
      for (int k = 0; k < 5; ++k) m[r][k] -= s * m[c][k];
    }
  }
  return std::array<RatFun, 4>{m[0][4], m[1][4], m[2][4], m[3][4]};
}

}  // namespace detail

inline SplitCoords split_coords(const Quaternion& q, const Quaternion& e,
                                const std::optional<Quaternion>& partner = std::nullopt) {
  const FqField& fld = q.field();
  auto [q0, q1] = v_split(q, e);
  SplitCoords out{q0, q1, RatFun(fld), RatFun(fld), RatFun(fld), RatFun(fld)};
  if (!partner) {
    // trace(e) = 1, so trace(nu0) is the e-coordinate.
    out.nu01 = q0.trace();
    const Quaternion rest = q0 + out.nu01 * e;
    if (!rest.is_central()) throw InvariantViolation("V0 component outside F + F e");
    out.nu00 = rest.a();
    return out;
  }
  const Quaternion& f = *partner;
  if (classify(f).kind != ElementClass::Kind::square_central) throw NotSquareCentral();
  if (e * f + f * e != f) throw DegenerateBasis();
  const Quaternion fe = f * e;
  const auto x = detail::solve4({Quaternion::one(q.algebra()), e, f, fe}, q);
  if (!x) throw DegenerateBasis();
  out.nu00 = (*x)[0];
  out.nu01 = (*x)[1];
  out.nu10 = (*x)[2];
  out.nu11 = (*x)[3];
  if (out.nu01 * e + out.nu00 != q0 || out.nu10 * f + out.nu11 * fe != q1) {
    throw InvariantViolation("split coordinates failed reconstruction");
  }
  return out;
}

/// For square-central y', an Artin-Schreier x' with x'y' + y'x' = y'.
/// Takes the first z in (x, y, xy) with w = z y' + y' z != 0 and returns
/// y' w^-1 z.
inline Quaternion as_complement(const Quaternion& ysc) {
  if (classify(ysc).kind != ElementClass::Kind::square_central) throw NotSquareCentral();
  const QuatAlgebra& alg = ysc.algebra();
  for (int i = 1; i <= 3; ++i) {
    const Quaternion z = Quaternion::basis(alg, i);
    const Quaternion w = z * ysc + ysc * z;
    if (w.is_zero()) continue;
    Quaternion xc = ysc * w.inverse() * z;
    if (xc * ysc + ysc * xc != ysc || !(xc * xc + xc).is_central()) {
      throw InvariantViolation("complement failed its defining relations");
    }
    return xc;
  }
  throw CentralElement();
}

}  // namespace asq2
