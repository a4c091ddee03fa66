#pragma once

// Scalar equation solving over F = GF(2^k)(T) and over quadratic extensions
// F[x'] with x'^2 + x' = alpha.

#include <asq2/factor.hpp>
#include <asq2/gf2_linear.hpp>
#include <asq2/ratfun.hpp>

#include <algorithm>
#include <span>
#include <variant>
#include <vector>

namespace asq2 {

namespace detail {

/// Coefficient bits of p, k bits per T-power, over `coeff_slots` powers.
inline BitVec poly_to_bits(const Poly& p, std::size_t coeff_slots) {
  const unsigned k = p.field().degree();
  BitVec out(coeff_slots * k);
  const auto c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (unsigned b = 0; b < k; ++b) {
      if (c[i] >> b & 1u) out.set(i * k + b);
    }
  }
  return out;
}

inline Poly bits_to_poly(const FqField& f, const BitVec& bits, std::size_t offset, std::size_t coeff_slots) {
  const unsigned k = f.degree();
  std::vector<Poly::Coeff> c(coeff_slots, 0);
  for (std::size_t i = 0; i < coeff_slots; ++i) {
    unsigned v = 0;
    for (unsigned b = 0; b < k; ++b) {
      if (bits.get(offset + i * k + b)) v |= 1u << b;
    }
    c[i] = static_cast<Poly::Coeff>(v);
  }
  return Poly(f, std::move(c));
}

/// g^b T^i.
inline Poly basis_monomial(const FqField& f, std::size_t i, unsigned b) {
  return Poly::monomial(f, f.reduce(1u << b), i);
}

/// Every point of an affine solution space; the kernel must be small.
inline std::vector<BitVec> enumerate_affine(const AffineSolution& s, std::size_t max_dim) {
  if (s.kernel.size() > max_dim) throw InvariantViolation("unexpectedly large solution space");
  std::vector<BitVec> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << s.kernel.size()); ++mask) {
    BitVec x = s.particular;
    for (std::size_t i = 0; i < s.kernel.size(); ++i) {
      if (mask >> i & 1u) x ^= s.kernel[i];
    }
    out.push_back(std::move(x));
  }
  return out;
}

inline Poly lcm(const Poly& a, const Poly& b) { return a * (b / gcd(a, b)); }

}  // namespace detail

/// Complete set {y in F : y^2 + y = c}, sorted: empty or {y, y + 1}.
///
/// With c = p/q reduced, a reduced solution u/v forces q = v^2, and then
/// u^2 + u*v = p is GF(2)-linear in the coefficient bits of u with
/// deg u <= deg p.
inline std::vector<RatFun> as_solve_F(const RatFun& c) {
  const FqField& f = c.field();
  if (c.is_zero()) return {RatFun::zero(f), RatFun::one(f)};
  const auto v = c.den().sqrt();
  if (!v) return {};
  const Poly& p = c.num();
  const std::size_t dp = p.deg();
  const unsigned k = f.degree();
  const std::size_t slots = std::max(2 * dp, dp + v->deg()) + 1;

  std::vector<BitVec> columns;
  columns.reserve((dp + 1) * k);
  for (std::size_t i = 0; i <= dp; ++i) {
    for (unsigned b = 0; b < k; ++b) {
      const Poly m = detail::basis_monomial(f, i, b);
      columns.push_back(detail::poly_to_bits(m.square() + m * *v, slots));
    }
  }
  const auto sol = solve_gf2(columns, slots * k, detail::poly_to_bits(p, slots));
  if (!sol) return {};

  std::vector<RatFun> out;
  for (const auto& x : detail::enumerate_affine(*sol, 2)) {
    RatFun y(detail::bits_to_poly(f, x, 0, dp + 1), *v);
    if (y.square() + y != c) throw InvariantViolation("Artin-Schreier solution failed substitution");
    out.push_back(std::move(y));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Complete set {s in F : A s^2 + B s + C = 0}, sorted.
inline std::vector<RatFun> quad_solve_F(const RatFun& a, const RatFun& b, const RatFun& c) {
  if (a.is_zero() && b.is_zero()) {
    if (c.is_zero()) throw IdentityEquation();
    return {};
  }
  if (a.is_zero()) return {c / b};
  if (b.is_zero()) {
    if (auto s = (c / a).sqrt()) return {*s};
    return {};
  }
  // s = (B/A) w turns the equation into w^2 + w = AC/B^2.
  const RatFun scale = b / a;
  std::vector<RatFun> out;
  for (const auto& w : as_solve_F(a * c / b.square())) out.push_back(scale * w);
  std::sort(out.begin(), out.end());
  return out;
}

/// All roots in F of sum coeffs[i] s^i (degree <= 4), sorted.
///
/// After clearing denominators, a reduced root lambda*u/v (u, v monic, lambda
/// a unit) has v | a_n and u | a_0. The exponent of each irreducible in u/v,
/// and deg u - deg v, must be a slope of the corresponding Newton polygon,
/// which prunes the divisor lattice to a handful of candidates. Every
/// candidate is confirmed by exact evaluation.
inline std::vector<RatFun> rational_roots(std::span<const RatFun> coeffs,
                                          std::size_t budget = kDefaultDivisorBudget) {
  std::size_t n = coeffs.size();
  while (n > 0 && coeffs[n - 1].is_zero()) --n;
  if (n == 0) throw ZeroPolynomial();
  if (n > 5) throw Error("rational_roots supports degree at most 4");
  const FqField& f = coeffs[0].field();

  Poly l = Poly::one(f);
  for (std::size_t i = 0; i < n; ++i) {
    if (!coeffs[i].is_zero() && !coeffs[i].den().is_one()) l = detail::lcm(l, coeffs[i].den());
  }
  std::vector<Poly> a;
  Poly content(f);
  for (std::size_t i = 0; i < n; ++i) {
    a.push_back(coeffs[i].num() * (l / coeffs[i].den()));
    content = gcd(content, a.back());
  }
  for (auto& x : a) x = x / content;

  std::vector<RatFun> roots;
  std::size_t low = 0;
  while (a[low].is_zero()) ++low;
  if (low > 0) {
    roots.push_back(RatFun::zero(f));
    a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(low));
  }
  const std::size_t deg = a.size() - 1;
  if (deg == 1) roots.emplace_back(a[0], a[1]);
  if (deg >= 2) {
    const Factorization f0 = factor(a[0]);
    const Factorization fn = factor(a[deg]);
    std::vector<Poly> primes;
    for (const auto& pw : f0.factors) primes.push_back(pw.base);
    for (const auto& pw : fn.factors) primes.push_back(pw.base);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

    // min_i (val(a_i) + i*w) must be attained at least twice.
    auto slope_ok = [&](const std::vector<long>& val, long w, bool maximize) {
      long best = 0;
      int hits = 0;
      for (std::size_t i = 0; i <= deg; ++i) {
        if (a[i].is_zero()) continue;
        long x = val[i] + static_cast<long>(i) * w;
        if (maximize) x = -x;
        if (hits == 0 || x < best) {
          best = x;
          hits = 1;
        } else if (x == best) {
          ++hits;
        }
      }
      return hits >= 2;
    };

    std::vector<std::vector<long>> options;
    std::size_t count = 1;
    for (const auto& pr : primes) {
      std::vector<long> val(deg + 1, 0);
      for (std::size_t i = 0; i <= deg; ++i) {
        if (!a[i].is_zero()) val[i] = valuation(a[i], pr);
      }
      std::vector<long> ws;
      for (long w = -val[deg]; w <= val[0]; ++w) {
        if (slope_ok(val, w, false)) ws.push_back(w);
      }
      count *= ws.size();
      if (count == 0) break;
      if (count > budget) throw DivisorBudgetExceeded(count, budget);
      options.push_back(std::move(ws));
    }

    std::vector<long> degs(deg + 1, 0);
    for (std::size_t i = 0; i <= deg; ++i) {
      if (!a[i].is_zero()) degs[i] = static_cast<long>(a[i].deg());
    }

    std::vector<std::size_t> pick(options.size(), 0);
    while (count > 0) {
      Poly u = Poly::one(f), v = Poly::one(f);
      for (std::size_t j = 0; j < options.size(); ++j) {
        const long w = options[j][pick[j]];
        if (w > 0) u *= pow(primes[j], static_cast<unsigned>(w));
        if (w < 0) v *= pow(primes[j], static_cast<unsigned>(-w));
      }
      const long delta = static_cast<long>(u.deg()) - static_cast<long>(v.deg());
      if (slope_ok(degs, delta, true)) {
        // B_i = a_i u^i v^(deg-i); root lambda*u/v iff sum B_i lambda^i = 0.
        std::vector<Poly> terms;
        Poly up = Poly::one(f);
        for (std::size_t i = 0; i <= deg; ++i) {
          terms.push_back(a[i] * up * pow(v, static_cast<unsigned>(deg - i)));
          up *= u;
        }
        for (unsigned lam = 1; lam < f.order(); ++lam) {
          Poly sum(f);
          Poly::Coeff lp = 1;
          for (std::size_t i = 0; i <= deg; ++i) {
            sum += terms[i].scaled(lp);
            lp = f.mul(lp, static_cast<Poly::Coeff>(lam));
          }
          if (sum.is_zero()) roots.emplace_back(u.scaled(static_cast<Poly::Coeff>(lam)), v);
        }
      }
      std::size_t j = 0;
      while (j < pick.size() && ++pick[j] == options[j].size()) pick[j++] = 0;
      if (j == pick.size()) break;
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

/// Element u0 + u1 x' of a quadratic extension.
struct KElem {
  RatFun u0;
  RatFun u1;
  friend bool operator==(const KElem&, const KElem&) = default;
  friend auto operator<=>(const KElem& a, const KElem& b) {
    if (auto c = a.u0 <=> b.u0; c != 0) return c;
    return a.u1 <=> b.u1;
  }
};

/// K = F[x'] with x'^2 + x' = alpha, where alpha has no Artin-Schreier root in
/// F (checked), so K is a field.
class QuadExt {
 public:
  explicit QuadExt(RatFun alpha) : alpha_(std::move(alpha)) {
    if (!as_solve_F(alpha_).empty()) {
      throw NotDivision("x'^2 + x' = alpha has a root in F; F[x'] is not a field");
    }
  }

  const RatFun& alpha() const noexcept { return alpha_; }
  const FqField& field() const noexcept { return alpha_.field(); }

  KElem zero() const { return {RatFun::zero(field()), RatFun::zero(field())}; }
  KElem one() const { return {RatFun::one(field()), RatFun::zero(field())}; }
  KElem generator() const { return {RatFun::zero(field()), RatFun::one(field())}; }

  KElem add(const KElem& a, const KElem& b) const { return {a.u0 + b.u0, a.u1 + b.u1}; }
  KElem mul(const KElem& a, const KElem& b) const {
    const RatFun hi = a.u1 * b.u1;
    return {a.u0 * b.u0 + hi * alpha_, a.u0 * b.u1 + a.u1 * b.u0 + hi};
  }
  KElem square(const KElem& a) const {
    const RatFun hi = a.u1.square();
    return {a.u0.square() + hi * alpha_, hi};
  }
  KElem conj(const KElem& a) const { return {a.u0 + a.u1, a.u1}; }
  RatFun norm(const KElem& a) const { return a.u0.square() + a.u0 * a.u1 + a.u1.square() * alpha_; }
  KElem inverse(const KElem& a) const {
    const RatFun n = norm(a);
    if (n.is_zero()) {
      if (a.u0.is_zero() && a.u1.is_zero()) throw DivisionByZero();
      throw NotDivision("zero-norm element in quadratic extension");
    }
    const KElem c = conj(a);
    const RatFun inv = n.inverse();
    return {c.u0 * inv, c.u1 * inv};
  }
  bool is_zero(const KElem& a) const { return a.u0.is_zero() && a.u1.is_zero(); }

 private:
  RatFun alpha_;
};

/// Complete root set of z^2 + mu z + nu = 0 in K, sorted.
inline std::vector<KElem> solve_quadratic_over_K(const QuadExt& k, const KElem& mu, const KElem& nu) {
  std::vector<KElem> out;
  if (k.is_zero(mu)) {
    // (p + q x')^2 = (p^2 + q^2 alpha) + q^2 x'
    auto q = nu.u1.sqrt();
    if (!q) return out;
    auto p = (nu.u0 + nu.u1 * k.alpha()).sqrt();
    if (!p) return out;
    out.push_back({std::move(*p), std::move(*q)});
  } else {
    // z = mu w, w^2 + w = c; split into two chained equations over F.
    const KElem c = k.mul(nu, k.inverse(k.square(mu)));
    for (const auto& y1 : as_solve_F(c.u1)) {
      for (const auto& y0 : as_solve_F(c.u0 + y1.square() * k.alpha())) {
        out.push_back(k.mul(mu, KElem{y0, y1}));
      }
    }
  }
  for (const auto& z : out) {
    if (!k.is_zero(k.add(k.add(k.square(z), k.mul(mu, z)), nu))) {
      throw InvariantViolation("extension root failed substitution");
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// One monomial of a quadratic-plus-linear form:
/// coeff * var^2, coeff * var * other, coeff * var, or coeff.
struct FormTerm {
  enum class Kind { square, cross, linear, constant };
  Kind kind;
  RatFun coeff;
  std::size_t var = 0;
  std::size_t other = 0;
};

/// Form over at most three F-variables with at most one cross pair. A witness
/// must make at least one of `nonzero_any` nonzero (empty: no constraint).
struct QuadraticForm {
  std::size_t variables = 0;
  std::vector<FormTerm> terms;
  std::vector<std::size_t> nonzero_any;

  RatFun evaluate(std::span<const RatFun> values) const {
    RatFun sum = RatFun::zero(values.front().field());
    for (const auto& t : terms) {
      switch (t.kind) {
        case FormTerm::Kind::square: sum += t.coeff * values[t.var].square(); break;
        case FormTerm::Kind::cross: sum += t.coeff * values[t.var] * values[t.other]; break;
        case FormTerm::Kind::linear: sum += t.coeff * values[t.var]; break;
        case FormTerm::Kind::constant: sum += t.coeff; break;
      }
    }
    return sum;
  }
};

struct FormWitness {
  std::vector<RatFun> values;
};

/// The search found nothing with the enumerated variable of degree <= bound.
/// This is not a proof that no representation exists.
struct NoneWithinBound {
  int bound;
};

using FormSearchResult = std::variant<FormWitness, NoneWithinBound>;

inline constexpr int kDefaultWitnessBound = 3;

/// Semi-decision for form(values) = target over polynomial values.
///
/// The second variable of the cross pair runs over every polynomial of degree
/// <= bound over GF(2^k). For each fixed value the rest of the form is
/// GF(2)-affine in the coefficient bits of the remaining variables, which are
/// searched up to degree bound + ceil(deg(target)/2) after clearing
/// denominators. A returned witness always re-evaluates to target exactly.
inline FormSearchResult bounded_form_witness(const QuadraticForm& form, const RatFun& target,
                                             int bound = kDefaultWitnessBound) {
  if (form.variables == 0 || form.variables > 3) throw UnsupportedFormShape("form needs 1..3 variables");
  if (bound < 0) throw UnsupportedFormShape("negative degree bound");
  std::optional<std::pair<std::size_t, std::size_t>> pair;
  for (const auto& t : form.terms) {
    if (t.var >= form.variables || (t.kind == FormTerm::Kind::cross && t.other >= form.variables)) {
      throw UnsupportedFormShape("variable index out of range");
    }
    if (t.kind != FormTerm::Kind::cross) continue;
    if (t.var == t.other) throw UnsupportedFormShape("cross term needs two distinct variables");
    const std::pair<std::size_t, std::size_t> p{std::min(t.var, t.other), std::max(t.var, t.other)};
    if (pair && *pair != p) throw UnsupportedFormShape("more than one cross pair");
    pair = p;
  }
  for (auto v : form.nonzero_any) {
    if (v >= form.variables) throw UnsupportedFormShape("variable index out of range");
  }

  const FqField& f = target.field();
  RatFun rhs = target;
  Poly l = target.den();
  for (const auto& t : form.terms) {
    if (t.kind == FormTerm::Kind::constant) rhs += t.coeff;
    l = detail::lcm(l, t.coeff.den());
  }
  l = detail::lcm(l, rhs.den());
  const RatFun lr(l);
  std::vector<Poly> lambda;
  for (const auto& t : form.terms) lambda.push_back((t.coeff * lr).num());
  const Poly tau = (rhs * lr).num();

  const std::optional<std::size_t> enumerated = pair ? std::optional(pair->second) : std::nullopt;
  std::vector<std::size_t> free_vars;
  for (std::size_t v = 0; v < form.variables; ++v) {
    if (v != enumerated) free_vars.push_back(v);
  }
  const std::size_t tau_deg = tau.is_zero() ? 0 : tau.deg();
  const std::size_t slots = static_cast<std::size_t>(bound) + (tau_deg + 1) / 2 + 1;
  const unsigned k = f.degree();

  auto eval = [&](const std::vector<Poly>& vals) {
    Poly sum(f);
    for (std::size_t i = 0; i < form.terms.size(); ++i) {
      const auto& t = form.terms[i];
      switch (t.kind) {
        case FormTerm::Kind::square: sum += lambda[i] * vals[t.var].square(); break;
        case FormTerm::Kind::cross: sum += lambda[i] * vals[t.var] * vals[t.other]; break;
        case FormTerm::Kind::linear: sum += lambda[i] * vals[t.var]; break;
        case FormTerm::Kind::constant: break;
      }
    }
    return sum;
  };

  std::size_t enum_count = 1;
  if (enumerated) {
    for (int i = 0; i <= bound; ++i) {
      enum_count *= f.order();
      if (enum_count > (std::size_t{1} << 20)) throw UnsupportedFormShape("enumeration bound too large");
    }
  }

  for (std::size_t e = 0; e < enum_count; ++e) {
    std::vector<Poly> vals(form.variables, Poly(f));
    if (enumerated) {
      std::vector<Poly::Coeff> c(static_cast<std::size_t>(bound) + 1);
      std::size_t rest = e;
      for (auto& x : c) {
        x = static_cast<Poly::Coeff>(rest % f.order());
        rest /= f.order();
      }
      vals[*enumerated] = Poly(f, std::move(c));
    }
    const Poly base = eval(vals);
    std::vector<Poly> images;
    std::size_t rows = std::max(base.coeffs().size(), tau.coeffs().size());
    for (auto v : free_vars) {
      for (std::size_t i = 0; i < slots; ++i) {
        for (unsigned b = 0; b < k; ++b) {
          vals[v] = detail::basis_monomial(f, i, b);
          images.push_back(eval(vals) + base);
          rows = std::max(rows, images.back().coeffs().size());
        }
      }
      vals[v] = Poly(f);
    }
    std::vector<BitVec> columns;
    for (const auto& im : images) columns.push_back(detail::poly_to_bits(im, rows));
    const auto sol = solve_gf2(columns, rows * k, detail::poly_to_bits(tau + base, rows));
    if (!sol) continue;

    std::vector<BitVec> tries{sol->particular};
    for (const auto& kv : sol->kernel) {
      BitVec x = sol->particular;
      x ^= kv;
      tries.push_back(std::move(x));
    }
    for (const auto& x : tries) {
      std::vector<RatFun> values(form.variables, RatFun::zero(f));
      if (enumerated) values[*enumerated] = RatFun(vals[*enumerated]);
      for (std::size_t j = 0; j < free_vars.size(); ++j) {
        values[free_vars[j]] = RatFun(detail::bits_to_poly(f, x, j * slots * k, slots));
      }
      const bool nonzero_ok =
          form.nonzero_any.empty() ||
          std::any_of(form.nonzero_any.begin(), form.nonzero_any.end(),
                      [&](std::size_t v) { return !values[v].is_zero(); });
      if (!nonzero_ok) continue;
      if (form.evaluate(values) != target) throw InvariantViolation("form witness failed re-evaluation");
      return FormWitness{std::move(values)};
    }
  }
  return NoneWithinBound{bound};
}

}  // namespace asq2
