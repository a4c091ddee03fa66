#pragma once

// Roots of z^2 + mu z + nu = 0 in a quaternion division algebra over F in
// characteristic 2.
//
// Dispatch on the class of mu:
//   mu = 0                 -> solve_mu_zero
//   mu in F^x              -> w = z/mu solves w^2 + w + nu/mu^2 = 0 (solve_mu_one)
//   mu square-central      -> solve_mu_sc
//   otherwise, eta = tr mu -> w = z/eta solves w^2 + (mu/eta) w + nu/eta^2 = 0,
//                             mu/eta Artin-Schreier (solve_mu_as)
//
// Every emitted root is substitution-checked. The equation has either at most
// two roots or infinitely many; the latter only with mu and nu central, and is
// reported as a trace/norm locus.

#include <asq2/quat.hpp>

#include <algorithm>
#include <variant>
#include <vector>

namespace asq2 {

struct SolveOptions {
  int witness_bound = kDefaultWitnessBound;
  std::size_t divisor_budget = kDefaultDivisorBudget;
};

inline bool substitute_check(const Quaternion& mu, const Quaternion& nu, const Quaternion& z) {
  return (z * z + mu * z + nu).is_zero();
}

/// {z not in F : tr z = trace, norm z = norm}. Either a verified witness or
/// the bound of an unsuccessful search; emptiness is never claimed.
struct TraceNormLocus {
  RatFun trace;
  RatFun norm;
  std::variant<Quaternion, NoneWithinBound> status;

  const Quaternion* witness() const noexcept { return std::get_if<Quaternion>(&status); }
};

struct FiniteRoots {
  std::vector<Quaternion> roots;
};

struct CentralPlusLocus {
  std::vector<RatFun> central_roots;
  TraceNormLocus locus;
};

using RootSet = std::variant<FiniteRoots, CentralPlusLocus>;

/// Sorted, duplicate-free; more than two roots is impossible in a division
/// algebra.
inline FiniteRoots make_finite(std::vector<Quaternion> roots) {
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  if (roots.size() > 2) throw InvariantViolation("more than two isolated roots");
  return {std::move(roots)};
}

/// Membership: finite list, central root, or locus (z not in F with matching
/// trace and norm).
inline bool contains(const RootSet& set, const Quaternion& z) {
  if (const auto* fin = std::get_if<FiniteRoots>(&set)) {
    return std::find(fin->roots.begin(), fin->roots.end(), z) != fin->roots.end();
  }
  const auto& cl = std::get<CentralPlusLocus>(set);
  if (z.is_central()) {
    return std::find(cl.central_roots.begin(), cl.central_roots.end(), z.a()) != cl.central_roots.end();
  }
  return z.trace() == cl.locus.trace && z.norm() == cl.locus.norm;
}

/// Candidate assembled by the Artin-Schreier or square-central algorithm
/// before the substitution filter.
struct CandidateRoot {
  RatFun b;
  std::optional<RatFun> c;
  std::optional<RatFun> d;
  RatFun a;
  Quaternion assembled;
  bool accepted = false;
};

enum class SolveCase { mu_zero, mu_one, mu_square_central, mu_artin_schreier };

inline std::string_view case_name(SolveCase c) {
  switch (c) {
    case SolveCase::mu_zero: return "mu-zero";
    case SolveCase::mu_one: return "mu-one";
    case SolveCase::mu_square_central: return "mu-square-central";
    case SolveCase::mu_artin_schreier: return "mu-artin-schreier";
  }
  return "?";
}

/// Scaling applied before the canonical case: z = factor * w.
struct Reduction {
  enum class Kind { scale_by_mu, scale_by_trace };
  Kind kind;
  RatFun factor;
};

/// Root set plus how it was obtained.
struct Solution {
  RootSet roots;
  SolveCase solve_case;
  std::vector<Reduction> reductions;
  std::vector<CandidateRoot> candidates;  ///< algorithm paths only
};

namespace detail {

inline Quaternion from_k(const Quaternion& gen, const KElem& z) {
  return z.u1 * gen + z.u0;
}

inline TraceNormLocus find_locus(const Quaternion& mu, const Quaternion& nu, const RatFun& trace,
                                 const RatFun& norm, const QuadraticForm& form, const RatFun& target,
                                 int bound, auto&& assemble) {
  auto res = bounded_form_witness(form, target, bound);
  if (auto* w = std::get_if<FormWitness>(&res)) {
    Quaternion z = assemble(w->values);
    if (z.is_central() || z.trace() != trace || z.norm() != norm || !substitute_check(mu, nu, z)) {
      throw InvariantViolation("locus witness failed verification");
    }
    return {trace, norm, std::move(z)};
  }
  return {trace, norm, std::get<NoneWithinBound>(res)};
}

}  // namespace detail

/// mu Artin-Schreier (tr mu = 1). With nu = nu0 + nu1 split along mu:
/// nu1 = 0 puts every root in F[mu]; otherwise roots are
///   z = (t + nu01) + b mu + (b + mu)^-1 nu1,  b^2 + b = t,
/// where t runs over the F-roots of
///   (t + nu01)^2 (t + alpha) + t alpha (t + alpha) + nu1^2 + nu00 (t + alpha).
/// nu1^2 is central since nu1 has trace zero.
inline Solution solve_mu_as(const Quaternion& mu, const Quaternion& nu, const SolveOptions& opt = {}) {
  if (!is_artin_schreier(mu)) throw NotArtinSchreier();
  const QuatAlgebra& alg = mu.algebra();
  const FqField& f = alg.field();
  Solution out{FiniteRoots{}, SolveCase::mu_artin_schreier, {}, {}};
  const RatFun alpha = (mu * mu + mu).a();
  const SplitCoords sc = split_coords(nu, mu);

  std::vector<Quaternion> roots;
  if (sc.nu1.is_zero()) {
    QuadExt k = [&] {
      try {
        return QuadExt(alpha);
      } catch (const NotDivision&) {
        alg.flag_split();
        throw;
      }
    }();
    const KElem muk{RatFun::zero(f), RatFun::one(f)};
    for (const auto& z : solve_quadratic_over_K(k, muk, KElem{sc.nu00, sc.nu01})) {
      roots.push_back(detail::from_k(mu, z));
    }
  } else {
    const Quaternion nu1sq = sc.nu1 * sc.nu1;
    if (!nu1sq.is_central()) throw InvariantViolation("nu1^2 is not central");
    const RatFun& n1 = nu1sq.a();
    const RatFun n01sq = sc.nu01.square();
    // Expanded: t^3 + (nu01^2 + alpha^2 + nu00) t + (alpha nu01^2 + alpha nu00 + nu1^2).
    const std::vector<RatFun> cubic{alpha * n01sq + alpha * sc.nu00 + n1, n01sq + alpha.square() + sc.nu00,
                                    RatFun::zero(f), RatFun::one(f)};
    for (const auto& t : rational_roots(cubic, opt.divisor_budget)) {
      if (t == alpha) continue;
      for (const auto& b : as_solve_F(t)) {
        const Quaternion shifted = mu + b;
        if (shifted.norm().is_zero()) {
          alg.flag_split();
          throw NotDivision("b^2 + b + alpha = 0 for some b in F");
        }
        RatFun a = t + sc.nu01;
        Quaternion z = b * mu + shifted.inverse() * sc.nu1 + a;
        const bool ok = substitute_check(mu, nu, z);
        if (ok) roots.push_back(z);
        out.candidates.push_back({b, std::nullopt, std::nullopt, std::move(a), std::move(z), ok});
      }
    }
  }
  for (const auto& z : roots) {
    if (!substitute_check(mu, nu, z)) throw InvariantViolation("root failed substitution");
  }
  out.roots = make_finite(std::move(roots));
  return out;
}

/// mu square-central (mu^2 = beta). With theta Artin-Schreier, theta mu + mu
/// theta = mu, and nu = nu00 + nu01 theta + nu10 mu + nu11 mu theta, roots are
///   z = (b c + nu10) + b theta + c mu + d mu theta,  d = (b^2 + nu01) / beta,
/// where b^3 + (nu01 + beta) b + beta nu11 = 0 and
///   (b^2 + beta) c^2 + beta (d + 1) c + (nu10^2 + b^2 alpha + alpha beta d^2 + nu00) = 0.
inline Solution solve_mu_sc(const Quaternion& mu, const Quaternion& nu, const SolveOptions& opt = {}) {
  if (classify(mu).kind != ElementClass::Kind::square_central) throw NotSquareCentral();
  const FqField& f = mu.field();
  Solution out{FiniteRoots{}, SolveCase::mu_square_central, {}, {}};
  const RatFun beta = (mu * mu).a();
  const Quaternion theta = as_complement(mu);
  const RatFun alpha = (theta * theta + theta).a();
  const Quaternion mu_theta = mu * theta;
  const SplitCoords sc = split_coords(nu, theta, mu);
  const RatFun beta_inv = beta.inverse();

  std::vector<Quaternion> roots;
  const std::vector<RatFun> cubic{beta * sc.nu11, sc.nu01 + beta, RatFun::zero(f), RatFun::one(f)};
  for (const auto& b : rational_roots(cubic, opt.divisor_budget)) {
    const RatFun b2 = b.square();
    const RatFun d = (b2 + sc.nu01) * beta_inv;
    const RatFun qa = b2 + beta;
    const RatFun qb = beta * (d + RatFun::one(f));
    const RatFun qc = sc.nu10.square() + b2 * alpha + alpha * beta * d.square() + sc.nu00;
    std::vector<RatFun> cs;
    try {
      cs = quad_solve_F(qa, qb, qc);
    } catch (const IdentityEquation&) {
      mu.algebra().flag_split();
      throw NotDivision("degenerate coordinate equation: the algebra is split");
    }
    for (const auto& c : cs) {
      RatFun a = b * c + sc.nu10;
      Quaternion z = b * theta + c * mu + d * mu_theta + a;
      const bool ok = substitute_check(mu, nu, z);
      if (ok) roots.push_back(z);
      out.candidates.push_back({b, c, d, std::move(a), std::move(z), ok});
    }
  }
  out.roots = make_finite(std::move(roots));
  return out;
}

/// z^2 + z + nu = 0.
///   nu central: central Artin-Schreier roots, plus the locus tr z = 1,
///     norm z = nu searched as a^2 + a + beta (c^2 + c d + alpha d^2) = nu + alpha
///     with z = a + x + c y + d xy.
///   nu square-central: exactly {a + nu : a^2 + a = nu^2}.
///   nu = eta x' with x' Artin-Schreier: all roots lie in F[x'].
inline Solution solve_mu_one(const Quaternion& nu, const SolveOptions& opt = {}) {
  const QuatAlgebra& alg = nu.algebra();
  const FqField& f = alg.field();
  const Quaternion one = Quaternion::one(alg);
  Solution out{FiniteRoots{}, SolveCase::mu_one, {}, {}};
  const ElementClass cls = classify(nu);
  switch (cls.kind) {
    case ElementClass::Kind::zero:
    case ElementClass::Kind::central: {
      const RatFun& n = nu.a();
      const RatFun& al = alg.alpha();
      const RatFun& be = alg.beta();
      QuadraticForm form{3,
                         {{FormTerm::Kind::square, RatFun::one(f), 0, 0},
                          {FormTerm::Kind::linear, RatFun::one(f), 0, 0},
                          {FormTerm::Kind::square, be, 1, 0},
                          {FormTerm::Kind::cross, be, 1, 2},
                          {FormTerm::Kind::square, al * be, 2, 0}},
                         {}};
      auto assemble = [&](const std::vector<RatFun>& v) {
        return Quaternion(alg, v[0], RatFun::one(f), v[1], v[2]);
      };
      out.roots = CentralPlusLocus{as_solve_F(n), detail::find_locus(one, nu, RatFun::one(f), n, form, n + al,
                                                                     opt.witness_bound, assemble)};
      return out;
    }
    case ElementClass::Kind::square_central: {
      std::vector<Quaternion> roots;
      for (const auto& a : as_solve_F((nu * nu).a())) roots.push_back(nu + a);
      out.roots = make_finite(std::move(roots));
      break;
    }
    case ElementClass::Kind::general: {
      const RatFun& eta = *cls.eta;
      const Quaternion gen = nu / eta;
      const QuadExt k = [&] {
        try {
          return QuadExt((gen * gen + gen).a());
        } catch (const NotDivision&) {
          alg.flag_split();
          throw;
        }
      }();
      std::vector<Quaternion> roots;
      for (const auto& z : solve_quadratic_over_K(k, k.one(), KElem{RatFun::zero(f), eta})) {
        roots.push_back(detail::from_k(gen, z));
      }
      out.roots = make_finite(std::move(roots));
      break;
    }
  }
  for (const auto& z : std::get<FiniteRoots>(out.roots).roots) {
    if (!substitute_check(one, nu, z)) throw InvariantViolation("root failed substitution");
  }
  return out;
}

/// z^2 = nu.
///   nu = 0: only z = 0.
///   nu central: the central square root if any, plus the locus tr z = 0,
///     norm z = nu searched as (a^2 alpha + a b + b^2) beta + c^2 = nu with
///     z = a xy + b y + c and (a, b) != 0.
///   nu square-central: no roots (a root would commute with nu and lie in
///     F[nu], whose squares are central).
///   nu = eta x': z = p + q x' with q^2 = eta and p^2 = eta (x'^2 + x').
inline Solution solve_mu_zero(const Quaternion& nu, const SolveOptions& opt = {}) {
  const QuatAlgebra& alg = nu.algebra();
  const FqField& f = alg.field();
  const Quaternion zero = Quaternion::zero(alg);
  Solution out{FiniteRoots{}, SolveCase::mu_zero, {}, {}};
  const ElementClass cls = classify(nu);
  switch (cls.kind) {
    case ElementClass::Kind::zero:
      out.roots = make_finite({zero});
      break;
    case ElementClass::Kind::central: {
      const RatFun& n = nu.a();
      const RatFun& al = alg.alpha();
      const RatFun& be = alg.beta();
      QuadraticForm form{3,
                         {{FormTerm::Kind::square, al * be, 0, 0},
                          {FormTerm::Kind::cross, be, 0, 1},
                          {FormTerm::Kind::square, be, 1, 0},
                          {FormTerm::Kind::square, RatFun::one(f), 2, 0}},
                         {0, 1}};
      auto assemble = [&](const std::vector<RatFun>& v) {
        return Quaternion(alg, v[2], RatFun::zero(f), v[1], v[0]);
      };
      std::vector<RatFun> central;
      if (auto s = n.sqrt()) central.push_back(std::move(*s));
      out.roots = CentralPlusLocus{
          std::move(central),
          detail::find_locus(zero, nu, RatFun::zero(f), n, form, n, opt.witness_bound, assemble)};
      return out;
    }
    case ElementClass::Kind::square_central:
      out.roots = FiniteRoots{};
      break;
    case ElementClass::Kind::general: {
      const RatFun& eta = *cls.eta;
      const Quaternion gen = nu / eta;
      const RatFun alpha_x = (gen * gen + gen).a();
      std::vector<Quaternion> roots;
      if (auto q = eta.sqrt()) {
        if (auto p = (eta * alpha_x).sqrt()) roots.push_back(*q * gen + *p);
      }
      out.roots = make_finite(std::move(roots));
      break;
    }
  }
  for (const auto& z : std::get<FiniteRoots>(out.roots).roots) {
    if (!substitute_check(zero, nu, z)) throw InvariantViolation("root failed substitution");
  }
  return out;
}

namespace detail {

/// Maps roots of w^2 + (mu/s) w + nu/s^2 = 0 to roots z = s w of the original.
inline void scale_roots(Solution& sol, const RatFun& s) {
  if (auto* fin = std::get_if<FiniteRoots>(&sol.roots)) {
    for (auto& z : fin->roots) z = s * z;
    std::sort(fin->roots.begin(), fin->roots.end());
    return;
  }
  auto& cl = std::get<CentralPlusLocus>(sol.roots);
  for (auto& r : cl.central_roots) r = s * r;
  std::sort(cl.central_roots.begin(), cl.central_roots.end());
  cl.locus.trace = s * cl.locus.trace;
  cl.locus.norm = s.square() * cl.locus.norm;
  if (auto* w = std::get_if<Quaternion>(&cl.locus.status)) *w = s * *w;
}

}  // namespace detail

/// Full solver with reductions and candidate bookkeeping.
inline Solution solve_traced(const Quaternion& mu, const Quaternion& nu, const SolveOptions& opt = {}) {
  if (&mu.algebra() != &nu.algebra()) throw Error("coefficients from different algebras");
  mu.algebra().require_preflight();
  const ElementClass cls = classify(mu);
  Solution sol = [&] {
    switch (cls.kind) {
      case ElementClass::Kind::zero: return solve_mu_zero(nu, opt);
      case ElementClass::Kind::central: {
        const RatFun& m = mu.a();
        Solution s = solve_mu_one(nu / m.square(), opt);
        detail::scale_roots(s, m);
        if (!m.is_one()) s.reductions.insert(s.reductions.begin(), Reduction{Reduction::Kind::scale_by_mu, m});
        return s;
      }
      case ElementClass::Kind::square_central: return solve_mu_sc(mu, nu, opt);
      case ElementClass::Kind::general: break;
    }
    const RatFun& eta = *cls.eta;
    Solution s = solve_mu_as(mu / eta, nu / eta.square(), opt);
    detail::scale_roots(s, eta);
    for (auto& c : s.candidates) c.assembled = eta * c.assembled;
    if (!eta.is_one()) s.reductions.insert(s.reductions.begin(), Reduction{Reduction::Kind::scale_by_trace, eta});
    return s;
  }();

  if (const auto* fin = std::get_if<FiniteRoots>(&sol.roots)) {
    for (const auto& z : fin->roots) {
      if (!substitute_check(mu, nu, z)) throw InvariantViolation("root failed substitution");
    }
  } else {
    const auto& cl = std::get<CentralPlusLocus>(sol.roots);
    if (!mu.is_central() || !nu.is_central()) throw InvariantViolation("locus with non-central coefficients");
    for (const auto& r : cl.central_roots) {
      if (!substitute_check(mu, nu, Quaternion::central(mu.algebra(), r))) {
        throw InvariantViolation("central root failed substitution");
      }
    }
    if (const auto* w = cl.locus.witness(); w && !substitute_check(mu, nu, *w)) {
      throw InvariantViolation("witness failed substitution");
    }
  }
  return sol;
}

inline RootSet solve(const Quaternion& mu, const Quaternion& nu, const SolveOptions& opt = {}) {
  return solve_traced(mu, nu, opt).roots;
}

}  // namespace asq2
