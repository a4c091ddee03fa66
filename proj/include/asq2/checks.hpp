#pragma once

// Randomized invariant suites shared by `asq2 selftest` and the acceptance
// runner. Each suite reports how many cases ran and the first failure.

#include <asq2/oracle.hpp>
#include <asq2/text.hpp>

#include <string>

namespace asq2 {

struct CheckReport {
  explicit CheckReport(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const noexcept { return failures == 0 && cases > 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

/// All y = u/v with u, v GF(2)-polynomials of degree <= bound and y^2 + y = c.
inline std::vector<RatFun> brute_as_solve(const RatFun& c, int bound) {
  const FqField& f = c.field();
  std::vector<RatFun> out;
  const std::uint64_t n = std::uint64_t{1} << (bound + 1);
  for (std::uint64_t u = 0; u < n; ++u) {
    for (std::uint64_t v = 1; v < n; ++v) {
      RatFun y(Poly::from_bits(f, u), Poly::from_bits(f, v));
      if (y.square() + y == c) out.push_back(std::move(y));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Associativity, distributivity, centrality of F, sigma as an involutive
/// anti-automorphism, norm multiplicativity, the characteristic identity, and
/// closed-form norm against q * sigma(q) on the first `literal_samples` cases.
inline CheckReport check_algebra_axioms(const QuatAlgebra& alg, std::size_t samples, std::uint64_t seed,
                                        std::size_t literal_samples, int bound = 2) {
  CheckReport rep("algebra-axioms");
  CounterRng rng(seed);
  const FqField& f = alg.field();
  for (std::size_t i = 0; i < samples; ++i) {
    const Quaternion p = random_quaternion(alg, rng, bound);
    const Quaternion q = random_quaternion(alg, rng, bound);
    const Quaternion r = random_quaternion(alg, rng, bound);
    const RatFun s(detail::random_poly(f, rng, bound));
    ++rep.cases;
    const std::string ctx = " p=" + to_string(p) + " q=" + to_string(q) + " r=" + to_string(r);
    if ((p * q) * r != p * (q * r)) rep.fail("associativity" + ctx);
    if (p * (q + r) != p * q + p * r || (p + q) * r != p * r + q * r) rep.fail("distributivity" + ctx);
    if (s * p != p * Quaternion::central(alg, s)) rep.fail("centrality" + ctx);
    if ((p * q).sigma() != q.sigma() * p.sigma()) rep.fail("anti-automorphism" + ctx);
    if (p.sigma().sigma() != p) rep.fail("involution" + ctx);
    if ((p * q).norm() != p.norm() * q.norm()) rep.fail("norm multiplicativity" + ctx);
    if (!(p * p + p.trace() * p + p.norm()).is_zero()) rep.fail("characteristic identity" + ctx);
    if (i < literal_samples) {
      const Quaternion lit = p * p.sigma();
      if (!lit.is_central() || lit.a() != p.norm()) rep.fail("closed-form norm" + ctx);
      if (p + p.sigma() != Quaternion::central(alg, p.trace())) rep.fail("trace" + ctx);
    }
  }
  return rep;
}

/// as_complement postconditions on random square-central inputs.
inline CheckReport check_complement(const QuatAlgebra& alg, std::size_t samples, std::uint64_t seed, int bound = 2) {
  CheckReport rep("complement");
  for (std::size_t i = 0; i < samples; ++i) {
    const Instance in = roundtrip_instance(alg, InstanceCase::square_central, seed + i, bound);
    const Quaternion& ysc = in.mu;
    ++rep.cases;
    try {
      const Quaternion xc = as_complement(ysc);
      if (xc * ysc + ysc * xc != ysc) rep.fail("x'y' + y'x' != y' for y'=" + to_string(ysc));
      if (!(xc * xc + xc).is_central()) rep.fail("x'^2 + x' not central for y'=" + to_string(ysc));
    } catch (const Error& e) {
      rep.fail(std::string(e.what()) + " for y'=" + to_string(ysc));
    }
  }
  return rep;
}

/// solve(mu, z0^2 + mu z0) contains z0.
inline CheckReport check_roundtrip(const QuatAlgebra& alg, InstanceCase kind, std::size_t samples,
                                   std::uint64_t seed, int bound = 2, const SolveOptions& opt = {}) {
  CheckReport rep("roundtrip");
  for (std::size_t i = 0; i < samples; ++i) {
    const Instance in = roundtrip_instance(alg, kind, seed + i, bound);
    ++rep.cases;
    try {
      if (!contains(solve(in.mu, in.nu, opt), in.z0)) {
        rep.fail("missing z0=" + to_string(in.z0) + " mu=" + to_string(in.mu));
      }
    } catch (const Error& e) {
      rep.fail(std::string(e.what()) + " mu=" + to_string(in.mu) + " z0=" + to_string(in.z0));
    }
  }
  return rep;
}

/// Brute-force roots over the degree-1 box must all lie in the solver's root
/// set, and every finite root must pass substitution. Coefficients are random
/// box elements.
inline CheckReport check_oracle_agreement(const QuatAlgebra& alg, std::size_t samples, std::uint64_t seed,
                                          int bound = 1, const SolveOptions& opt = {}) {
  CheckReport rep("oracle-agreement");
  const EnumBox box(alg, bound);
  CounterRng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    // Every fourth pair has a central mu and every eighth a central nu, so the
    // locus paths are exercised too.
    Quaternion mu = box.at(rng.below(box.size()));
    Quaternion nu = box.at(rng.below(box.size()));
    if (i % 4 == 1) mu = Quaternion::central(alg, mu.a());
    if (i % 8 == 3) nu = Quaternion::central(alg, nu.a());
    ++rep.cases;
    const std::string ctx = " mu=" + to_string(mu) + " nu=" + to_string(nu);
    try {
      const RootSet rs = solve(mu, nu, opt);
      for (const auto& z : brute_roots(mu, nu, bound)) {
        if (!contains(rs, z)) rep.fail("brute root " + to_string(z) + " missing" + ctx);
      }
      if (const auto* fin = std::get_if<FiniteRoots>(&rs)) {
        for (const auto& z : fin->roots) {
          if (!substitute_check(mu, nu, z)) rep.fail("returned root fails substitution" + ctx);
        }
      }
    } catch (const Error& e) {
      rep.fail(std::string(e.what()) + ctx);
    }
  }
  return rep;
}

/// Artin-Schreier solver against exhaustive search. Covers every c with
/// numerator and denominator of degree <= 2 over GF(2), then planted
/// c = y^2 + y up to `samples` cases.
inline CheckReport check_as_solve_brute(const FqField& f, std::size_t samples, std::uint64_t seed) {
  CheckReport rep("as-solve-brute");
  std::vector<RatFun> cs;
  for (std::uint64_t n = 0; n < 8; ++n) {
    for (std::uint64_t d = 1; d < 8; ++d) cs.emplace_back(Poly::from_bits(f, n), Poly::from_bits(f, d));
  }
  CounterRng rng(seed);
  while (cs.size() < samples) {
    RatFun y(Poly::from_bits(f, rng.below(4)), Poly::from_bits(f, 1 + rng.below(3)));
    cs.push_back(y.square() + y);
  }
  for (const auto& c : cs) {
    if (rep.cases == samples) break;
    ++rep.cases;
    if (as_solve_F(c) != brute_as_solve(c, 2)) rep.fail("mismatch for c=" + to_string(c));
  }
  return rep;
}

/// Algorithm paths: at most 6 candidates before the substitution filter and at
/// most 2 roots after it.
inline CheckReport check_candidate_bounds(const QuatAlgebra& alg, std::size_t samples, std::uint64_t seed,
                                          int bound = 2) {
  CheckReport rep("candidate-bounds");
  CounterRng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const auto kind = i % 2 == 0 ? InstanceCase::artin_schreier : InstanceCase::square_central;
    // Half planted (roots exist), half with an independent random nu.
    Instance in = roundtrip_instance(alg, kind, seed + i, bound);
    if (i % 4 >= 2) in.nu = random_quaternion(alg, rng, bound);
    ++rep.cases;
    try {
      const Solution s = kind == InstanceCase::artin_schreier ? solve_mu_as(in.mu, in.nu) : solve_mu_sc(in.mu, in.nu);
      const auto& roots = std::get<FiniteRoots>(s.roots).roots;
      if (s.candidates.size() > 6) rep.fail(std::to_string(s.candidates.size()) + " candidates");
      if (roots.size() > 2) rep.fail(std::to_string(roots.size()) + " roots");
    } catch (const Error& e) {
      rep.fail(std::string(e.what()) + " mu=" + to_string(in.mu));
    }
  }
  return rep;
}

}  // namespace asq2
