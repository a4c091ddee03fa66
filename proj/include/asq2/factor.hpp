#pragma once

// Square-free decomposition, factorization into monic irreducibles and
// divisor enumeration over GF(2^k)[T].
//
// Pipeline: square-free parts -> distinct-degree split -> equal-degree split.
// The equal-degree step uses the characteristic-2 trace map
// a + a^2 + ... + a^(2^(kd-1)) mod f with a fixed-seed generator, so the
// output is reproducible run to run.

#include <asq2/poly.hpp>
#include <asq2/random.hpp>

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace asq2 {

struct PolyPower {
  Poly base;
  unsigned exponent;
  friend bool operator==(const PolyPower&, const PolyPower&) = default;
};

/// p = unit * prod(base^exponent), bases monic, irreducible, sorted.
struct Factorization {
  Poly::Coeff unit = 1;
  std::vector<PolyPower> factors;

  Poly expand(const FqField& f) const {
    Poly r = Poly::constant(f, unit);
    for (const auto& [b, e] : factors) r *= pow(b, e);
    return r;
  }
};

namespace detail {

inline void squarefree_into(const Poly& f, unsigned scale, std::map<unsigned, Poly>& out) {
  auto record = [&](const Poly& part, unsigned mult) {
    if (part.is_constant()) return;
    auto [it, fresh] = out.try_emplace(mult * scale, part);
    if (!fresh) it->second *= part;
  };
  const Poly d = f.derivative();
  if (d.is_zero()) {
    // f is a polynomial in T^2: take the coefficient-wise square root.
    squarefree_into(*f.sqrt(), scale * 2, out);
    return;
  }
  Poly c = gcd(f, d);
  Poly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    record(w / y, i);
    ++i;
    w = std::move(y);
    c = c / w;
  }
  if (!c.is_one()) squarefree_into(*c.sqrt(), scale * 2, out);
}

/// Splits a monic square-free f into (product of all irreducible factors of
/// degree d, d) pairs.
inline std::vector<std::pair<Poly, unsigned>> distinct_degree(Poly f) {
  std::vector<std::pair<Poly, unsigned>> out;
  const FqField& fld = f.field();
  const Poly t = Poly::variable(fld);
  Poly h = t % f;
  for (unsigned d = 1; 2 * d <= f.deg(); ++d) {
    h = frobenius_mod(h, fld.degree(), f);
    Poly g = gcd(f, h + t);
    if (!g.is_one()) {
      f = f / g;
      h = h % f;
      out.emplace_back(std::move(g), d);
    }
  }
  if (f.deg() > 0) {
    const auto d = static_cast<unsigned>(f.deg());
    out.emplace_back(std::move(f), d);
  }
  return out;
}

inline void equal_degree(const Poly& f, unsigned d, CounterRng& rng, std::vector<Poly>& out) {
  const std::size_t n = f.deg();
  if (n == d) {
    out.push_back(f);
    return;
  }
  const FqField& fld = f.field();
  const unsigned steps = fld.degree() * d;
  while (true) {
    std::vector<Poly::Coeff> a(n);
    for (auto& c : a) c = static_cast<Poly::Coeff>(rng.below(fld.order()));
    Poly cur = Poly(fld, std::move(a));
    if (cur.is_constant()) continue;
    Poly tr = cur;
    for (unsigned i = 1; i < steps; ++i) {
      cur = cur.square() % f;
      tr += cur;
    }
    Poly g = gcd(f, tr);
    if (g.is_constant() || g.deg() == n) continue;
    equal_degree(g, d, rng, out);
    equal_degree(f / g, d, rng, out);
    return;
  }
}

}  // namespace detail

/// Square-free decomposition of the monic part of p: pairwise coprime
/// square-free parts with their multiplicities, sorted by multiplicity.
inline std::vector<PolyPower> squarefree(const Poly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  std::map<unsigned, Poly> parts;
  if (!p.is_constant()) detail::squarefree_into(p.monic(), 1, parts);
  std::vector<PolyPower> out;
  for (auto& [m, part] : parts) out.push_back({std::move(part), m});
  return out;
}

inline Factorization factor(const Poly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  Factorization out;
  out.unit = p.lead();
  CounterRng rng(0x5eedf00dULL);
  for (const auto& [part, mult] : squarefree(p)) {
    for (auto& [block, d] : detail::distinct_degree(part)) {
      std::vector<Poly> irreducibles;
      detail::equal_degree(block, d, rng, irreducibles);
      for (auto& q : irreducibles) out.factors.push_back({std::move(q), mult});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const PolyPower& a, const PolyPower& b) { return a.base < b.base; });
  return out;
}

inline constexpr std::size_t kDefaultDivisorBudget = 4096;

/// Number of monic divisors of a nonzero p, saturating at `cap + 1`.
inline std::size_t divisor_count(const Factorization& fac, std::size_t cap) {
  std::size_t count = 1;
  for (const auto& pw : fac.factors) {
    count *= pw.exponent + 1;
    if (count > cap) return cap + 1;
  }
  return count;
}

/// All monic divisors of p ordered by degree, then coefficients top down.
inline std::vector<Poly> monic_divisors(const Poly& p, std::size_t budget = kDefaultDivisorBudget) {
  const Factorization fac = factor(p);
  const std::size_t count = divisor_count(fac, budget);
  if (count > budget) {
    std::size_t exact = 1;
    for (const auto& pw : fac.factors) exact *= pw.exponent + 1;
    throw DivisorBudgetExceeded(exact, budget);
  }
  std::vector<Poly> out{Poly::one(p.field())};
  out.reserve(count);
  for (const auto& [base, e] : fac.factors) {
    const std::size_t prev = out.size();
    Poly power = Poly::one(p.field());
    for (unsigned i = 1; i <= e; ++i) {
      power *= base;
      for (std::size_t j = 0; j < prev; ++j) out.push_back(out[j] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace asq2
