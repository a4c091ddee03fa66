#pragma once

// Independent checks for the solver: exhaustive enumeration over a bounded box
// of polynomial quaternions, and random instances with a planted root. Nothing
// here touches the solver's candidate construction; roots are recognised by
// substitution alone.

#include <asq2/quadroots.hpp>
#include <asq2/random.hpp>

#include <cstdint>
#include <vector>

namespace asq2 {

/// Quaternions whose four coordinates are GF(2)-polynomials of degree <= bound.
class EnumBox {
 public:
  static constexpr int kMaxBound = 3;

  EnumBox(const QuatAlgebra& alg, int bound) : alg_(&alg), bound_(bound) {
    if (bound < 0 || bound > kMaxBound) throw BoxTooLarge(bound);
  }

  int bound() const noexcept { return bound_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << (4 * (bound_ + 1)); }

  /// Element number `index`; coordinate i takes bits [i*(bound+1), (i+1)*(bound+1)).
  Quaternion at(std::uint64_t index) const {
    const FqField& f = alg_->field();
    const unsigned w = static_cast<unsigned>(bound_ + 1);
    const std::uint64_t mask = (std::uint64_t{1} << w) - 1;
    auto coord = [&](unsigned i) { return RatFun(Poly::from_bits(f, index >> (i * w) & mask)); };
    return Quaternion(*alg_, coord(0), coord(1), coord(2), coord(3));
  }

 private:
  const QuatAlgebra* alg_;
  int bound_;
};

/// Every element of the box that satisfies z^2 + mu z + nu = 0, in
/// enumeration order.
inline std::vector<Quaternion> brute_roots(const Quaternion& mu, const Quaternion& nu, int bound) {
  const EnumBox box(mu.algebra(), bound);
  std::vector<Quaternion> out;
  for (std::uint64_t i = 0; i < box.size(); ++i) {
    Quaternion z = box.at(i);
    if (substitute_check(mu, nu, z)) out.push_back(std::move(z));
  }
  return out;
}

/// Coefficient case for generated instances.
enum class InstanceCase { artin_schreier, square_central, central, zero, general };

struct Instance {
  Quaternion mu;
  Quaternion nu;
  Quaternion z0;
};

namespace detail {

inline Poly random_poly(const FqField& f, CounterRng& rng, int bound) {
  std::vector<Poly::Coeff> c(static_cast<std::size_t>(bound) + 1);
  for (auto& x : c) x = static_cast<Poly::Coeff>(rng.below(f.order()));
  return Poly(f, std::move(c));
}

inline Poly random_nonzero_poly(const FqField& f, CounterRng& rng, int bound) {
  while (true) {
    Poly p = random_poly(f, rng, bound);
    if (!p.is_zero()) return p;
  }
}

}  // namespace detail

/// Random quaternion with polynomial coordinates of degree <= bound over GF(2^k).
inline Quaternion random_quaternion(const QuatAlgebra& alg, CounterRng& rng, int bound) {
  const FqField& f = alg.field();
  auto r = [&] { return RatFun(detail::random_poly(f, rng, bound)); };
  RatFun a = r(), b = r(), c = r(), d = r();
  return Quaternion(alg, std::move(a), std::move(b), std::move(c), std::move(d));
}

/// mu of the requested case, z0 random, nu := z0^2 + mu z0. Deterministic in seed.
inline Instance roundtrip_instance(const QuatAlgebra& alg, InstanceCase kind, std::uint64_t seed, int bound) {
  const FqField& f = alg.field();
  CounterRng rng(seed);
  auto r = [&] { return RatFun(detail::random_poly(f, rng, bound)); };
  auto nz = [&] { return RatFun(detail::random_nonzero_poly(f, rng, bound)); };
  const RatFun zero = RatFun::zero(f);

  Quaternion mu = Quaternion::zero(alg);
  switch (kind) {
    case InstanceCase::artin_schreier: {
      RatFun a = r(), c = r(), d = r();
      mu = Quaternion(alg, std::move(a), RatFun::one(f), std::move(c), std::move(d));
      break;
    }
    case InstanceCase::square_central: {
      RatFun a = r(), c = r(), d = r();
      while (c.is_zero() && d.is_zero()) {
        c = r();
        d = r();
      }
      mu = Quaternion(alg, std::move(a), zero, std::move(c), std::move(d));
      break;
    }
    case InstanceCase::central: mu = Quaternion::central(alg, nz()); break;
    case InstanceCase::zero: break;
    case InstanceCase::general: {
      RatFun a = r(), b = nz(), c = r(), d = r();
      mu = Quaternion(alg, std::move(a), std::move(b), std::move(c), std::move(d));
      break;
    }
  }
  Quaternion z0 = random_quaternion(alg, rng, bound);
  Quaternion nu = z0 * z0 + mu * z0;
  return {std::move(mu), std::move(nu), std::move(z0)};
}

}  // namespace asq2
