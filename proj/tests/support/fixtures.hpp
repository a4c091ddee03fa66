#pragma once

#include <asq2/text.hpp>

#include <ostream>
#include <string_view>

namespace asq2 {

// Readable gtest failure messages.
inline void PrintTo(const Poly& p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(const RatFun& r, std::ostream* os) { *os << to_string(r); }
inline void PrintTo(const Quaternion& q, std::ostream* os) { *os << to_string(q); }

}  // namespace asq2

namespace asq2::test {

inline const FqField& gf2() { return FqField::standard(1); }
inline const FqField& gf4() { return FqField::standard(2); }

inline RatFun R(std::string_view s, const FqField& f = gf2()) { return parse_ratfun(f, s); }

inline Poly P(std::string_view s, const FqField& f = gf2()) {
  RatFun r = parse_ratfun(f, s);
  if (!r.is_polynomial()) throw Error("not a polynomial: " + std::string(s));
  return r.num();
}

/// [T, T+1) over GF(2)(T).
inline const QuatAlgebra& default_algebra() {
  static const QuatAlgebra alg(R("T"), R("T + 1"));
  return alg;
}

/// [T, T+g) over GF(4)(T).
inline const QuatAlgebra& gf4_algebra() {
  static const QuatAlgebra alg(R("T", gf4()), R("T + g", gf4()));
  return alg;
}

inline Quaternion Q(std::string_view s, const QuatAlgebra& alg = default_algebra()) { return parse_element(alg, s); }

inline std::vector<std::string> texts(const std::vector<Quaternion>& qs) {
  std::vector<std::string> out;
  for (const auto& q : qs) out.push_back(to_string(q));
  return out;
}

inline std::vector<std::string> texts(const std::vector<RatFun>& rs) {
  std::vector<std::string> out;
  for (const auto& r : rs) out.push_back(to_string(r));
  return out;
}

}  // namespace asq2::test
