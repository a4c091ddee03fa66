#pragma once

// Canonical printing and parsing of polynomials, rational functions and
// quaternions.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := atom ['^' uint]
//   atom   := 'x' | 'y' | 'T' | 'g' | uint | '(' expr ')'
//
// '-' means '+' (characteristic 2); integer literals are read mod 2.
// Printing emits the canonical form, and print(parse(print(q))) == print(q).

#include <asq2/quat.hpp>

#include <cctype>
#include <functional>
#include <string>
#include <string_view>

namespace asq2 {

namespace detail {

inline bool is_power_of_g(Poly::Coeff c) { return c != 0 && (c & (c - 1)) == 0; }

/// True if s has a '+' outside parentheses.
inline bool has_top_level_sum(std::string_view s) {
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '+' && depth == 0) return true;
  }
  return false;
}

inline std::string wrap_sum(std::string s) { return has_top_level_sum(s) ? "(" + s + ")" : s; }

}  // namespace detail

/// `T^3 + g*T + 1`, highest power first.
inline std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  const FqField& f = p.field();
  const bool single = p.term_count() == 1;
  std::string out;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    const Poly::Coeff c = p.coeff(i);
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    const std::string cs = f.format(c);
    if (i == 0) {
      out += (single || detail::is_power_of_g(c) || c == 1) ? cs : "(" + cs + ")";
      continue;
    }
    const std::string mono = i == 1 ? "T" : "T^" + std::to_string(i);
    if (c == 1) {
      out += mono;
    } else if (detail::is_power_of_g(c)) {
      out += cs + "*" + mono;
    } else {
      out += "(" + cs + ")*" + mono;
    }
  }
  return out;
}

/// Polynomial text, or `num/den` with parentheses around multi-term parts.
inline std::string to_string(const RatFun& r) {
  if (r.is_polynomial()) return to_string(r.num());
  return detail::wrap_sum(to_string(r.num())) + "/" + detail::wrap_sum(to_string(r.den()));
}

/// `a + b*x + c*y + d*x*y`, zero coordinates omitted.
inline std::string to_string(const Quaternion& q) {
  static constexpr std::string_view kNames[] = {"", "x", "y", "x*y"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    const RatFun& c = q.coord(i);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += to_string(c);
    } else if (c.is_one()) {
      out += kNames[i];
    } else {
      out += detail::wrap_sum(to_string(c)) + "*" + std::string(kNames[i]);
    }
  }
  return out.empty() ? "0" : out;
}

/// Recursive-descent evaluator for the element grammar, generic over the value
/// type (RatFun or Quaternion).
template <class Value>
class ExprParser {
 public:
  using SymbolFn = std::function<Value(char, std::size_t)>;
  using IntFn = std::function<Value(unsigned)>;
  using DivFn = std::function<Value(const Value&, const Value&)>;

  ExprParser(std::string_view text, SymbolFn symbol, IntFn integer, DivFn divide)
      : text_(text), symbol_(std::move(symbol)), integer_(std::move(integer)), divide_(std::move(divide)) {}

  Value parse() {
    Value v = expr();
    skip();
    if (pos_ != text_.size()) throw SyntaxError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return v;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value expr() {
    Value v = term();
    while (true) {
      if (accept('+') || accept('-')) {
        v = v + term();
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = factor();
    while (true) {
      if (accept('*')) {
        v = v * factor();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        const Value d = factor();
        try {
          v = divide_(v, d);
        } catch (const DivisionByZero&) {
          throw SyntaxError("division by zero", at);
        }
      } else {
        return v;
      }
    }
  }

  Value factor() {
    Value base = atom();
    if (!accept('^')) return base;
    skip();
    const unsigned e = uint();
    Value r = integer_(1);
    for (unsigned bit = 1u << 31; bit != 0; bit >>= 1) {
      r = r * r;
      if (e & bit) r = r * base;
    }
    return r;
  }

  unsigned uint() {
    const std::size_t start = pos_;
    unsigned long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (v > 4096) throw SyntaxError("integer too large", start);
      ++pos_;
    }
    if (pos_ == start) throw SyntaxError("expected integer", start);
    return static_cast<unsigned>(v);
  }

  Value atom() {
    skip();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) throw SyntaxError("expected ')'", pos_);
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return integer_(uint() & 1u);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      if (pos_ - start != 1) throw UnknownSymbol(std::string(text_.substr(start, pos_ - start)), start);
      return symbol_(c, start);
    }
    throw SyntaxError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  SymbolFn symbol_;
  IntFn integer_;
  DivFn divide_;
};

/// Parses an element of F = GF(2^k)(T); symbols T and g.
inline RatFun parse_ratfun(const FqField& f, std::string_view text) {
  return ExprParser<RatFun>(
             text,
             [&f](char c, std::size_t pos) -> RatFun {
               if (c == 'T') return RatFun::variable(f);
               if (c == 'g') return RatFun::constant(f, f.reduce(2));
               throw UnknownSymbol(std::string(1, c), pos);
             },
             [&f](unsigned v) { return RatFun::constant(f, static_cast<Poly::Coeff>(v & 1u)); },
             [](const RatFun& a, const RatFun& b) { return a / b; })
      .parse();
}

/// Parses a quaternion; symbols x, y, T and g.
inline Quaternion parse_element(const QuatAlgebra& alg, std::string_view text) {
  const FqField& f = alg.field();
  return ExprParser<Quaternion>(
             text,
             [&alg, &f](char c, std::size_t pos) -> Quaternion {
               switch (c) {
                 case 'x': return Quaternion::x(alg);
                 case 'y': return Quaternion::y(alg);
                 case 'T': return Quaternion::central(alg, RatFun::variable(f));
                 case 'g': return Quaternion::central(alg, RatFun::constant(f, f.reduce(2)));
                 default: throw UnknownSymbol(std::string(1, c), pos);
               }
             },
             [&alg, &f](unsigned v) {
               return Quaternion::central(alg, RatFun::constant(f, static_cast<Poly::Coeff>(v & 1u)));
             },
             [](const Quaternion& a, const Quaternion& b) {
               if (b.is_central()) return a / b.a();
               return a * b.inverse();
             })
      .parse();
}

}  // namespace asq2
