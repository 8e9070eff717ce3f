#pragma once

// Ring-expression DSL.
//
//   ring    := product ;
//   product := atom { ("x" | "*") atom } ;
//   atom    := base [ "[x]/(" poly ")" ] | "(" ring ")" ;
//   base    := "Z" integer | "GF(" integer ")" ;
//   poly    := term { "+" term } ;
//   term    := [integer] ["x" ["^" integer]] ;
//
// Whitespace is insignificant. Outside a modulus "x" is the product operator,
// inside "[x]/( ... )" it is the indeterminate.

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ringline/error.hpp"

namespace ringline {

/// Univariate polynomial, coefficients[i] is the coefficient of x^i.
/// No trailing zero coefficients; the zero polynomial has no coefficients.
struct Polynomial {
  std::vector<std::uint64_t> coefficients;

  int degree() const noexcept { return static_cast<int>(coefficients.size()) - 1; }
  std::uint64_t leading() const noexcept { return coefficients.empty() ? 0 : coefficients.back(); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

struct ZnNode {
  std::uint64_t n = 2;
  friend bool operator==(const ZnNode&, const ZnNode&) = default;
};

struct GFNode {
  std::uint64_t p = 2;
  unsigned k = 1;

  std::uint64_t order() const noexcept {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) q *= p;
    return q;
  }
  friend bool operator==(const GFNode&, const GFNode&) = default;
};

using QuotientBase = std::variant<ZnNode, GFNode>;

/// base[x]/(modulus); the modulus is monic with coefficients reduced mod char(base).
struct QuotientNode {
  QuotientBase base;
  Polynomial modulus;
  friend bool operator==(const QuotientNode&, const QuotientNode&) = default;
};

struct RingExpr;

struct ProductNode {
  std::vector<RingExpr> factors;
  friend bool operator==(const ProductNode&, const ProductNode&);
};

struct RingExpr {
  std::variant<ZnNode, GFNode, QuotientNode, ProductNode> node;

  RingExpr() = default;
  RingExpr(ZnNode n) : node(n) {}
  RingExpr(GFNode n) : node(n) {}
  RingExpr(QuotientNode n) : node(std::move(n)) {}
  RingExpr(ProductNode n) : node(std::move(n)) {}

  friend bool operator==(const RingExpr&, const RingExpr&) = default;
};

inline bool operator==(const ProductNode& a, const ProductNode& b) { return a.factors == b.factors; }

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t characteristic_of(const QuotientBase& base) {
  return std::visit(
      [](const auto& b) -> std::uint64_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(b)>, ZnNode>)
          return b.n;
        else
          return b.p;
      },
      base);
}

}  // namespace detail

/// Splits q = p^k with p prime. Empty when q is not a prime power.
inline std::optional<GFNode> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d <= q / d; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  unsigned k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return std::nullopt;
  return GFNode{p, k};
}

/// Throws SemanticError if `expr` violates a structural invariant.
/// Expressions returned by parse() always pass.
inline void validate(const RingExpr& expr) {
  struct Visitor {
    void operator()(const ZnNode& z) const {
      if (z.n < 2) throw SemanticError("Z" + std::to_string(z.n) + ": modulus must be at least 2");
    }
    void operator()(const GFNode& g) const {
      if (!detail::is_prime(g.p)) throw SemanticError("GF: characteristic " + std::to_string(g.p) + " is not prime");
      if (g.k < 1) throw SemanticError("GF: degree must be at least 1");
      std::uint64_t q = 1;
      for (unsigned i = 0; i < g.k; ++i) {
        if (q > std::numeric_limits<std::uint64_t>::max() / g.p) throw SemanticError("GF: order does not fit a machine word");
        q *= g.p;
      }
    }
    void operator()(const QuotientNode& q) const {
      std::visit(*this, q.base);
      const auto ch = detail::characteristic_of(q.base);
      const auto& c = q.modulus.coefficients;
      if (q.modulus.degree() < 1) throw SemanticError("quotient modulus must have degree at least 1");
      for (auto v : c)
        if (v >= ch) throw SemanticError("quotient modulus coefficients must be reduced mod " + std::to_string(ch));
      if (c.back() != 1) throw SemanticError("quotient modulus must be monic");
    }
    void operator()(const ProductNode& p) const {
      if (p.factors.size() < 2) throw SemanticError("a product needs at least two factors");
      for (const auto& f : p.factors) std::visit(*this, f.node);
    }
  };
  std::visit(Visitor{}, expr.node);
}

namespace detail {

enum class Tok { Z, GF, LParen, RParen, LBracket, RBracket, Slash, Plus, Caret, Star, X, Integer, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::uint64_t value = 0;
};

inline const char* describe(Tok t) {
  switch (t) {
    case Tok::Z: return "'Z'";
    case Tok::GF: return "'GF'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Slash: return "'/'";
    case Tok::Plus: return "'+'";
    case Tok::Caret: return "'^'";
    case Tok::Star: return "'*'";
    case Tok::X: return "'x'";
    case Tok::Integer: return "integer";
    case Tok::End: return "end of input";
  }
  return "?";
}

inline std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t pos = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        const auto d = static_cast<std::uint64_t>(text[i] - '0');
        if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) throw SyntaxError(pos, "integer that fits 64 bits");
        v = v * 10 + d;
        ++i;
      }
      out.push_back({Tok::Integer, pos, v});
      continue;
    }
    Tok kind;
    switch (c) {
      case 'Z': kind = Tok::Z; break;
      case 'G':
        if (i + 1 < text.size() && text[i + 1] == 'F') {
          out.push_back({Tok::GF, pos});
          i += 2;
          continue;
        }
        throw SyntaxError(pos + 1, "'F' after 'G'");
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case '/': kind = Tok::Slash; break;
      case '+': kind = Tok::Plus; break;
      case '^': kind = Tok::Caret; break;
      case '*': kind = Tok::Star; break;
      case 'x': kind = Tok::X; break;
      default: throw SyntaxError(pos, "'Z', 'GF', '(' or an operator");
    }
    out.push_back({kind, pos});
    ++i;
  }
  out.push_back({Tok::End, text.size()});
  return out;
}

class Parser {
public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  RingExpr parse() {
    RingExpr r = product();
    if (peek().kind != Tok::End) throw SyntaxError(peek().pos, "'x', '*' or end of input");
    return r;
  }

private:
  static constexpr std::uint64_t max_exponent = 64;

  const Token& peek() const { return tokens_[at_]; }
  Token expect(Tok kind) {
    if (peek().kind != kind) throw SyntaxError(peek().pos, describe(kind));
    return tokens_[at_++];
  }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++at_;
    return true;
  }

  RingExpr product() {
    std::vector<RingExpr> factors;
    factors.push_back(atom());
    while (accept(Tok::X) || accept(Tok::Star)) factors.push_back(atom());
    if (factors.size() == 1) return std::move(factors.front());
    ProductNode flat;
    for (auto& f : factors) {
      if (auto* inner = std::get_if<ProductNode>(&f.node))
        for (auto& g : inner->factors) flat.factors.push_back(std::move(g));
      else
        flat.factors.push_back(std::move(f));
    }
    return flat;
  }

  RingExpr atom() {
    if (accept(Tok::LParen)) {
      RingExpr r = product();
      expect(Tok::RParen);
      return r;
    }
    QuotientBase base;
    if (accept(Tok::Z)) {
      const auto n = expect(Tok::Integer).value;
      if (n < 2) throw SemanticError("Z" + std::to_string(n) + ": modulus must be at least 2");
      base = ZnNode{n};
    } else if (accept(Tok::GF)) {
      expect(Tok::LParen);
      const auto q = expect(Tok::Integer).value;
      expect(Tok::RParen);
      auto g = prime_power(q);
      if (!g) throw SemanticError("GF(" + std::to_string(q) + "): " + std::to_string(q) + " is not a prime power");
      base = *g;
    } else {
      throw SyntaxError(peek().pos, "'Z', 'GF' or '('");
    }
    if (!accept(Tok::LBracket)) return std::visit([](auto b) { return RingExpr(b); }, base);
    expect(Tok::X);
    expect(Tok::RBracket);
    expect(Tok::Slash);
    expect(Tok::LParen);
    Polynomial f = poly(detail::characteristic_of(base));
    expect(Tok::RParen);
    if (f.degree() < 1) throw SemanticError("quotient modulus must have degree at least 1 after reduction");
    if (f.leading() != 1) throw SemanticError("quotient modulus is not monic after reduction");
    return QuotientNode{base, std::move(f)};
  }

  Polynomial poly(std::uint64_t characteristic) {
    std::vector<std::uint64_t> c;
    do {
      std::uint64_t coeff = 1;
      std::uint64_t exponent = 0;
      bool seen = false;
      if (peek().kind == Tok::Integer) {
        coeff = expect(Tok::Integer).value;
        seen = true;
      }
      if (accept(Tok::X)) {
        seen = true;
        exponent = 1;
        if (accept(Tok::Caret)) {
          const auto& t = expect(Tok::Integer);
          if (t.value > max_exponent) throw SemanticError("exponent " + std::to_string(t.value) + " is too large");
          exponent = t.value;
        }
      }
      if (!seen) throw SyntaxError(peek().pos, "polynomial term");
      if (c.size() <= exponent) c.resize(exponent + 1, 0);
      c[exponent] = (c[exponent] + coeff % characteristic) % characteristic;
    } while (accept(Tok::Plus));
    while (!c.empty() && c.back() == 0) c.pop_back();
    return Polynomial{std::move(c)};
  }

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
};

}  // namespace detail

/// Parses a ring expression; products are flattened into a single ProductNode.
inline RingExpr parse(std::string_view text) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) throw SyntaxError(0, "ring expression");
  return detail::Parser(text).parse();
}

inline std::string render(const Polynomial& f) {
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const auto c = f.coefficients[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

/// Canonical text form; parse(render(e)) == e for every valid flattened expression.
inline std::string render(const RingExpr& expr) {
  struct Visitor {
    std::string operator()(const ZnNode& z) const { return "Z" + std::to_string(z.n); }
    std::string operator()(const GFNode& g) const { return "GF(" + std::to_string(g.order()) + ")"; }
    std::string operator()(const QuotientNode& q) const {
      return std::visit(*this, q.base) + "[x]/(" + render(q.modulus) + ")";
    }
    std::string operator()(const ProductNode& p) const {
      std::string out;
      for (const auto& f : p.factors) {
        if (!out.empty()) out += " x ";
        const bool nested = std::holds_alternative<ProductNode>(f.node);
        out += nested ? "(" + std::visit(*this, f.node) + ")" : std::visit(*this, f.node);
      }
      return out;
    }
  };
  return std::visit(Visitor{}, expr.node);
}

}  // namespace ringline
