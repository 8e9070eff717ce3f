#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ringline/error.hpp"
#include "ringline/ringspec.hpp"

namespace ringline {

/// Index of an element within one FiniteRing.
struct Element {
  std::uint32_t index = 0;

  constexpr Element() = default;
  constexpr explicit Element(std::uint32_t i) : index(i) {}

  friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

/// A finite commutative ring with unity, stored as complete Cayley tables.
/// Immutable once built; every instance has passed the exhaustive axiom scan.
class FiniteRing {
public:
  /// Validates the tables (throws ValidationError) and derives units, negation and inverses.
  /// `add` and `mul` are row-major order x order tables of element indices.
  static FiniteRing from_tables(std::size_t order, std::vector<std::uint32_t> add, std::vector<std::uint32_t> mul,
                                Element zero, Element one, std::vector<std::string> labels,
                                std::string name = {}) {
    FiniteRing r;
    r.order_ = order;
    r.add_ = std::move(add);
    r.mul_ = std::move(mul);
    r.zero_ = zero;
    r.one_ = one;
    r.labels_ = std::move(labels);
    r.name_ = std::move(name);
    r.validate();
    r.derive();
    return r;
  }

  std::size_t order() const noexcept { return order_; }
  Element zero() const noexcept { return zero_; }
  Element one() const noexcept { return one_; }
  Element element(std::size_t i) const noexcept { return Element{static_cast<std::uint32_t>(i)}; }

  Element add(Element a, Element b) const noexcept { return Element{add_[a.index * order_ + b.index]}; }
  Element mul(Element a, Element b) const noexcept { return Element{mul_[a.index * order_ + b.index]}; }
  Element neg(Element a) const noexcept { return Element{neg_[a.index]}; }
  Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }

  /// n copies of one added together.
  Element multiple(std::uint64_t n) const noexcept {
    Element acc = zero_;
    for (std::uint64_t i = 0; i < n % characteristic_; ++i) acc = add(acc, one_);
    return acc;
  }

  bool is_unit(Element e) const noexcept { return unit_[e.index]; }
  bool is_zero_divisor(Element e) const noexcept { return !unit_[e.index]; }
  std::size_t unit_count() const noexcept { return unit_count_; }
  std::size_t zero_divisor_count() const noexcept { return order_ - unit_count_; }
  std::uint64_t characteristic() const noexcept { return characteristic_; }

  const std::string& label(Element e) const { return labels_[e.index]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Canonical expression text the ring was built from (empty for raw tables).
  const std::string& name() const noexcept { return name_; }

  std::optional<Element> find(std::string_view label) const {
    for (std::size_t i = 0; i < order_; ++i)
      if (labels_[i] == label) return element(i);
    return std::nullopt;
  }

  // Raw inverse lookup; order_ marks a non-unit. Use ringline::inverse() for the checked form.
  std::uint32_t raw_inverse(Element e) const noexcept { return inv_[e.index]; }

private:
  FiniteRing() = default;

  void validate() const {
    const std::size_t n = order_;
    auto fail = [&](const std::string& what) {
      throw ValidationError((name_.empty() ? std::string("ring") : name_) + ": " + what);
    };
    if (n < 2) fail("order must be at least 2");
    if (add_.size() != n * n || mul_.size() != n * n || labels_.size() != n) fail("table dimensions do not match order");
    if (zero_.index >= n || one_.index >= n) fail("identity out of range");
    for (std::size_t i = 0; i < n * n; ++i)
      if (add_[i] >= n || mul_[i] >= n) fail("table entry out of range");
    auto A = [&](std::size_t a, std::size_t b) { return add_[a * n + b]; };
    auto M = [&](std::size_t a, std::size_t b) { return mul_[a * n + b]; };
    for (std::size_t a = 0; a < n; ++a) {
      if (A(a, zero_.index) != a) fail("zero is not an additive identity");
      if (M(a, one_.index) != a) fail("one is not a multiplicative identity");
      bool has_neg = false;
      for (std::size_t b = 0; b < n; ++b) {
        if (A(a, b) != A(b, a)) fail("addition is not commutative");
        if (M(a, b) != M(b, a)) fail("multiplication is not commutative");
        has_neg = has_neg || A(a, b) == zero_.index;
      }
      if (!has_neg) fail("missing additive inverse");
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const auto ab_sum = A(a, b);
        const auto ab_prod = M(a, b);
        for (std::size_t c = 0; c < n; ++c) {
          if (A(ab_sum, c) != A(a, A(b, c))) fail("addition is not associative");
          if (M(ab_prod, c) != M(a, M(b, c))) fail("multiplication is not associative");
          if (M(a, A(b, c)) != A(ab_prod, M(a, c))) fail("multiplication does not distribute over addition");
        }
      }
  }

  void derive() {
    const std::size_t n = order_;
    neg_.assign(n, 0);
    inv_.assign(n, static_cast<std::uint32_t>(n));
    unit_.assign(n, false);
    unit_count_ = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (add_[a * n + b] == zero_.index) neg_[a] = static_cast<std::uint32_t>(b);
        if (mul_[a * n + b] == one_.index) {
          inv_[a] = static_cast<std::uint32_t>(b);
          unit_[a] = true;
        }
      }
    for (bool u : unit_) unit_count_ += u ? 1 : 0;
    characteristic_ = 1;
    for (Element acc = one_; acc != zero_; acc = add(acc, one_)) ++characteristic_;
  }

  std::size_t order_ = 0;
  std::vector<std::uint32_t> add_, mul_, neg_, inv_;
  std::vector<bool> unit_;
  std::size_t unit_count_ = 0;
  std::uint64_t characteristic_ = 0;
  Element zero_, one_;
  std::vector<std::string> labels_;
  std::string name_;
};

inline Element inverse(const FiniteRing& r, Element e) {
  const auto i = r.raw_inverse(e);
  if (i == r.order()) throw NotAUnit(r.label(e) + " is not a unit");
  return Element{i};
}

inline std::vector<Element> units(const FiniteRing& r) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < r.order(); ++i)
    if (r.is_unit(r.element(i))) out.push_back(r.element(i));
  return out;
}

/// Every non-unit, zero included.
inline std::vector<Element> zero_divisors(const FiniteRing& r) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < r.order(); ++i)
    if (!r.is_unit(r.element(i))) out.push_back(r.element(i));
  return out;
}

struct BuildOptions {
  std::uint64_t max_order = 4096;
};

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) throw BoundError("ring order overflows a machine word");
  return a * b;
}

inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

using IntPoly = std::vector<std::uint64_t>;  // coefficient of x^i at [i], over Z_p

// Remainder of a modulo monic b over Z_p.
inline IntPoly poly_rem(IntPoly a, const IntPoly& b, std::uint64_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t t = a.back() % p;
    const std::size_t shift = a.size() - 1 - db;
    if (t != 0)
      for (std::size_t j = 0; j <= db; ++j) a[shift + j] = (a[shift + j] + (p - t) * b[j]) % p;
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// Monic polynomial of degree `degree` whose lower coefficients are the base-p digits of
// `rank`, constant term most significant.
inline IntPoly monic_from_rank(std::uint64_t rank, unsigned degree, std::uint64_t p) {
  IntPoly f(degree + 1, 0);
  f[degree] = 1;
  for (unsigned i = degree; i-- > 0;) {
    f[i] = rank % p;
    rank /= p;
  }
  return f;
}

inline bool is_irreducible(const IntPoly& f, std::uint64_t p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= k / 2; ++d) {
    const auto count = checked_pow(p, d);
    for (std::uint64_t rank = 0; rank < count; ++rank)
      if (poly_rem(f, monic_from_rank(rank, d, p), p).empty()) return false;
  }
  return true;
}

}  // namespace detail

/// Smallest monic irreducible of degree k over Z_p, comparing coefficient vectors
/// lexicographically from the constant term up. Irreducibility is certified by trial
/// division against every monic polynomial of degree 1..k/2.
inline std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, unsigned k) {
  const auto count = detail::checked_pow(p, k);
  for (std::uint64_t rank = 0; rank < count; ++rank) {
    auto f = detail::monic_from_rank(rank, k, p);
    if (detail::is_irreducible(f, p)) return f;
  }
  throw InternalError("no irreducible polynomial of degree " + std::to_string(k) + " over Z" + std::to_string(p));
}

/// Number of elements of the ring an expression denotes. Throws BoundError on overflow.
inline std::uint64_t order_of(const RingExpr& expr) {
  struct Visitor {
    std::uint64_t operator()(const ZnNode& z) const { return z.n; }
    std::uint64_t operator()(const GFNode& g) const { return detail::checked_pow(g.p, g.k); }
    std::uint64_t operator()(const QuotientNode& q) const {
      return detail::checked_pow(std::visit(*this, q.base), static_cast<std::uint64_t>(q.modulus.degree()));
    }
    std::uint64_t operator()(const ProductNode& p) const {
      std::uint64_t n = 1;
      for (const auto& f : p.factors) n = detail::checked_mul(n, std::visit(*this, f.node));
      return n;
    }
  };
  return std::visit(Visitor{}, expr.node);
}

namespace detail {

inline FiniteRing zn_ring(std::uint64_t n, std::string name) {
  std::vector<std::uint32_t> add(n * n), mul(n * n);
  std::vector<std::string> labels(n);
  for (std::uint64_t a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    for (std::uint64_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<std::uint32_t>((a + b) % n);
      mul[a * n + b] = static_cast<std::uint32_t>((a * b) % n);
    }
  }
  return FiniteRing::from_tables(n, std::move(add), std::move(mul), Element{0}, Element{1}, std::move(labels),
                                 std::move(name));
}

inline std::string poly_label(const FiniteRing& base, const std::vector<Element>& digits, const std::string& var) {
  std::string out;
  for (std::size_t i = digits.size(); i-- > 0;) {
    const Element c = digits[i];
    if (c == base.zero()) continue;
    if (!out.empty()) out += "+";
    const std::string& cl = base.label(c);
    if (i == 0) {
      out += cl;
      continue;
    }
    if (c != base.one()) out += cl.find('+') == std::string::npos ? cl : "(" + cl + ")";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? base.label(base.zero()) : out;
}

// base[var]/(modulus), modulus monic given by its coefficients in `base`.
// Element index = sum of digit_i * |base|^i, digit_i the coefficient of var^i.
inline FiniteRing quotient_ring(const FiniteRing& base, const std::vector<Element>& modulus, const std::string& var,
                                std::string name) {
  const std::size_t q = base.order();
  const std::size_t d = modulus.size() - 1;
  std::size_t n = 1;
  for (std::size_t i = 0; i < d; ++i) n *= q;

  std::vector<std::vector<Element>> digits(n, std::vector<Element>(d));
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t v = x;
    for (std::size_t i = 0; i < d; ++i) {
      digits[x][i] = base.element(v % q);
      v /= q;
    }
  }
  auto encode = [&](const std::vector<Element>& c) {
    std::size_t v = 0;
    for (std::size_t i = d; i-- > 0;) v = v * q + c[i].index;
    return static_cast<std::uint32_t>(v);
  };

  std::vector<std::uint32_t> add(n * n), mul(n * n);
  std::vector<Element> sum(d), prod(2 * d - 1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto& da = digits[a];
      const auto& db = digits[b];
      for (std::size_t i = 0; i < d; ++i) sum[i] = base.add(da[i], db[i]);
      add[a * n + b] = encode(sum);

      std::fill(prod.begin(), prod.end(), base.zero());
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) prod[i + j] = base.add(prod[i + j], base.mul(da[i], db[j]));
      for (std::size_t deg = prod.size(); deg-- > d;) {
        const Element t = prod[deg];
        if (t == base.zero()) continue;
        for (std::size_t j = 0; j < d; ++j)
          prod[deg - d + j] = base.sub(prod[deg - d + j], base.mul(t, modulus[j]));
        prod[deg] = base.zero();
      }
      mul[a * n + b] = encode(std::vector<Element>(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(d)));
    }

  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) labels[x] = poly_label(base, digits[x], var);
  std::vector<Element> one_digits(d, base.zero());
  one_digits[0] = base.one();
  return FiniteRing::from_tables(n, std::move(add), std::move(mul), Element{encode(std::vector<Element>(d, base.zero()))},
                                 Element{encode(one_digits)}, std::move(labels), std::move(name));
}

inline FiniteRing gf_ring(const GFNode& g, std::string name) {
  if (g.k == 1) return zn_ring(g.p, std::move(name));
  const auto prime = zn_ring(g.p, "Z" + std::to_string(g.p));
  std::vector<Element> f;
  for (auto c : smallest_irreducible(g.p, g.k)) f.push_back(prime.element(c));
  return quotient_ring(prime, f, "w", std::move(name));
}

// Tuples ordered lexicographically, first factor most significant.
inline FiniteRing product_ring(const std::vector<FiniteRing>& factors, std::string name) {
  const std::size_t m = factors.size();
  std::size_t n = 1;
  for (const auto& f : factors) n *= f.order();

  std::vector<std::vector<std::uint32_t>> comp(n, std::vector<std::uint32_t>(m));
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t v = x;
    for (std::size_t i = m; i-- > 0;) {
      comp[x][i] = static_cast<std::uint32_t>(v % factors[i].order());
      v /= factors[i].order();
    }
  }
  auto encode = [&](auto&& component) {
    std::size_t v = 0;
    for (std::size_t i = 0; i < m; ++i) v = v * factors[i].order() + component(i);
    return static_cast<std::uint32_t>(v);
  };

  std::vector<std::uint32_t> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = encode([&](std::size_t i) {
        return factors[i].add(Element{comp[a][i]}, Element{comp[b][i]}).index;
      });
      mul[a * n + b] = encode([&](std::size_t i) {
        return factors[i].mul(Element{comp[a][i]}, Element{comp[b][i]}).index;
      });
    }

  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::string s = "[";
    for (std::size_t i = 0; i < m; ++i) {
      if (i) s += ",";
      s += factors[i].label(Element{comp[x][i]});
    }
    labels[x] = s + "]";
  }
  const Element zero{encode([&](std::size_t i) { return factors[i].zero().index; })};
  const Element one{encode([&](std::size_t i) { return factors[i].one().index; })};
  return FiniteRing::from_tables(n, std::move(add), std::move(mul), zero, one, std::move(labels), std::move(name));
}

inline FiniteRing build_node(const RingExpr& expr) {
  struct Visitor {
    FiniteRing operator()(const ZnNode& z) const { return zn_ring(z.n, render(RingExpr(z))); }
    FiniteRing operator()(const GFNode& g) const { return gf_ring(g, render(RingExpr(g))); }
    FiniteRing operator()(const QuotientNode& q) const {
      const FiniteRing base = std::visit(*this, q.base);
      std::vector<Element> f;
      for (auto c : q.modulus.coefficients) f.push_back(base.multiple(c));
      return quotient_ring(base, f, "x", render(RingExpr(q)));
    }
    FiniteRing operator()(const ProductNode& p) const {
      std::vector<FiniteRing> factors;
      for (const auto& f : p.factors) factors.push_back(std::visit(*this, f.node));
      return product_ring(factors, render(RingExpr(p)));
    }
  };
  return std::visit(Visitor{}, expr.node);
}

}  // namespace detail

/// Tabulates the ring an expression denotes. Throws BoundError past `options.max_order`
/// and ValidationError if the resulting tables fail the axiom scan.
inline FiniteRing build(const RingExpr& expr, const BuildOptions& options = {}) {
  validate(expr);
  const auto n = order_of(expr);
  if (n > options.max_order)
    throw BoundError(render(expr) + " has order " + std::to_string(n) + ", above the bound " +
                     std::to_string(options.max_order));
  return detail::build_node(expr);
}

inline FiniteRing build(std::string_view text, const BuildOptions& options = {}) { return build(parse(text), options); }

/// Addition and multiplication grids with a header row and column of labels.
inline std::string dump_tables(const FiniteRing& r) {
  std::size_t w = 1;
  for (const auto& l : r.labels()) w = std::max(w, l.size());
  auto pad = [w](const std::string& s) { return std::string(w - s.size(), ' ') + s; };
  std::ostringstream out;
  auto grid = [&](char op, auto&& f) {
    out << pad(std::string(1, op)) << " |";
    for (std::size_t b = 0; b < r.order(); ++b) out << ' ' << pad(r.label(r.element(b)));
    out << '\n' << std::string(w + 1, '-') << '+' << std::string(r.order() * (w + 1), '-') << '\n';
    for (std::size_t a = 0; a < r.order(); ++a) {
      out << pad(r.label(r.element(a))) << " |";
      for (std::size_t b = 0; b < r.order(); ++b) {
        const Element c = f(r.element(a), r.element(b));
        out << ' ' << pad(r.label(c));
      }
      out << '\n';
    }
  };
  grid('+', [&](Element a, Element b) { return r.add(a, b); });
  out << '\n';
  grid('*', [&](Element a, Element b) { return r.mul(a, b); });
  return out.str();
}

}  // namespace ringline
