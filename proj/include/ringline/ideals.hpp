#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include "ringline/bitset.hpp"
#include "ringline/error.hpp"
#include "ringline/finite_ring.hpp"

namespace ringline {

/// Ideal as a membership mask over element indices.
struct Ideal {
  Bitset members;

  std::size_t size() const noexcept { return members.count(); }
  bool contains(Element e) const noexcept { return members.test(e.index); }

  friend bool operator==(const Ideal&, const Ideal&) = default;
};

struct IdealLattice {
  std::vector<Ideal> ideals;   // every ideal, {0} first and R last
  std::vector<Ideal> maximal;  // proper ideals not strictly inside another proper ideal
  Ideal radical;               // intersection of the maximal ideals
};

/// Closes a set of elements under addition.
inline Bitset additive_closure(const FiniteRing& r, Bitset s) {
  s.set(r.zero().index);
  std::vector<std::size_t> frontier = s.indices();
  const auto gens = frontier;
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (auto a : frontier)
      for (auto g : gens) {
        const auto c = r.add(r.element(a), r.element(g)).index;
        if (!s.test(c)) {
          s.set(c);
          next.push_back(c);
        }
      }
    frontier = std::move(next);
  }
  return s;
}

inline Ideal principal_ideal(const FiniteRing& r, Element g) {
  Bitset s(r.order());
  for (std::size_t y = 0; y < r.order(); ++y) s.set(r.mul(g, r.element(y)).index);
  return Ideal{additive_closure(r, std::move(s))};
}

inline Ideal ideal_sum(const FiniteRing& r, const Ideal& a, const Ideal& b) {
  Bitset s(r.order());
  a.members.for_each([&](std::size_t x) {
    b.members.for_each([&](std::size_t y) { s.set(r.add(r.element(x), r.element(y)).index); });
  });
  return Ideal{std::move(s)};
}

/// {x : 1 - xy is a unit for every y}.
inline Ideal radical_by_unit_test(const FiniteRing& r) {
  Bitset s(r.order());
  for (std::size_t x = 0; x < r.order(); ++x) {
    bool in = true;
    for (std::size_t y = 0; y < r.order() && in; ++y)
      in = r.is_unit(r.sub(r.one(), r.mul(r.element(x), r.element(y))));
    s.set(x, in);
  }
  return Ideal{std::move(s)};
}

/// Every ideal is a finite sum of principal ideals, so closing the principal ideals
/// under pairwise sums yields the whole lattice.
inline IdealLattice all_ideals(const FiniteRing& r) {
  std::set<Bitset> seen;
  std::vector<Ideal> ideals;
  auto insert = [&](Ideal i) {
    if (seen.insert(i.members).second) {
      ideals.push_back(std::move(i));
      return true;
    }
    return false;
  };
  for (std::size_t g = 0; g < r.order(); ++g) insert(principal_ideal(r, r.element(g)));
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) insert(ideal_sum(r, ideals[i], ideals[j]));

  std::stable_sort(ideals.begin(), ideals.end(), [](const Ideal& a, const Ideal& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members < b.members;
  });

  IdealLattice lattice;
  const std::size_t n = r.order();
  for (const auto& cand : ideals) {
    if (cand.size() == n) continue;
    bool maximal = true;
    for (const auto& other : ideals)
      if (other.size() != n && other.size() > cand.size() && cand.members.is_subset_of(other.members)) {
        maximal = false;
        break;
      }
    if (maximal) lattice.maximal.push_back(cand);
  }

  Bitset rad = Bitset::full(n);
  for (const auto& m : lattice.maximal) rad &= m.members;
  lattice.radical = Ideal{std::move(rad)};
  if (!(lattice.radical == radical_by_unit_test(r)))
    throw InternalError(r.name() + ": Jacobson radical characterizations disagree");
  lattice.ideals = std::move(ideals);
  return lattice;
}

/// True iff the zero-divisors are closed under addition and under multiplication by R.
inline bool zero_divisors_form_ideal(const FiniteRing& r) {
  const auto zd = zero_divisors(r);
  for (auto a : zd)
    for (auto b : zd)
      if (r.is_unit(r.add(a, b))) return false;
  for (auto a : zd)
    for (std::size_t y = 0; y < r.order(); ++y)
      if (r.is_unit(r.mul(a, r.element(y)))) return false;
  return true;
}

inline bool is_local(const FiniteRing& r, const IdealLattice& lattice) {
  const bool unique = lattice.maximal.size() == 1;
  if (unique != zero_divisors_form_ideal(r))
    throw InternalError(r.name() + ": locality criteria disagree");
  return unique;
}

inline bool is_local(const FiniteRing& r) { return is_local(r, all_ideals(r)); }

/// |R / M| for each maximal ideal M, in lattice order.
inline std::vector<std::size_t> residue_field_sizes(const FiniteRing& r, const IdealLattice& lattice) {
  std::vector<std::size_t> out;
  for (const auto& m : lattice.maximal) out.push_back(r.order() / m.size());
  return out;
}

}  // namespace ringline
