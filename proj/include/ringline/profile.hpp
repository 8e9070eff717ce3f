#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "ringline/bitset.hpp"
#include "ringline/clique.hpp"
#include "ringline/error.hpp"
#include "ringline/projective_line.hpp"
#include "ringline/ringspec.hpp"

namespace ringline {

/// Classification numbers of a projective line, in table column order.
struct LineProfile {
  std::string type_label;  // "A/B": ring order / number of zero-divisors
  std::size_t tot = 0;     // points
  std::size_t tp_one = 0;  // type I points
  std::size_t one_n = 0;   // neighbourhood of a point, the point excluded
  std::size_t cap2n = 0;   // common to the neighbourhoods of two distant points
  std::size_t cap3n = 0;   // common to the neighbourhoods of three pairwise distant points
  std::size_t jcb = 0;     // Jacobson points per neighbourhood
  std::size_t md = 0;      // maximum number of pairwise distant points

  std::array<std::size_t, 7> numbers() const { return {tot, tp_one, one_n, cap2n, cap3n, jcb, md}; }

  friend bool operator==(const LineProfile&, const LineProfile&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const LineProfile& p) {
  os << p.type_label << " (" << p.tot << ", " << p.tp_one << ", " << p.one_n << ", " << p.cap2n << ", " << p.cap3n
     << ", " << p.jcb << ", " << p.md << ")";
  return os;
}

inline std::string type_label(const FiniteRing& r) {
  return std::to_string(r.order()) + "/" + std::to_string(r.zero_divisor_count());
}

/// Indices of U = (1,0), V = (0,1), W = (1,1). These are pairwise distant on every line.
inline std::array<std::size_t, 3> reference_triple(const ProjectiveLine& line) {
  const auto& r = line.ring();
  const auto u = line.index_of({r.one(), r.zero()});
  const auto v = line.index_of({r.zero(), r.one()});
  const auto w = line.index_of({r.one(), r.one()});
  if (!u || !v || !w) throw InternalError(r.name() + ": reference points missing from the line");
  return {*u, *v, *w};
}

/// A maximum set of pairwise distant points (maximum clique of the distant graph).
/// The reference triple is used as the seed, so it is contained whenever possible.
inline std::vector<std::size_t> max_distant_set(const ProjectiveLine& line) {
  const auto t = reference_triple(line);
  return max_clique(line.distant_matrix(), {t[0], t[1], t[2]});
}

/// Points of N(family[member]) lying in no other neighbourhood of the family.
inline Bitset jacobson_points(const ProjectiveLine& line, const std::vector<std::size_t>& family, std::size_t member) {
  Bitset own = neighbourhood(line, family[member]);
  for (std::size_t i = 0; i < family.size(); ++i)
    if (i != member) own.subtract(neighbourhood(line, family[i]));
  return own;
}

struct ProfileOptions {
  // Distant pairs on which the two-neighbourhood overlap is re-measured.
  std::size_t overlap_samples = 64;
};

/// Computes the profile and cross-checks its homogeneity claims; throws HomogeneityError
/// when a point, sampled distant pair, or member of the maximum family disagrees.
inline LineProfile profile(const ProjectiveLine& line, const ProfileOptions& options = {}) {
  const auto& r = line.ring();
  const std::size_t count = line.size();
  LineProfile p;
  p.type_label = type_label(r);
  p.tot = count;
  p.tp_one = line.type_one_count();

  std::vector<Bitset> nbhd;
  nbhd.reserve(count);
  for (std::size_t i = 0; i < count; ++i) nbhd.push_back(neighbourhood(line, i));

  const auto [u, v, w] = reference_triple(line);
  p.one_n = nbhd[u].count();
  for (std::size_t i = 0; i < count; ++i)
    if (nbhd[i].count() != p.one_n)
      throw HomogeneityError(r.name() + ": neighbourhood of " + line.label(i) + " has " +
                             std::to_string(nbhd[i].count()) + " points, expected " + std::to_string(p.one_n));

  p.cap2n = nbhd[u].intersection_count(nbhd[v]);
  p.cap3n = (nbhd[u] & nbhd[v]).intersection_count(nbhd[w]);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < count; ++i)
    line.distant_row(i).for_each([&](std::size_t j) {
      if (j > i) pairs.emplace_back(i, j);
    });
  const std::size_t stride = pairs.size() <= options.overlap_samples ? 1 : pairs.size() / options.overlap_samples;
  for (std::size_t k = 0; k < pairs.size(); k += stride) {
    const auto [i, j] = pairs[k];
    if (nbhd[i].intersection_count(nbhd[j]) != p.cap2n)
      throw HomogeneityError(r.name() + ": neighbourhoods of " + line.label(i) + " and " + line.label(j) +
                             " share " + std::to_string(nbhd[i].intersection_count(nbhd[j])) + " points, expected " +
                             std::to_string(p.cap2n));
  }

  const auto family = max_distant_set(line);
  p.md = family.size();
  p.jcb = jacobson_points(line, family, 0).count();
  for (std::size_t m = 1; m < family.size(); ++m) {
    const auto c = jacobson_points(line, family, m).count();
    if (c != p.jcb)
      throw HomogeneityError(r.name() + ": " + line.label(family[m]) + " has " + std::to_string(c) +
                             " Jacobson points, expected " + std::to_string(p.jcb));
  }
  return p;
}

struct ProfiledRing {
  RingExpr expr;
  LineProfile profile;
};

struct ProfileGroup {
  LineProfile profile;
  std::vector<RingExpr> members;  // input order
};

/// Partitions entries by identical profile (type label included). Groups appear in the
/// order of their first member.
inline std::vector<ProfileGroup> group_profiles(const std::vector<ProfiledRing>& entries) {
  std::vector<ProfileGroup> groups;
  std::map<std::pair<std::string, std::array<std::size_t, 7>>, std::size_t> index;
  for (const auto& e : entries) {
    const auto key = std::pair{e.profile.type_label, e.profile.numbers()};
    auto [it, fresh] = index.try_emplace(key, groups.size());
    if (fresh) groups.push_back({e.profile, {}});
    groups[it->second].members.push_back(e.expr);
  }
  return groups;
}

}  // namespace ringline
