#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "ringline/bitset.hpp"
#include "ringline/error.hpp"
#include "ringline/finite_ring.hpp"

namespace ringline {

/// A coordinate pair (first, second) over a ring.
struct PointRep {
  Element first;
  Element second;

  friend constexpr auto operator<=>(const PointRep&, const PointRep&) = default;
};

/// One point of the projective line: the orbit of an admissible pair under unit scaling.
struct ProjectivePoint {
  PointRep canonical;
  std::vector<PointRep> orbit;  // (u*first, u*second) for each unit u, in unit order
  bool type_one = false;        // some coordinate is a unit
};

inline std::string point_label(const FiniteRing& r, const PointRep& p) {
  return "(" + r.label(p.first) + "," + r.label(p.second) + ")";
}

/// first.x - second.y style 2x2 determinant of the rows p and q.
inline Element determinant(const FiniteRing& r, const PointRep& p, const PointRep& q) {
  return r.sub(r.mul(p.first, q.second), r.mul(p.second, q.first));
}

/// Unimodularity: some x*first + y*second is a unit. Over a commutative ring this is
/// equivalent to (first, second) being the top row of an invertible matrix, since
/// rows (first, second), (-y, x) then have determinant x*first + y*second.
inline bool is_admissible(const FiniteRing& r, const PointRep& p) {
  const std::size_t n = r.order();
  Bitset a_multiples(n), b_multiples(n);
  for (std::size_t x = 0; x < n; ++x) {
    a_multiples.set(r.mul(r.element(x), p.first).index);
    b_multiples.set(r.mul(r.element(x), p.second).index);
  }
  bool found = false;
  a_multiples.for_each([&](std::size_t a) {
    if (found) return;
    b_multiples.for_each([&](std::size_t b) {
      found = found || r.is_unit(r.add(r.element(a), r.element(b)));
    });
  });
  return found;
}

/// Two pairs are neighbours iff their determinant is a zero-divisor (not a unit).
inline bool is_neighbour(const FiniteRing& r, const PointRep& p, const PointRep& q) {
  return !r.is_unit(determinant(r, p, q));
}

/// Distinguished orbit member: first scaled to 1 when first is a unit, else second
/// scaled to 1 when second is a unit, else the lexicographically smallest member.
inline PointRep canonical_rep(const FiniteRing& r, const PointRep& p) {
  if (r.is_unit(p.first)) {
    const Element u = inverse(r, p.first);
    return {r.one(), r.mul(u, p.second)};
  }
  if (r.is_unit(p.second)) {
    const Element u = inverse(r, p.second);
    return {r.mul(u, p.first), r.one()};
  }
  PointRep best = p;
  for (auto u : units(r)) best = std::min(best, PointRep{r.mul(u, p.first), r.mul(u, p.second)});
  return best;
}

class ProjectiveLine;
ProjectiveLine enumerate_points(FiniteRing ring);

/// Points of the projective line over a ring plus its packed distant adjacency.
/// Point order: (1, s) by s, then (s, 1) with s a non-unit by s, then type II points
/// lexicographically.
class ProjectiveLine {
public:
  static constexpr std::uint32_t npos = std::numeric_limits<std::uint32_t>::max();

  const FiniteRing& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return points_.size(); }
  const ProjectivePoint& point(std::size_t i) const { return points_[i]; }
  const std::vector<ProjectivePoint>& points() const noexcept { return points_; }

  std::size_t type_one_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(points_.begin(), points_.end(), [](const ProjectivePoint& p) { return p.type_one; }));
  }

  bool distant(std::size_t i, std::size_t j) const { return distant_[i].test(j); }
  /// Reflexive: every point is its own neighbour.
  bool neighbour(std::size_t i, std::size_t j) const { return !distant_[i].test(j); }
  const Bitset& distant_row(std::size_t i) const { return distant_[i]; }
  const std::vector<Bitset>& distant_matrix() const noexcept { return distant_; }

  /// Point containing the pair, for any orbit member; empty if the pair is not admissible.
  std::optional<std::size_t> index_of(const PointRep& p) const {
    const auto k = pair_index_[p.first.index * ring_.order() + p.second.index];
    if (k == npos) return std::nullopt;
    return k;
  }

  std::string label(std::size_t i) const { return point_label(ring_, points_[i].canonical); }

private:
  friend ProjectiveLine enumerate_points(FiniteRing ring);
  explicit ProjectiveLine(FiniteRing ring) : ring_(std::move(ring)) {}

  FiniteRing ring_;
  std::vector<ProjectivePoint> points_;
  std::vector<Bitset> distant_;
  std::vector<std::uint32_t> pair_index_;
};

/// Groups admissible pairs into unit orbits. Throws CrossCheckError if unit scaling does
/// not act freely or the type I count differs from |R| + |zero-divisors|.
inline ProjectiveLine enumerate_points(FiniteRing ring) {
  ProjectiveLine line(std::move(ring));
  const FiniteRing& r = line.ring_;
  const std::size_t n = r.order();
  const auto us = units(r);

  std::vector<bool> seen(n * n, false);
  std::vector<ProjectivePoint> pts;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[a * n + b]) continue;
      const PointRep rep{r.element(a), r.element(b)};
      if (!is_admissible(r, rep)) continue;
      ProjectivePoint pt;
      for (auto u : us) {
        const PointRep m{r.mul(u, rep.first), r.mul(u, rep.second)};
        if (seen[m.first.index * n + m.second.index])
          throw CrossCheckError(r.name() + ": unit scaling is not free on " + point_label(r, rep));
        seen[m.first.index * n + m.second.index] = true;
        pt.orbit.push_back(m);
      }
      pt.canonical = canonical_rep(r, rep);
      pt.type_one = r.is_unit(rep.first) || r.is_unit(rep.second);
      pts.push_back(std::move(pt));
    }

  auto key = [&](const ProjectivePoint& p) {
    const auto& c = p.canonical;
    if (c.first == r.one()) return std::tuple{0, c.second.index, 0U};
    if (c.second == r.one()) return std::tuple{1, c.first.index, 0U};
    return std::tuple{2, c.first.index, c.second.index};
  };
  std::sort(pts.begin(), pts.end(), [&](const auto& x, const auto& y) { return key(x) < key(y); });
  line.points_ = std::move(pts);

  const std::size_t expected = n + r.zero_divisor_count();
  if (line.type_one_count() != expected)
    throw CrossCheckError(r.name() + ": " + std::to_string(line.type_one_count()) + " type I points, expected " +
                          std::to_string(expected));

  line.pair_index_.assign(n * n, ProjectiveLine::npos);
  for (std::size_t i = 0; i < line.points_.size(); ++i)
    for (const auto& m : line.points_[i].orbit)
      line.pair_index_[m.first.index * n + m.second.index] = static_cast<std::uint32_t>(i);

  const std::size_t count = line.points_.size();
  line.distant_.assign(count, Bitset(count));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j)
      if (r.is_unit(determinant(r, line.points_[i].canonical, line.points_[j].canonical))) {
        line.distant_[i].set(j);
        line.distant_[j].set(i);
      }
  return line;
}

/// Neighbours of point x, x itself excluded.
inline Bitset neighbourhood(const ProjectiveLine& line, std::size_t x) {
  Bitset nb = line.distant_row(x).complement();
  nb.reset(x);
  return nb;
}

enum class GraphKind { neighbour, distant };

/// Undirected DOT graph; node labels are canonical point strings.
inline std::string export_dot(const ProjectiveLine& line, GraphKind kind) {
  std::ostringstream out;
  out << "graph " << (kind == GraphKind::neighbour ? "neighbour" : "distant") << " {\n";
  for (std::size_t i = 0; i < line.size(); ++i) out << "  " << i << " [label=\"" << line.label(i) << "\"];\n";
  for (std::size_t i = 0; i < line.size(); ++i)
    for (std::size_t j = i + 1; j < line.size(); ++j)
      if (line.distant(i, j) == (kind == GraphKind::distant)) out << "  " << i << " -- " << j << ";\n";
  out << "}\n";
  return out.str();
}

/// Edge list with quoted point labels (the labels contain commas).
inline std::string export_edge_csv(const ProjectiveLine& line, GraphKind kind) {
  std::ostringstream out;
  out << "source,target\n";
  for (std::size_t i = 0; i < line.size(); ++i)
    for (std::size_t j = i + 1; j < line.size(); ++j)
      if (line.distant(i, j) == (kind == GraphKind::distant))
        out << '"' << line.label(i) << "\",\"" << line.label(j) << "\"\n";
  return out.str();
}

}  // namespace ringline
