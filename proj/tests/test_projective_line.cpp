#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "ringline/finite_ring.hpp"
#include "ringline/projective_line.hpp"

using namespace ringline;

namespace {

PointRep rep(const FiniteRing& r, const std::string& a, const std::string& b) {
  return {r.find(a).value(), r.find(b).value()};
}

std::set<std::string> labels_of(const ProjectiveLine& line, const Bitset& points) {
  std::set<std::string> out;
  points.for_each([&](std::size_t i) { out.insert(line.label(i)); });
  return out;
}

}  // namespace

TEST(IsAdmissible, Examples) {
  for (const char* text : {"Z4", "GF(5)", "Z4 x Z4", "GF(2)[x]/(x^3)"}) {
    const auto r = build(text);
    EXPECT_TRUE(is_admissible(r, {r.one(), r.zero()})) << text;
    EXPECT_FALSE(is_admissible(r, {r.zero(), r.zero()})) << text;
  }
  const auto r = build("Z4 x Z4");
  EXPECT_TRUE(is_admissible(r, rep(r, "[1,0]", "[0,1]")));  // (e, b)

  // oracle: every x*c + y*f has both components even, so (c, f) is not admissible
  const oracle::TupleRing z4z4{{4, 4}};
  const int c = z4z4.encode({0, 2}), f = z4z4.encode({2, 0});
  EXPECT_FALSE(oracle::admissible(z4z4, {c, f}));
  EXPECT_FALSE(is_admissible(r, rep(r, "[0,2]", "[2,0]")));
}

TEST(IsAdmissible, AgreesWithOracle) {
  const oracle::TupleRing o{{2, 4}};
  const auto r = build("Z2 x Z4");
  for (int a = 0; a < o.order(); ++a)
    for (int b = 0; b < o.order(); ++b)
      EXPECT_EQ(is_admissible(r, rep(r, o.label(a), o.label(b))), oracle::admissible(o, {a, b}));
}

TEST(EnumeratePoints, GF2) {
  const auto line = enumerate_points(build("GF(2)"));
  ASSERT_EQ(line.size(), 3U);
  EXPECT_EQ(line.label(0), "(1,0)");
  EXPECT_EQ(line.label(1), "(1,1)");
  EXPECT_EQ(line.label(2), "(0,1)");
}

TEST(EnumeratePoints, Z4xZ4Counts) {
  const auto line = enumerate_points(build("Z4 x Z4"));
  EXPECT_EQ(line.size(), 36U);
  EXPECT_EQ(line.type_one_count(), 28U);
  EXPECT_EQ(line.size() - line.type_one_count(), 8U);
}

TEST(EnumeratePoints, GF31) { EXPECT_EQ(enumerate_points(build("GF(31)")).size(), 32U); }

TEST(EnumeratePoints, OrderingTypeOneFirst) {
  const auto line = enumerate_points(build("Z4 x Z4"));
  const auto& r = line.ring();
  std::size_t i = 0;
  for (; i < line.size() && line.point(i).canonical.first == r.one(); ++i) {
    if (i) {
      EXPECT_LT(line.point(i - 1).canonical.second, line.point(i).canonical.second);
    }
  }
  EXPECT_EQ(i, 16U);  // (1, s) for every s
  for (; i < line.size() && line.point(i).canonical.second == r.one(); ++i) {
    EXPECT_FALSE(r.is_unit(line.point(i).canonical.first));
    EXPECT_TRUE(line.point(i).type_one);
  }
  EXPECT_EQ(i, 28U);
  for (std::size_t k = i; k < line.size(); ++k) {
    EXPECT_FALSE(line.point(k).type_one);
    if (k > i) {
      EXPECT_LT(line.point(k - 1).canonical, line.point(k).canonical);
    }
  }
}

TEST(EnumeratePoints, TypeTwoCanonicalForms) {
  const auto line = enumerate_points(build("Z4 x Z4"));
  std::set<std::string> type_two;
  for (std::size_t i = 0; i < line.size(); ++i)
    if (!line.point(i).type_one) type_two.insert(line.label(i));
  // (e,b), (e,k), (i,b), (i,k), (b,e), (k,e), (b,i), (k,i) in letter names
  const std::set<std::string> expected = {"([1,0],[0,1])", "([1,0],[2,1])", "([1,2],[0,1])", "([1,2],[2,1])",
                                          "([0,1],[1,0])", "([2,1],[1,0])", "([0,1],[1,2])", "([2,1],[1,2])"};
  EXPECT_EQ(type_two, expected);
}

TEST(EnumeratePoints, OrbitsAreFreeAndCanonicalIsAMember) {
  const auto line = enumerate_points(build("GF(2) x Z9"));
  const auto& r = line.ring();
  for (const auto& p : line.points()) {
    EXPECT_EQ(p.orbit.size(), r.unit_count());
    EXPECT_EQ(std::set<PointRep>(p.orbit.begin(), p.orbit.end()).size(), p.orbit.size());
    EXPECT_NE(std::find(p.orbit.begin(), p.orbit.end(), p.canonical), p.orbit.end());
  }
}

TEST(EnumeratePoints, IndexOfAnyOrbitMember) {
  const auto line = enumerate_points(build("Z4 x Z4"));
  for (std::size_t i = 0; i < line.size(); ++i)
    for (const auto& m : line.point(i).orbit) EXPECT_EQ(line.index_of(m), i);
  const auto& r = line.ring();
  EXPECT_FALSE(line.index_of(rep(r, "[0,2]", "[2,0]")).has_value());
}

TEST(EnumeratePoints, MatchesOracleOrbits) {
  for (const auto& moduli : std::vector<std::vector<int>>{{4}, {9}, {2, 3}, {2, 2}, {4, 2}, {8}}) {
    const oracle::TupleRing o{moduli};
    const auto ol = oracle::enumerate(o);
    std::string text;
    for (int m : moduli) text += (text.empty() ? "Z" : " x Z") + std::to_string(m);
    const auto line = enumerate_points(build(text));
    ASSERT_EQ(line.size(), ol.orbits.size()) << text;
    std::set<std::set<std::string>> ours, theirs;
    for (const auto& p : line.points()) {
      std::set<std::string> s;
      for (const auto& m : p.orbit) s.insert(point_label(line.ring(), m));
      ours.insert(s);
    }
    for (const auto& orbit : ol.orbits) {
      std::set<std::string> s;
      for (auto [a, b] : orbit) s.insert("(" + o.label(a) + "," + o.label(b) + ")");
      theirs.insert(s);
    }
    EXPECT_EQ(ours, theirs) << text;
  }
}

TEST(IsNeighbour, Examples) {
  const auto gf = build("GF(3)");
  EXPECT_FALSE(is_neighbour(gf, {gf.one(), gf.zero()}, {gf.zero(), gf.one()}));
  EXPECT_TRUE(is_neighbour(gf, {gf.one(), gf.zero()}, {gf.one(), gf.zero()}));

  const auto r = build("Z4 x Z4");
  EXPECT_TRUE(is_neighbour(r, rep(r, "[1,1]", "[0,0]"), rep(r, "[1,1]", "[0,2]")));  // U ~ (1,c)
  EXPECT_TRUE(is_neighbour(r, rep(r, "[1,1]", "[1,1]"), rep(r, "[1,1]", "[1,3]")));  // W ~ (1,j)
  EXPECT_FALSE(is_neighbour(r, rep(r, "[1,1]", "[0,0]"), rep(r, "[1,1]", "[1,1]")));
}

TEST(Neighbourhood, Z4xZ4ReferencePointU) {
  const auto line = enumerate_points(build("Z4 x Z4"));
  const auto& r = line.ring();
  const auto u = *line.index_of({r.one(), r.zero()});
  const auto nb = neighbourhood(line, u);
  EXPECT_EQ(nb.count(), 19U);
  for (std::size_t i = 0; i < line.size(); ++i)
    if (!line.point(i).type_one) {
      EXPECT_TRUE(nb.test(i)) << line.label(i);
    }
  EXPECT_FALSE(nb.test(u));
}

TEST(Neighbourhood, FieldsHaveEmptyNeighbourhoods) {
  const auto line = enumerate_points(build("GF(8)"));
  for (std::size_t i = 0; i < line.size(); ++i) EXPECT_TRUE(neighbourhood(line, i).none());
}

TEST(Neighbourhood, Z4PointU) {
  // oracle: brute-force determinants over the 6 points of the line over Z4
  const oracle::TupleRing z4{{4}};
  const auto ol = oracle::enumerate(z4);
  ASSERT_EQ(ol.reps.size(), 6U);
  const auto u = oracle::find(ol, {1, 0});
  const auto onb = oracle::neighbourhood(z4, ol, u);
  ASSERT_EQ(onb.size(), 1U);
  const auto other = ol.orbits[*onb.begin()];
  EXPECT_TRUE(other.count({1, 2}));

  const auto line = enumerate_points(build("Z4"));
  EXPECT_EQ(labels_of(line, neighbourhood(line, 0)), (std::set<std::string>{"(1,2)"}));
}

TEST(Neighbourhood, AgreesWithOracleOnEveryPoint) {
  const oracle::TupleRing o{{2, 4}};
  const auto ol = oracle::enumerate(o);
  const auto line = enumerate_points(build("Z2 x Z4"));
  for (std::size_t x = 0; x < ol.reps.size(); ++x) {
    const auto [a, b] = ol.reps[x];
    const auto ours = *line.index_of(rep(line.ring(), o.label(a), o.label(b)));
    std::set<std::size_t> mapped;
    for (auto y : oracle::neighbourhood(o, ol, x)) {
      const auto [c, d] = ol.reps[y];
      mapped.insert(*line.index_of(rep(line.ring(), o.label(c), o.label(d))));
    }
    const auto idx = neighbourhood(line, ours).indices();
    EXPECT_EQ(std::set<std::size_t>(idx.begin(), idx.end()), mapped);
  }
}

TEST(GraphExport, DotAndCsv) {
  const auto line = enumerate_points(build("Z4"));
  const auto dot = export_dot(line, GraphKind::neighbour);
  EXPECT_NE(dot.find("graph neighbour {"), std::string::npos);
  EXPECT_NE(dot.find("0 [label=\"(1,0)\"];"), std::string::npos);
  EXPECT_NE(dot.find("0 -- 2;"), std::string::npos);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '-') / 2, 3);  // 6 points, 1N = 1

  const auto csv = export_edge_csv(line, GraphKind::distant);
  EXPECT_EQ(csv.rfind("source,target\n", 0), 0U);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 12);  // 15 pairs minus 3 neighbour pairs
  EXPECT_NE(csv.find("\"(1,0)\",\"(1,1)\""), std::string::npos);
}
