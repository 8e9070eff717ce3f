#include <gtest/gtest.h>

#include <array>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "ringline/catalog.hpp"
#include "ringline/profile.hpp"

using namespace ringline;

namespace {

using Numbers = std::array<std::size_t, 7>;

Numbers numbers_of(const char* text) { return compute_profile(text).numbers(); }

}  // namespace

TEST(Profile, Z4xZ4) {
  const auto p = compute_profile("Z4 x Z4");
  EXPECT_EQ(p.type_label, "16/12");
  EXPECT_EQ(p.numbers(), (Numbers{36, 28, 19, 8, 0, 3, 3}));
}

TEST(Profile, SmallExamples) {
  EXPECT_EQ(numbers_of("GF(2) x GF(3)"), (Numbers{12, 10, 5, 2, 0, 1, 3}));
  EXPECT_EQ(numbers_of("GF(2)[x]/(x^4)"), (Numbers{24, 24, 7, 0, 0, 7, 3}));
  EXPECT_EQ(numbers_of("GF(13)"), (Numbers{14, 14, 0, 0, 0, 0, 14}));
  EXPECT_EQ(compute_profile("GF(5)").md, 6U);
  EXPECT_EQ(compute_profile("Z27").md, 4U);
}

TEST(Profile, ProductOfFourFieldsOfTwo) {
  EXPECT_EQ(numbers_of("GF(2) x GF(2) x GF(2) x GF(2)"), (Numbers{81, 31, 64, 50, 36, 0, 3}));
}

TEST(Profile, TypeLabelUsesZeroDivisorCount) {
  EXPECT_EQ(compute_profile("GF(7) x Z4").type_label, "28/16");
  EXPECT_EQ(compute_profile("GF(9)").type_label, "9/1");
}

TEST(Profile, AgreesWithOracleOnSmallProducts) {
  for (const auto& moduli : std::vector<std::vector<int>>{
           {2}, {3}, {4}, {8}, {9}, {2, 2}, {2, 3}, {2, 4}, {3, 3}, {2, 2, 2}, {4, 3}}) {
    std::string text;
    for (int m : moduli) text += (text.empty() ? "Z" : " x Z") + std::to_string(m);
    const auto o = oracle::profile(oracle::TupleRing{moduli});
    const auto p = compute_profile(text);
    EXPECT_EQ(p.numbers(), (Numbers{o.tot, o.tp_one, o.one_n, o.cap2n, o.cap3n, o.jcb, o.md})) << text;
  }
}

TEST(Profile, MaxDistantSetContainsReferenceTriple) {
  const auto line = enumerate_points(build("Z4 x Z4"));
  const auto family = max_distant_set(line);
  const auto t = reference_triple(line);
  ASSERT_EQ(family.size(), 3U);
  EXPECT_EQ(std::vector<std::size_t>(family.begin(), family.begin() + 3),
            (std::vector<std::size_t>{t[0], t[1], t[2]}));
}

TEST(Profile, JacobsonPointsOfW) {
  const auto line = enumerate_points(build("Z4 x Z4"));
  const auto family = max_distant_set(line);
  const auto pts = jacobson_points(line, family, 2);
  std::set<std::string> got;
  pts.for_each([&](std::size_t i) { got.insert(line.label(i)); });
  // (1,j), (1,n), (1,q)
  EXPECT_EQ(got, (std::set<std::string>{"([1,1],[1,3])", "([1,1],[3,1])", "([1,1],[3,3])"}));
}

TEST(GroupProfiles, IsomorphicLinesShareAGroup) {
  const std::vector<ProfiledRing> same = {{parse("Z4"), compute_profile("Z4")},
                                          {parse("GF(2)[x]/(x^2)"), compute_profile("GF(2)[x]/(x^2)")}};
  const auto g = group_profiles(same);
  ASSERT_EQ(g.size(), 1U);
  EXPECT_EQ(g[0].members.size(), 2U);

  const std::vector<ProfiledRing> different = {{parse("GF(2)"), compute_profile("GF(2)")},
                                               {parse("GF(3)"), compute_profile("GF(3)")}};
  EXPECT_EQ(group_profiles(different).size(), 2U);
}

TEST(GroupProfiles, CatalogHasSixtyFiveTypes) {
  std::vector<ProfiledRing> entries;
  for (const auto& e : default_catalog()) entries.push_back({parse(e.expr), e.expected});
  const auto groups = group_profiles(entries);
  EXPECT_EQ(groups.size(), 65U);
  EXPECT_EQ(groups.front().profile.type_label, "31/1");
  EXPECT_EQ(groups.back().profile.type_label, "2/1");
}
