#include <algorithm>
#include <functional>
#include <set>

#include <gtest/gtest.h>

#include "schmidt/enumerate.hpp"

namespace schmidt {
namespace {

// A000712, computed independently as sum_k p(k) p(n-k).
constexpr long long kTwoColorCounts[] = {
    1,     2,     5,     10,    20,    36,     65,     110,    185,
    300,   481,   752,   1165,  1770,  2665,   3956,   5822,   8470,
    12230, 17490, 24842, 35002, 49010, 68150,  94235,  129512, 177087,
    240840, 326015, 439190, 589128};

TwoColorPartition tc(std::initializer_list<Part> red,
                     std::initializer_list<Part> green) {
  return TwoColorPartition{Partition(red), Partition(green)};
}

// Every weakly decreasing positive sequence with parts <= max_part and at most
// max_len parts, by plain odometer over the box.
std::vector<std::vector<Part>> box_sequences(Part max_part, std::size_t max_len) {
  std::vector<std::vector<Part>> out;
  std::vector<Part> seq;
  std::function<void(Part)> rec = [&](Part bound) {
    out.push_back(seq);
    if (seq.size() == max_len) return;
    for (Part a = 1; a <= bound; ++a) {
      seq.push_back(a);
      rec(a);
      seq.pop_back();
    }
  };
  rec(max_part);
  return out;
}

TEST(EnumerateSchmidt, WeightThreeIsThePaperList) {
  const auto got = enumerate_schmidt(3);
  const std::set<Partition> expected{
      {3},          {3, 3},          {3, 2},          {3, 1},
      {2, 2, 1},    {2, 2, 1, 1},    {2, 1, 1},       {2, 1, 1, 1},
      {1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}};
  EXPECT_EQ(got.size(), 10u);
  EXPECT_EQ(std::set<Partition>(got.begin(), got.end()), expected);
}

TEST(EnumerateSchmidt, SmallCases) {
  EXPECT_EQ(enumerate_schmidt(0), std::vector<Partition>{Partition{}});
  EXPECT_EQ(enumerate_schmidt(1),
            (std::vector<Partition>{Partition{1, 1}, Partition{1}}));
}

TEST(EnumerateSchmidt, MatchesBoxFilterAndIsSortedDescending) {
  for (Part n = 0; n <= 6; ++n) {
    std::set<Partition> oracle;
    for (auto& seq : box_sequences(n, static_cast<std::size_t>(2 * n)))
      if (alternating_sum(seq) == n) oracle.insert(Partition(seq));
    const auto got = enumerate_schmidt(n);
    EXPECT_EQ(std::set<Partition>(got.begin(), got.end()), oracle) << n;
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end(), std::greater<>{}));
    EXPECT_EQ(std::adjacent_find(got.begin(), got.end()), got.end());
  }
}

TEST(EnumerateSchmidt, BoundsHoldForEveryMember) {
  for (Part n = 1; n <= 10; ++n)
    for_each_schmidt(n, [&](const Partition& p) {
      ASSERT_LE(p.largest(), n);
      ASSERT_LE(p.length(), static_cast<std::size_t>(2 * n));
      ASSERT_EQ(alternating_sum(p), n);
    });
}

TEST(EnumerateTwoColor, SmallCases) {
  EXPECT_EQ(enumerate_two_color(0), std::vector<TwoColorPartition>{tc({}, {})});
  EXPECT_EQ(enumerate_two_color(1),
            (std::vector<TwoColorPartition>{tc({1}, {}), tc({}, {1})}));
  EXPECT_EQ(enumerate_two_color(2).size(), 5u);
  const auto three = enumerate_two_color(3);
  ASSERT_EQ(three.size(), 10u);
  EXPECT_EQ(three.front(), tc({3}, {}));
  EXPECT_EQ(three.back(), tc({}, {1, 1, 1}));
}

TEST(Counts, PaperValueAtThree) {
  EXPECT_EQ(count_schmidt(3), 10);
  EXPECT_EQ(count_two_color(3), 10);
  EXPECT_EQ(count_two_color(0), 1);
  EXPECT_EQ(count_two_color(2), 5);
}

TEST(Counts, BothSidesAgreeWithFrozenTableUpTo20) {
  for (Part n = 0; n <= 20; ++n) {
    EXPECT_EQ(count_two_color(n), kTwoColorCounts[n]) << n;
    EXPECT_EQ(count_schmidt(n), kTwoColorCounts[n]) << n;
  }
}

TEST(EnumerateTwoColorRefined, Examples) {
  EXPECT_EQ(enumerate_two_color_refined({2, 1, 1, 1, 1}),
            std::vector<TwoColorPartition>{tc({1}, {1})});
  EXPECT_EQ(enumerate_two_color_refined({3, 1, 1, 2, 1}),
            std::vector<TwoColorPartition>{tc({2}, {1})});
  EXPECT_TRUE(enumerate_two_color_refined({1, 2, 1, 9, 9}).empty());
}

TEST(EnumerateTwoColorRefined, MatchesFilterOfFullEnumeration) {
  for (Part n = 1; n <= 7; ++n) {
    const auto all = enumerate_two_color(n);
    for (Part r = 1; r <= 3; ++r)
      for (Part l = 1; l <= 3; ++l)
        for (Part p = 1; p <= 3; ++p)
          for (Part q = 1; q <= 3; ++q) {
            std::vector<TwoColorPartition> filtered;
            std::copy_if(all.begin(), all.end(), std::back_inserter(filtered),
                         [&](const TwoColorPartition& x) {
                           return x.red_count() == static_cast<std::size_t>(r) &&
                                  x.green_count() == static_cast<std::size_t>(l) &&
                                  x.red.largest() <= p &&
                                  x.green.largest() <= q;
                         });
            ASSERT_EQ(enumerate_two_color_refined({n, r, l, p, q}), filtered);
          }
  }
}

TEST(EnumerateTwoColorRefined, TilesTheFullEnumeration) {
  for (Part n = 1; n <= 9; ++n) {
    std::vector<TwoColorPartition> all = enumerate_two_color(n);
    std::vector<TwoColorPartition> tiles;
    for (Part r = 1; r <= n; ++r)
      for (Part l = 1; r + l <= n; ++l)
        for (const auto& x : enumerate_two_color_refined({n, r, l, n, n}))
          tiles.push_back(x);
    for (const auto& x : all)
      if (x.red.empty() || x.green.empty()) tiles.push_back(x);
    std::sort(tiles.begin(), tiles.end(), canonical_less);
    EXPECT_EQ(tiles, all) << n;
  }
}

// All vectors in [0, p+q]^len, kept when weakly decreasing with the right
// alternating sum.
std::vector<BoundedVector> literal_grid_oracle(const RefinedQuery& rq) {
  const auto len = static_cast<std::size_t>(2 * std::max(rq.r, rq.l));
  const Part top = rq.p + rq.q;
  std::vector<BoundedVector> out;
  std::vector<Part> v(len, 0);
  while (true) {
    if (is_weakly_decreasing(v) && alternating_sum(v) == rq.n)
      out.emplace_back(v);
    std::size_t i = len;
    while (i > 0 && v[i - 1] == top) v[--i] = 0;
    if (i == 0) break;
    ++v[i - 1];
  }
  std::sort(out.begin(), out.end(), std::greater<>{});
  return out;
}

TEST(EnumerateSchmidtRefinedLiteral, Examples) {
  EXPECT_EQ(enumerate_schmidt_refined_literal({2, 1, 1, 1, 1}),
            (std::vector<BoundedVector>{BoundedVector({2, 2}),
                                        BoundedVector({2, 1}),
                                        BoundedVector({2, 0})}));
  EXPECT_EQ(enumerate_schmidt_refined_literal({0, 1, 1, 1, 1}),
            std::vector<BoundedVector>{BoundedVector({0, 0})});
  EXPECT_EQ(enumerate_schmidt_refined_literal({3, 1, 1, 1, 2}).size(), 4u);
}

TEST(EnumerateSchmidtRefinedLiteral, MatchesGridScan) {
  for (Part n = 0; n <= 8; ++n)
    for (Part r = 1; r <= 3; ++r)
      for (Part l = 1; l <= 2; ++l)
        for (Part p = 1; p <= 2; ++p)
          for (Part q = 1; q <= 2; ++q) {
            const RefinedQuery rq{n, r, l, p, q};
            ASSERT_EQ(enumerate_schmidt_refined_literal(rq),
                      literal_grid_oracle(rq))
                << n << ' ' << r << ' ' << l << ' ' << p << ' ' << q;
          }
}

}  // namespace
}  // namespace schmidt
