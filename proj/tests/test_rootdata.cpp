#include <gtest/gtest.h>

#include "qosp/errors.hpp"
#include "qosp/rootdata.hpp"

using namespace qosp;

namespace {

const std::vector<std::pair<int, int>> kCases = {{3, 2}, {4, 2}, {5, 2}, {3, 4}, {4, 4}, {5, 4},
                                                 {6, 2}, {7, 6}};

}  // namespace

TEST(BuildBasis, Osp32Layout) {
  auto s = build_basis(3, 2);
  EXPECT_EQ(s.labels, (std::vector<std::string>{"d1", "e1", "0", "-e1", "-d1"}));
  EXPECT_EQ(s.grading, (std::vector<int>{1, 0, 0, 0, 1}));
  EXPECT_EQ(s.xi, (std::vector<int>{-1, 1, 1, 1, 1}));
  EXPECT_EQ(s.bar, (std::vector<int>{4, 3, 2, 1, 0}));
  EXPECT_EQ(s.zero_pos(), 2);
}

TEST(BuildBasis, Osp42Layout) {
  auto s = build_basis(4, 2);
  EXPECT_EQ(s.dim, 6);
  EXPECT_EQ(s.l, 2);
  EXPECT_EQ(s.k, 1);
  EXPECT_EQ(s.zero_pos(), -1);
  for (const auto& w : s.weights) EXPECT_FALSE(w.is_zero());
}

TEST(BuildBasis, RejectsInvalidRank) {
  EXPECT_THROW(build_basis(2, 2), InvalidRank);
  EXPECT_THROW(build_basis(1, 2), InvalidRank);
  EXPECT_THROW(build_basis(3, 3), InvalidRank);
  EXPECT_THROW(build_basis(3, 0), InvalidRank);
}

TEST(Bilinear, BasisValues) {
  auto s = build_basis(3, 2);
  EXPECT_EQ(bilinear(s.eps(1), s.eps(1)), 1);
  EXPECT_EQ(bilinear(s.delta(1), s.delta(1)), -1);
  EXPECT_EQ(bilinear(s.eps(1), s.delta(1)), 0);
  EXPECT_THROW(bilinear(s.eps(1), build_basis(4, 2).eps(1)), DimensionMismatch);
}

TEST(Rho, Examples) {
  auto s = build_basis(3, 2);
  EXPECT_EQ(s.rho, s.eps(1) * frac(1, 2) - s.delta(1) * frac(1, 2));
  auto t = build_basis(4, 2);
  EXPECT_EQ(t.rho, t.eps(1) - t.delta(1));
  EXPECT_EQ(bilinear(s.rho, s.roots[static_cast<size_t>(s.root_index("s"))].alpha), 0);
}

TEST(Invariants, AllCases) {
  for (auto [m, n] : kCases) {
    SCOPED_TRACE(std::to_string(m) + "," + std::to_string(n));
    auto s = build_basis(m, n);
    ASSERT_EQ(s.dim, m + n);
    int zeros = 0;
    for (int p = 0; p < s.dim; ++p) {
      auto i = static_cast<size_t>(p);
      int b = s.bar[i];
      EXPECT_EQ(s.bar[static_cast<size_t>(b)], p);
      EXPECT_EQ(s.weights[static_cast<size_t>(b)], -s.weights[i]);
      EXPECT_EQ(s.grading[static_cast<size_t>(b)], s.grading[i]);
      if (s.weights[i].is_zero()) ++zeros;
      EXPECT_EQ(s.pos_of_label(s.labels[i]), p);
    }
    EXPECT_EQ(zeros, m % 2);
    // (rho, alpha) = (alpha, alpha) / 2 and every simple root is positive in
    // the position order: alpha = eps_x - eps_y for some x < y.
    for (const auto& r : s.roots) {
      EXPECT_EQ(bilinear(s.rho, r.alpha) * 2, bilinear(r.alpha, r.alpha)) << r.name;
      bool positive = false;
      for (int x = 0; x < s.dim; ++x)
        for (int y = x + 1; y < s.dim; ++y)
          if (s.weights[static_cast<size_t>(x)] - s.weights[static_cast<size_t>(y)] == r.alpha)
            positive = true;
      EXPECT_TRUE(positive) << r.name;
    }
    EXPECT_EQ(c_lambda0(s), m - n - 1);
  }
}

TEST(Roots, CartanIntegers) {
  auto s = build_basis(5, 2);
  // Roots i1, l, s: B-type chain with an isotropic tail.
  ASSERT_EQ(s.roots.size(), 3u);
  EXPECT_EQ(s.cartan[0][0], 2);
  EXPECT_EQ(s.cartan[0][1], -1);
  EXPECT_EQ(s.cartan[1][0], -2);
  EXPECT_EQ(s.cartan[2][2], 0);
  EXPECT_EQ(s.roots[2].parity, 1);
}

TEST(WeightOrder, Examples) {
  auto s = build_basis(3, 2);
  int d1 = s.pos_of_label("d1"), e1 = s.pos_of_label("e1"), me1 = s.pos_of_label("-e1");
  EXPECT_EQ(weight_order(s, d1, e1), Order::Greater);
  EXPECT_EQ(weight_order(s, s.zero_pos(), s.zero_pos()), Order::Equal);
  EXPECT_EQ(weight_order(s, e1, me1), Order::Greater);
  EXPECT_EQ(weight_order(s, me1, e1), Order::Less);
  EXPECT_THROW(weight_order(s, 0, 9), InvalidPair);
}
