#include <gtest/gtest.h>

#include "qosp/errors.hpp"
#include "qosp/vecrep.hpp"

using namespace qosp;

namespace {

LaurentPoly P(const std::string& s) { return parse_laurent(s); }

GradedMatrix diag(const BasisSpec& s, const std::vector<std::string>& d) {
  std::vector<LaurentPoly> v;
  for (const auto& x : d) v.push_back(P(x));
  return GradedMatrix::diagonal(s.grading, v);
}

const Generator& gen(const BasisSpec& s, const std::vector<Generator>& g, const std::string& name) {
  return g[static_cast<size_t>(s.root_index(name))];
}

}  // namespace

TEST(SimpleGenerators, Osp32Matrices) {
  auto s = build_basis(3, 2);
  auto g = simple_generators(s);
  ASSERT_EQ(g.size(), 2u);
  const auto& l = gen(s, g, "l");
  EXPECT_EQ(l.e, unit_matrix(s, 1, 2) - unit_matrix(s, 2, 3));
  // h_l = diag(0,1,0,-1,0), so q^{h_l/2} = diag(1, q^(1/2), 1, q^(-1/2), 1).
  EXPECT_EQ(l.k_half, diag(s, {"1", "q^(1/2)", "1", "q^(-1/2)", "1"}));
  const auto& es = gen(s, g, "s");
  EXPECT_EQ(es.e, unit_matrix(s, 0, 1) - unit_matrix(s, 3, 4));
  EXPECT_EQ(es.k_half, diag(s, {"q^(-1/2)", "q^(-1/2)", "1", "q^(1/2)", "q^(1/2)"}));
  EXPECT_EQ(es.e.homogeneous_parity(), 1);
}

TEST(SimpleGenerators, OddSimpleRootsAtOsp34) {
  auto s = build_basis(3, 4);
  auto g = simple_generators(s);
  // e_mu1 = E^{d1}_{d2} + E^{-d2}_{-d1}
  int d1 = s.pos_of_label("d1"), d2 = s.pos_of_label("d2");
  int md1 = s.pos_of_label("-d1"), md2 = s.pos_of_label("-d2");
  EXPECT_EQ(gen(s, g, "mu1").e, unit_matrix(s, d1, d2) + unit_matrix(s, md2, md1));
}

TEST(SimpleGenerators, RaiseWeightByRoot) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {5, 4}, {4, 4}}) {
    auto s = build_basis(m, n);
    for (const auto& g : simple_generators(s)) {
      auto w = weight_offset(s, g.e);
      ASSERT_TRUE(w.has_value()) << g.root.name;
      EXPECT_EQ(*w, g.root.alpha) << g.root.name;
      EXPECT_EQ(*weight_offset(s, g.f), -g.root.alpha);
      EXPECT_EQ(g.e.homogeneous_parity(), g.root.parity);
      EXPECT_EQ(g.k_half * g.k_half_inv, GradedMatrix::identity(s.grading));
    }
  }
}

TEST(CartanWeyl, Examples) {
  auto s = build_basis(3, 2);
  int e1 = s.pos_of_label("e1");
  EXPECT_EQ(cartan_weyl(s, e1, e1), diag(s, {"0", "1", "0", "-1", "0"}));
  for (int a = 0; a < s.dim; ++a)
    EXPECT_EQ(cartan_weyl(s, a, a), unit_matrix(s, a, a) - unit_matrix(s, s.bar[static_cast<size_t>(a)],
                                                                       s.bar[static_cast<size_t>(a)]));
  EXPECT_TRUE(cartan_weyl(s, s.zero_pos(), s.zero_pos()).is_zero());
}

TEST(QWeightDiag, Examples) {
  auto s = build_basis(3, 2);
  EXPECT_EQ(q_weight_diag(s, s.eps(1)), diag(s, {"1", "q", "1", "q^-1", "1"}));
  EXPECT_EQ(q_weight_diag(s, s.zero_weight()), GradedMatrix::identity(s.grading));
  EXPECT_EQ(q_weight_diag(s, s.rho * 2), diag(s, {"q", "q", "1", "q^-1", "q^-1"}));
}

TEST(GradedCommutator, Examples) {
  auto s = build_basis(3, 2);
  auto g = simple_generators(s);
  const auto& es = gen(s, g, "s");
  const auto& l = gen(s, g, "l");
  EXPECT_TRUE(graded_commutator(l.k_half, es.k_half).is_zero());
  EXPECT_EQ(graded_commutator(es.e, es.f), diag(s, {"-1", "-1", "0", "1", "1"}));
  EXPECT_TRUE(graded_commutator(es.e, es.e).is_zero());
  EXPECT_THROW(graded_commutator(es.e + l.e, es.e), NotHomogeneous);
}

TEST(GradedCommutator, CartanRelationPerRoot) {
  // (q - q^-1)[e_a, f_a] = K_a^2 - K_a^-2 with K_a = q^{h_a/2}.
  for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {3, 4}, {6, 2}}) {
    auto s = build_basis(m, n);
    for (const auto& g : simple_generators(s)) {
      auto lhs = graded_commutator(g.e, g.f).scaled(s.ctx.q_minus_qinv());
      auto k2 = g.k_half * g.k_half;
      auto k2i = g.k_half_inv * g.k_half_inv;
      EXPECT_EQ(lhs, k2 - k2i) << m << "," << n << " " << g.root.name;
    }
  }
}

TEST(WeightOffset, MixedMatrixHasNone) {
  auto s = build_basis(3, 2);
  EXPECT_FALSE(weight_offset(s, unit_matrix(s, 0, 1) + unit_matrix(s, 0, 2)).has_value());
}
