#include <gtest/gtest.h>

#include "qosp/errors.hpp"
#include "qosp/verify.hpp"

using namespace qosp;

namespace {

const std::vector<std::pair<int, int>> kCases = {{3, 2}, {4, 2}, {5, 2}, {3, 4}, {4, 4}};

std::string where(const VerifyReport& r) {
  if (!r.failure) return "pass";
  const auto& f = *r.failure;
  return f.identity + " at (" + std::to_string(f.row) + "," + std::to_string(f.col) + "): " +
         f.lhs + " vs " + f.rhs;
}

// Zeroes the first off-diagonal entry.
GradedMatrix drop_offdiagonal(GradedMatrix x) {
  for (int r = 0; r < x.dim(); ++r)
    for (const auto& [c, v] : x.row(r))
      if (c != r) {
        x.set(r, c, LaurentPoly());
        return x;
      }
  ADD_FAILURE() << "no off-diagonal entry";
  return x;
}

GradedMatrix bump_entry(GradedMatrix x, int r, int c) {
  x.add(r, c, LaurentPoly::q_pow(1));
  return x;
}

void expect_located_failure(const VerifyReport& r) {
  ASSERT_FALSE(r.passed()) << r.suite;
  EXPECT_FALSE(r.failure->identity.empty());
  EXPECT_NE(r.failure->lhs, r.failure->rhs);
}

}  // namespace

TEST(Suites, AllPassOnSmallCases) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}}) {
    auto s = build_basis(m, n);
    for (const auto& name : suite_names()) {
      auto r = run_suite(name, s);
      EXPECT_TRUE(r.passed()) << name << " " << m << "," << n << ": " << where(r);
      EXPECT_EQ(r.suite, name);
      EXPECT_EQ(r.m, m);
      EXPECT_FALSE(r.checks.empty());
    }
  }
}

TEST(Suites, UnknownNameRejected) {
  EXPECT_THROW(run_suite("nope", build_basis(3, 2)), UnsupportedElement);
}

TEST(Suites, NumericSpotModePasses) {
  auto s = build_basis(4, 2, ScalarContext(frac(5, 3)));
  for (const auto& name : suite_names()) {
    auto r = run_suite(name, s);
    EXPECT_TRUE(r.passed()) << name << ": " << where(r);
  }
}

TEST(DefiningRelations, AllCasesPass) {
  for (auto [m, n] : kCases) {
    auto r = check_defining_relations(build_basis(m, n));
    EXPECT_TRUE(r.passed()) << m << "," << n << ": " << where(r);
  }
}

TEST(DefiningRelations, PerturbedGeneratorFails) {
  auto s = build_basis(3, 2);
  auto g = simple_generators(s);
  auto& es = g[static_cast<size_t>(s.root_index("s"))];
  es.e.add(0, 1, LaurentPoly(1));
  expect_located_failure(check_defining_relations(s, g));
}

TEST(DefiningRelations, IsotropicSquareVanishes) {
  auto s = build_basis(3, 2);
  auto g = simple_generators(s);
  const auto& es = g[static_cast<size_t>(s.root_index("s"))];
  EXPECT_TRUE(graded_commutator(es.e, es.e).is_zero());
  EXPECT_TRUE(graded_commutator(es.f, es.f).is_zero());
}

TEST(SigmaConsistency, PassesAndDetectsPerturbation) {
  auto t = build_sigma_table(build_basis(3, 4));
  EXPECT_TRUE(check_sigma_consistency(t).passed());
  auto bad = t;
  auto key = bad.entries().begin()->first;
  bad.put(key.first, key.second, bump_entry(bad.at(key.first, key.second), 0, 0));
  expect_located_failure(check_sigma_consistency(bad));
}

TEST(Appendix, OddAndEvenRanks) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {3, 4}, {4, 4}}) {
    auto r = check_appendix_relations(build_sigma_table(build_basis(m, n)));
    EXPECT_TRUE(r.passed()) << m << "," << n << ": " << where(r);
  }
}

TEST(Appendix, PerturbedTableFails) {
  auto t = build_sigma_table(build_basis(3, 4));
  auto s = t.spec();
  int d1 = s.pos_of_label("d1"), d2 = s.pos_of_label("d2");
  t.put(d1, d2, t.at(d1, d2).scaled(LaurentPoly(2)));
  expect_located_failure(check_appendix_relations(t));
}

TEST(Ybe, PassesIdentityAndAssembledR) {
  auto s = build_basis(3, 2);
  auto I = GradedMatrix::identity(kron_grading(s.grading, s.grading));
  EXPECT_TRUE(check_ybe(s, I).passed());
  auto r = check_ybe(s, assemble_R(s));
  EXPECT_TRUE(r.passed()) << where(r);
}

TEST(Ybe, OffDiagonalZeroedFails) {
  auto s = build_basis(3, 2);
  expect_located_failure(check_ybe(s, drop_offdiagonal(assemble_R(s))));
}

TEST(Intertwining, PassesAndFailsWhenPerturbed) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {3, 4}}) {
    auto s = build_basis(m, n);
    auto R = assemble_R(s);
    auto r = check_intertwining(s, R);
    EXPECT_TRUE(r.passed()) << m << "," << n << ": " << where(r);
  }
  auto s = build_basis(3, 2);
  expect_located_failure(check_intertwining(s, drop_offdiagonal(assemble_R(s))));
}

TEST(Coproduct, PassesAndFailsWhenPerturbed) {
  auto t = build_sigma_table(build_basis(3, 2));
  auto R = assemble_R(t.spec());
  auto r = check_coproduct_property(t, R);
  EXPECT_TRUE(r.passed()) << where(r);
  expect_located_failure(check_coproduct_property(t, drop_offdiagonal(R)));
}

TEST(Coproduct, ClassicalLimitIsTrivial) {
  auto t = build_sigma_table(build_basis(3, 2, ScalarContext(Rational(1))));
  auto R = assemble_R(t.spec());
  EXPECT_EQ(R, GradedMatrix::identity(R.grading()));
  EXPECT_TRUE(check_coproduct_property(t, R).passed());
}

TEST(Opposite, PassesAndFailsWhenPerturbed) {
  auto s = build_basis(4, 2);
  EXPECT_TRUE(check_opposite(s, assemble_R(s)).passed());
  expect_located_failure(check_opposite(s, drop_offdiagonal(assemble_R(s))));
}

TEST(Serre, LargerCasesPass) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{5, 2}, {5, 4}, {3, 4}, {6, 2}}) {
    auto r = check_serre(build_sigma_table(build_basis(m, n)));
    EXPECT_TRUE(r.passed()) << m << "," << n << ": " << where(r);
  }
}

TEST(Serre, ExtraRelationsRunWhenRankAllows) {
  auto names = [](const VerifyReport& r) {
    std::string all;
    for (const auto& c : r.checks) all += c.name + ";";
    return all;
  };
  auto big = check_serre(build_sigma_table(build_basis(5, 4)));
  auto small = check_serre(build_sigma_table(build_basis(5, 2)));
  EXPECT_GT(big.checks.size(), small.checks.size());
  EXPECT_NE(names(big).find("extra"), std::string::npos) << names(big);
  EXPECT_EQ(names(small).find("extra"), std::string::npos);
}

TEST(Serre, PerturbedTableFails) {
  auto t = build_sigma_table(build_basis(5, 2));
  const auto& s = t.spec();
  auto [b, a] = simple_sigma_pair(s, s.root_index("i1"));
  t.put(b, a, bump_entry(t.at(b, a), 0, 0));
  expect_located_failure(check_serre(t));
}

TEST(HopfAdjoint, OrthogonalRootsCommute) {
  // (3,4): alpha_mu1 = d1 - d2 and alpha_l = e1 are orthogonal.
  auto s = build_basis(3, 4);
  auto g = simple_generators(s);
  const auto& gm = g[static_cast<size_t>(s.root_index("mu1"))];
  const auto& gl = g[static_cast<size_t>(s.root_index("l"))];
  EXPECT_TRUE(hopf_adjoint(s, gm, true, gl.e).is_zero());
  EXPECT_TRUE(hopf_adjoint(s, gm, false, gl.f).is_zero());
}
