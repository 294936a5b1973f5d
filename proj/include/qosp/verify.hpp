#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qosp/gtensor.hpp"

namespace qosp {

struct IdentityResult {
  std::string name;
  bool pass;
};

struct Counterexample {
  std::string identity;
  int row = -1;
  int col = -1;
  std::string lhs;
  std::string rhs;
};

struct VerifyReport {
  std::string suite;
  int m = 0;
  int n = 0;
  std::vector<IdentityResult> checks;
  std::optional<Counterexample> failure;
  double seconds = 0;

  bool passed() const { return !failure.has_value(); }
};

VerifyReport check_defining_relations(const BasisSpec& spec);
VerifyReport check_defining_relations(const BasisSpec& spec, const std::vector<Generator>& gens);

/// Recursion versus closed form, pivot independence, weight homogeneity
/// and the q-commutation relations with every simple raising operator.
VerifyReport check_sigma_consistency(const SigmaTable& table);

VerifyReport check_appendix_relations(const SigmaTable& table);

VerifyReport check_ybe(const BasisSpec& spec, const GradedMatrix& R);

VerifyReport check_intertwining(const BasisSpec& spec, const GradedMatrix& R);

/// (id (x) Delta) R built from the coproduct of sigma-hat against R13 R12.
VerifyReport check_coproduct_property(const SigmaTable& table, const GradedMatrix& R);

/// R^T closed form against the dagger of R and against P R P.
VerifyReport check_opposite(const BasisSpec& spec, const GradedMatrix& R);

VerifyReport check_serre(const SigmaTable& table);

/// Simple raising sigma-hat entry attached to spec.roots[r].
std::pair<int, int> simple_sigma_pair(const BasisSpec& spec, int r);

/// Hopf adjoint action ad g o y for a simple e or f in the representation.
GradedMatrix hopf_adjoint(const BasisSpec& spec, const Generator& g, bool raising,
                          const GradedMatrix& y);

/// Runs a suite by its CLI name ("ybe", "intertwine", "coproduct", "serre",
/// "defrel", "appendix", "sigma-consistency", "opposite").
VerifyReport run_suite(const std::string& name, const BasisSpec& spec);
const std::vector<std::string>& suite_names();

}  // namespace qosp
