#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qosp/vecrep.hpp"

namespace qosp {

/// sigma-hat values keyed by position pairs (b, a) with eps_b > eps_a,
/// which in the weight-descending layout means b < a.
class SigmaTable {
 public:
  using Key = std::pair<int, int>;

  explicit SigmaTable(BasisSpec spec) : spec_(std::move(spec)) {}

  const BasisSpec& spec() const { return spec_; }
  bool contains(int b, int a) const { return entries_.count({b, a}) != 0; }
  const GradedMatrix& at(int b, int a) const;
  void put(int b, int a, GradedMatrix x);
  const std::map<Key, GradedMatrix>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }

 private:
  BasisSpec spec_;
  std::map<Key, GradedMatrix> entries_;
};

/// e_c q^{h_c/2}, the operator the fundamental values are built from.
GradedMatrix raising_operator(const Generator& g);

SigmaTable seed_sigma_table(const BasisSpec& spec, const std::vector<Generator>& gens);
/// Pivots c with b < c < a and c not in {bar b, bar a}.
std::vector<int> admissible_pivots(const BasisSpec& spec, int b, int a);
/// One step of the induction relation through pivot c.
GradedMatrix sigma_via_pivot(const SigmaTable& table, int b, int a, int c);
/// Fills every missing pair by the induction relation, processing pairs in
/// order of increasing position gap and using the first admissible pivot.
SigmaTable extend_sigma_table(SigmaTable table);
SigmaTable build_sigma_table(const BasisSpec& spec);

/// Closed form of q^{h_{eps_a}} sigma-hat_{ba} (b < a).
GradedMatrix sigma_tilde_closed(const BasisSpec& spec, int b, int a);
/// Closed form of the opposite entry sigma-tilde_{ab} (b < a).
GradedMatrix sigma_tilde_opposite_closed(const BasisSpec& spec, int b, int a);
/// (E^a_b)^dagger = (-1)^{[a]([a]+[b])} E^b_a, q unchanged.
GradedMatrix graded_dagger(const GradedMatrix& x);

}  // namespace qosp
