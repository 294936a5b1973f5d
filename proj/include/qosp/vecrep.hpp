#pragma once

#include <optional>
#include <vector>

#include "qosp/graded_matrix.hpp"
#include "qosp/rootdata.hpp"

namespace qosp {

/// Matrices of one simple root in the vector representation. The Cartan
/// element is carried only through q^{+-h/2}.
struct Generator {
  SimpleRoot root;
  GradedMatrix e;
  GradedMatrix f;
  GradedMatrix k_half;      // q^{h/2}
  GradedMatrix k_half_inv;  // q^{-h/2}
};

/// E^a_b: the matrix unit with a one at (a, b).
GradedMatrix unit_matrix(const BasisSpec& spec, int a, int b);
/// pi(sigma^a_b) = E^a_b - (-1)^{[a]([a]+[b])} xi_a xi_b E^{b bar}_{a bar}
GradedMatrix cartan_weyl(const BasisSpec& spec, int a, int b);
/// diag(q^{(w, eps_a)})
GradedMatrix q_weight_diag(const BasisSpec& spec, const Weight& w);
std::vector<Generator> simple_generators(const BasisSpec& spec);
/// xy - (-1)^{[x][y]} yx
GradedMatrix graded_commutator(const GradedMatrix& x, const GradedMatrix& y);
/// The common weight eps_r - eps_c of all entries, if there is one.
std::optional<Weight> weight_offset(const BasisSpec& spec, const GradedMatrix& x);

}  // namespace qosp
