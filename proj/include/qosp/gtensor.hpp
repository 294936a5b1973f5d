#pragma once

#include <vector>

#include "qosp/lax.hpp"

namespace qosp {

/// Composite grading of V1 (x) V2, lexicographic in (site1, site2).
std::vector<int> kron_grading(const std::vector<int>& g1, const std::vector<int>& g2);

/// (x (x) y)_{(a c),(b d)} = (-1)^{[c]([a]+[b])} x_{ab} y_{cd}; with this
/// sign, composition of graded tensor operators is plain matrix product.
GradedMatrix graded_kron(const GradedMatrix& x, const GradedMatrix& y);

/// P_{(a b),(c d)} = (-1)^{[c][d]} delta_{ad} delta_{bc} on V (x) V.
GradedMatrix super_flip(const std::vector<int>& grading);

enum class Slot { S12, S13, S23 };

/// Places an operator on V (x) V into V (x) V (x) V. Slot 13 is
/// P23 (x12) P23.
GradedMatrix embed_three(const GradedMatrix& x, const std::vector<int>& site, Slot slot);
/// Slot 13 through the other conjugation, P12 (x23) P12.
GradedMatrix embed_13_alt(const GradedMatrix& x, const std::vector<int>& site);

/// result_{cd} = sum_a (-1)^{[a]} x_{(a c),(a d)}
GradedMatrix partial_supertrace_first(const GradedMatrix& x, const std::vector<int>& site);
LaurentPoly supertrace(const GradedMatrix& x);

/// R from the closed sigma-tilde values.
GradedMatrix assemble_R(const BasisSpec& spec);
/// R from a sigma-hat table: sum E^a_a (x) q^{h_a} + (q - 1/q) sum (-1)^{[b]}
/// E^a_b (x) q^{h_a} sigma-hat_{ba}.
GradedMatrix assemble_R_from_table(const SigmaTable& table);
/// Opposite R-matrix from the closed sigma-tilde_{ab} values.
GradedMatrix assemble_RT(const BasisSpec& spec);
/// Factorwise dagger on V (x) V: (x (x) y)^dagger = x^dagger (x) y^dagger.
GradedMatrix tensor_dagger(const GradedMatrix& x, const std::vector<int>& site);

enum class GenKind { E, F, KHalf, KHalfInv };

struct GenRef {
  int root;  // index into BasisSpec::roots
  GenKind kind;
};

const GradedMatrix& generator_matrix(const std::vector<Generator>& gens, GenRef g);
/// Delta(g) on V (x) V, or Delta^T = P Delta P when twisted.
GradedMatrix coproduct_pair(const BasisSpec& spec, const std::vector<Generator>& gens, GenRef g,
                            bool twisted);

}  // namespace qosp
