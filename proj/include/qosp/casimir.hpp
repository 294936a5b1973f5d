#pragma once

#include <string>
#include <vector>

#include "qosp/gtensor.hpp"

namespace qosp {

/// (R^T R - I) / (q - q^{-1}), divided exactly entry by entry.
GradedMatrix build_A(const BasisSpec& spec, const GradedMatrix& R, const GradedMatrix& RT);
GradedMatrix build_A(const BasisSpec& spec);

/// str_1((q^{2h_rho} (x) I) A^l) as a matrix on V.
GradedMatrix casimir_operator(const BasisSpec& spec, const GradedMatrix& A, int l);
/// The scalar lambda with C_l = lambda I; throws NotScalar otherwise.
LaurentPoly scalar_value(const GradedMatrix& c);

struct PPMatrix {
  Weight lambda;
  std::vector<std::vector<RatFunc>> entries;  // row-major, position order
};

enum class Route { Operator, PP, Closed };

std::string route_name(Route r);
Route parse_route(const std::string& name);

struct EigenReport {
  int l = 0;
  Weight lambda;
  Route route = Route::PP;
  RatFunc value;
  bool degenerate = false;
};

PPMatrix pp_matrix(const BasisSpec& spec, const Weight& lambda);
/// (q^{2(Lambda, eps_a)} - 1) / (q - q^{-1})
RatFunc t1_direct(const BasisSpec& spec, const Weight& lambda, int a);
/// M^l applied to the all-ones vector.
std::vector<RatFunc> pp_power_ones(const PPMatrix& M, int l);

EigenReport chi_pp(const BasisSpec& spec, const Weight& lambda, int l);
/// Closed product formula; throws DegenerateSpectrum on exponent collisions.
EigenReport chi_closed(const BasisSpec& spec, const Weight& lambda, int l);
/// Operator route on the vector module (Lambda = delta_1).
EigenReport chi_operator(const BasisSpec& spec, int l);

/// Exponents (eps_a, 2 rho + 2 Lambda + eps_a) of the closed formula.
std::vector<Rational> closed_exponents(const BasisSpec& spec, const Weight& lambda);
bool spectrum_degenerate(const BasisSpec& spec, const Weight& lambda);

/// Parses "d1=1,e1=1/2"; unspecified coefficients are zero.
Weight parse_lambda(const BasisSpec& spec, const std::string& text);
std::string lambda_str(const BasisSpec& spec, const Weight& w);

}  // namespace qosp
