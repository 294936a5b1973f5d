#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qosp/casimir.hpp"
#include "qosp/verify.hpp"

namespace qosp {

/// {"dim": N, "grading": [...], "entries": [{"r": i, "c": j, "v": "..."}]}
nlohmann::json matrix_to_json(const GradedMatrix& x);
GradedMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json basis_to_json(const BasisSpec& spec);
nlohmann::json generators_to_json(const BasisSpec& spec, const std::vector<Generator>& gens);
nlohmann::json report_to_json(const VerifyReport& r);
nlohmann::json eigen_to_json(const BasisSpec& spec, const EigenReport& r);

/// Parses "s=P/Q" (or "P/Q").
Rational parse_numeric_point(const std::string& text);

/// Exit codes: 0 success or pass, 1 verification failure / NotScalar /
/// DegenerateSpectrum, 2 usage or validation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace qosp
