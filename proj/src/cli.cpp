#include "qosp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

#include "qosp/errors.hpp"

namespace qosp {

using nlohmann::json;

namespace {

json rational_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return rational_str(r);
}

json weight_json(const Weight& w) {
  json a = json::array();
  for (const auto& x : w.c) a.push_back(rational_json(x));
  return a;
}

std::vector<int> grading_from_json(const json& j) {
  auto g = j.at("grading").get<std::vector<int>>();
  if (static_cast<int>(g.size()) != j.at("dim").get<int>())
    throw DimensionMismatch("grading length differs from dim");
  for (int x : g)
    if (x != 0 && x != 1) throw ParseError("grading entries must be 0 or 1");
  return g;
}

}  // namespace

json matrix_to_json(const GradedMatrix& x) {
  json entries = json::array();
  for (int r = 0; r < x.dim(); ++r)
    for (const auto& [c, v] : x.row(r)) entries.push_back({{"r", r}, {"c", c}, {"v", v.str()}});
  return {{"dim", x.dim()}, {"grading", x.grading()}, {"entries", entries}};
}

GradedMatrix matrix_from_json(const json& j) {
  try {
    GradedMatrix x(grading_from_json(j));
    for (const auto& e : j.at("entries")) {
      int r = e.at("r").get<int>();
      int c = e.at("c").get<int>();
      if (r < 0 || c < 0 || r >= x.dim() || c >= x.dim())
        throw ParseError("entry (" + std::to_string(r) + "," + std::to_string(c) + ") out of range");
      x.add(r, c, parse_laurent(e.at("v").get<std::string>()));
    }
    return x;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed matrix JSON: ") + e.what());
  }
}

json basis_to_json(const BasisSpec& spec) {
  json order = json::array();
  for (int p = 0; p < spec.dim; ++p) {
    auto i = static_cast<size_t>(p);
    order.push_back({{"label", spec.labels[i]},
                     {"parity", spec.grading[i]},
                     {"weight", weight_json(spec.weights[i])}});
  }
  return {{"m", spec.m}, {"n", spec.n}, {"order", order}};
}

json generators_to_json(const BasisSpec& spec, const std::vector<Generator>& gens) {
  json list = json::array();
  for (const auto& g : gens)
    list.push_back({{"root", g.root.name},
                    {"parity", g.root.parity},
                    {"alpha", weight_json(g.root.alpha)},
                    {"e", matrix_to_json(g.e)},
                    {"f", matrix_to_json(g.f)},
                    {"k_half", matrix_to_json(g.k_half)},
                    {"k_half_inv", matrix_to_json(g.k_half_inv)}});
  return {{"m", spec.m}, {"n", spec.n}, {"generators", list}};
}

json report_to_json(const VerifyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}});
  json failure = nullptr;
  if (r.failure) {
    const auto& f = *r.failure;
    failure = {{"identity", f.identity}, {"row", f.row}, {"col", f.col}, {"lhs", f.lhs},
               {"rhs", f.rhs}};
  }
  return {{"suite", r.suite}, {"m", r.m},           {"n", r.n},
          {"passed", r.passed()}, {"checks", checks}, {"failure", failure}};
}

json eigen_to_json(const BasisSpec& spec, const EigenReport& r) {
  return {{"l", r.l},
          {"lambda", lambda_str(spec, r.lambda)},
          {"route", route_name(r.route)},
          {"value", r.value.str()},
          {"degenerate", r.degenerate}};
}

Rational parse_numeric_point(const std::string& text) {
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }),
          t.end());
  if (t.rfind("s=", 0) == 0) t = t.substr(2);
  Rational r;
  if (t.empty() || r.set_str(t, 10) != 0) throw ParseError("expected s=P/Q, got '" + text + "'");
  r.canonicalize();
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  if (sgn(r) == 0) throw PoleAtPoint("s = 0 is a pole of q^{-1}");
  return r;
}

namespace {

struct Config {
  int m = 0;
  int n = 0;
  std::string output;
  std::string pair;
  bool opposite = false;
  std::string suite;
  std::string numeric;
  int power = 0;
  std::string route = "pp";
  std::string lambda;
};

void add_rank(CLI::App* sub, Config& cfg) {
  sub->add_option("--m", cfg.m, "even dimension m (m > 2)")->required();
  sub->add_option("--n", cfg.n, "odd dimension n (even, n >= 2)")->required();
  sub->add_option("-o,--output", cfg.output, "write to a file instead of stdout");
}

std::pair<int, int> parse_pair(const BasisSpec& spec, const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("--pair expects 'b,a', got '" + text + "'");
  auto trim = [](std::string s) {
    s.erase(0, s.find_first_not_of(" \t"));
    s.erase(s.find_last_not_of(" \t") + 1);
    return s;
  };
  int b = spec.pos_of_label(trim(text.substr(0, comma)));
  int a = spec.pos_of_label(trim(text.substr(comma + 1)));
  if (b >= a)
    throw InvalidPair("sigma-hat pairs need eps_b > eps_a, i.e. b before a in the basis order");
  return {b, a};
}

int execute(const std::string& cmd, const Config& cfg, std::ostream& out) {
  ScalarContext ctx;
  if (!cfg.numeric.empty()) ctx = ScalarContext(parse_numeric_point(cfg.numeric));
  BasisSpec spec = build_basis(cfg.m, cfg.n, ctx);

  if (cmd == "basis") {
    out << basis_to_json(spec).dump(2) << "\n";
  } else if (cmd == "gens") {
    out << generators_to_json(spec, simple_generators(spec)).dump(2) << "\n";
  } else if (cmd == "sigma") {
    std::optional<std::pair<int, int>> only;
    if (!cfg.pair.empty()) only = parse_pair(spec, cfg.pair);
    SigmaTable table = build_sigma_table(spec);
    json list = json::array();
    for (const auto& [key, x] : table.entries()) {
      if (only && *only != key) continue;
      list.push_back({{"b", spec.labels[static_cast<size_t>(key.first)]},
                      {"a", spec.labels[static_cast<size_t>(key.second)]},
                      {"matrix", matrix_to_json(x)}});
    }
    out << json{{"m", spec.m}, {"n", spec.n}, {"entries", list}}.dump(2) << "\n";
  } else if (cmd == "rmat") {
    GradedMatrix R = cfg.opposite ? assemble_RT(spec) : assemble_R(spec);
    out << matrix_to_json(R).dump(2) << "\n";
  } else if (cmd == "verify") {
    VerifyReport r = run_suite(cfg.suite, spec);
    json j = report_to_json(r);
    j["mode"] = ctx.numeric() ? "s=" + rational_str(*ctx.point()) : "symbolic";
    out << j.dump(2) << "\n";
    return r.passed() ? 0 : 1;
  } else if (cmd == "casimir") {
    Route route = parse_route(cfg.route);
    Weight lambda = cfg.lambda.empty() ? spec.delta(1) : parse_lambda(spec, cfg.lambda);
    EigenReport r;
    switch (route) {
      case Route::Operator:
        if (!(lambda - spec.delta(1)).is_zero())
          throw UnsupportedElement("the operator route acts on the vector module, Lambda = d1=1");
        r = chi_operator(spec, cfg.power);
        break;
      case Route::PP:
        r = chi_pp(spec, lambda, cfg.power);
        break;
      case Route::Closed:
        r = chi_closed(spec, lambda, cfg.power);
        break;
    }
    out << r.value.str() << "\n" << eigen_to_json(spec, r).dump() << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum osp(m|n) R-matrix and Casimir toolkit", "qosp"};
  app.require_subcommand(1);
  Config cfg;

  auto* basis = app.add_subcommand("basis", "index order, parities and weights");
  add_rank(basis, cfg);
  auto* gens = app.add_subcommand("gens", "simple generators in the vector representation");
  add_rank(gens, cfg);
  auto* sigma = app.add_subcommand("sigma", "sigma-hat table entries");
  add_rank(sigma, cfg);
  sigma->add_option("--pair", cfg.pair, "single entry by labels, e.g. d1,e1");
  auto* rmat = app.add_subcommand("rmat", "the R-matrix on V (x) V");
  add_rank(rmat, cfg);
  rmat->add_flag("--opposite", cfg.opposite, "emit R^T instead of R");
  auto* verify = app.add_subcommand("verify", "run an identity suite");
  add_rank(verify, cfg);
  verify->add_option("suite", cfg.suite, "suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--numeric", cfg.numeric, "evaluate at s = P/Q instead of symbolically");
  auto* casimir = app.add_subcommand("casimir", "Casimir eigenvalue");
  add_rank(casimir, cfg);
  casimir->add_option("--power", cfg.power, "power l of A")->required()->check(CLI::NonNegativeNumber);
  casimir->add_option("--route", cfg.route, "operator, pp or closed")
      ->check(CLI::IsMember({"operator", "pp", "closed"}));
  casimir->add_option("--lambda", cfg.lambda, "highest weight, e.g. \"d1=1,e1=1/2\" (default d1=1)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cfg.output.empty()) return execute(cmd, cfg, out);
    std::ofstream file(cfg.output);
    if (!file) {
      err << "cannot open " << cfg.output << " for writing\n";
      return 2;
    }
    return execute(cmd, cfg, file);
  } catch (const NotScalar& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const DegenerateSpectrum& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace qosp
