#include "qosp/casimir.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "qosp/errors.hpp"

namespace qosp {

namespace {

int sign_of(int e) { return e % 2 == 0 ? 1 : -1; }

RatFunc qr(const BasisSpec& spec, const Rational& e) { return RatFunc(spec.ctx.q_pow(e)); }

RatFunc q_minus_qinv(const BasisSpec& spec) { return RatFunc(spec.ctx.q_minus_qinv()); }

const Weight& wt(const BasisSpec& spec, int a) { return spec.weights[static_cast<size_t>(a)]; }

void check_power(int l) {
  if (l < 0) throw UnsupportedElement("Casimir power must be nonnegative");
}

}  // namespace

GradedMatrix build_A(const BasisSpec& spec, const GradedMatrix& R, const GradedMatrix& RT) {
  GradedMatrix x = RT * R - GradedMatrix::identity(R.grading());
  LaurentPoly qq = spec.ctx.q_minus_qinv();
  if (qq.is_zero()) throw PoleAtPoint("q - q^-1 vanishes at the evaluation point");
  return x.transform([&](int, int, const LaurentPoly& v) { return lp_exact_divide(v, qq); });
}

GradedMatrix build_A(const BasisSpec& spec) {
  return build_A(spec, assemble_R(spec), assemble_RT(spec));
}

GradedMatrix casimir_operator(const BasisSpec& spec, const GradedMatrix& A, int l) {
  check_power(l);
  GradedMatrix power = GradedMatrix::identity(A.grading());
  for (int i = 0; i < l; ++i) power = power * A;
  GradedMatrix weight = graded_kron(q_weight_diag(spec, spec.rho * 2),
                                    GradedMatrix::identity(spec.grading));
  return partial_supertrace_first(weight * power, spec.grading);
}

LaurentPoly scalar_value(const GradedMatrix& c) {
  LaurentPoly lambda = c.dim() > 0 ? c.get(0, 0) : LaurentPoly();
  for (int r = 0; r < c.dim(); ++r)
    for (const auto& [col, v] : c.row(r))
      if (col != r || !(v == lambda))
        throw NotScalar("entry (" + std::to_string(r) + "," + std::to_string(col) + ") = " +
                        v.str() + " breaks scalarity");
  for (int r = 0; r < c.dim(); ++r)
    if (!lambda.is_zero() && c.get(r, r).is_zero())
      throw NotScalar("diagonal entry " + std::to_string(r) + " vanishes");
  return lambda;
}

std::string route_name(Route r) {
  switch (r) {
    case Route::Operator:
      return "operator";
    case Route::PP:
      return "pp";
    case Route::Closed:
      return "closed";
  }
  return "?";
}

Route parse_route(const std::string& name) {
  if (name == "operator") return Route::Operator;
  if (name == "pp") return Route::PP;
  if (name == "closed") return Route::Closed;
  throw ParseError("unknown route '" + name + "'");
}

PPMatrix pp_matrix(const BasisSpec& spec, const Weight& lambda) {
  const int N = spec.dim;
  const Rational c0 = c_lambda0(spec);
  const Weight two_rho = spec.rho * 2;
  const Weight two_lambda = lambda * 2;
  PPMatrix M{lambda, std::vector<std::vector<RatFunc>>(static_cast<size_t>(N),
                                                       std::vector<RatFunc>(static_cast<size_t>(N)))};
  for (int a = 0; a < N; ++a) {
    const Weight& ea = wt(spec, a);
    auto& row = M.entries[static_cast<size_t>(a)];
    row[static_cast<size_t>(a)] =
        (qr(spec, bilinear(ea, two_lambda + two_rho + ea) - c0) - 1) / q_minus_qinv(spec);
    RatFunc pre = qr(spec, bilinear(two_lambda, ea) - c0);
    for (int b = 0; b < a; ++b) {
      RatFunc inner = qr(spec, bilinear(two_rho, wt(spec, b))) * RatFunc(sign_of(spec.grading[static_cast<size_t>(b)]));
      if (spec.bar[static_cast<size_t>(b)] == a) inner -= 1;
      row[static_cast<size_t>(b)] = pre * inner;
    }
  }
  return M;
}

RatFunc t1_direct(const BasisSpec& spec, const Weight& lambda, int a) {
  return (qr(spec, 2 * bilinear(lambda, wt(spec, a))) - 1) / q_minus_qinv(spec);
}

std::vector<RatFunc> pp_power_ones(const PPMatrix& M, int l) {
  check_power(l);
  const size_t N = M.entries.size();
  std::vector<RatFunc> t(N, RatFunc(1));
  for (int step = 0; step < l; ++step) {
    std::vector<RatFunc> next(N);
    for (size_t a = 0; a < N; ++a)
      for (size_t b = 0; b <= a; ++b)
        if (!M.entries[a][b].is_zero() && !t[b].is_zero()) next[a] += M.entries[a][b] * t[b];
    t = std::move(next);
  }
  return t;
}

EigenReport chi_pp(const BasisSpec& spec, const Weight& lambda, int l) {
  PPMatrix M = pp_matrix(spec, lambda);
  std::vector<RatFunc> t = pp_power_ones(M, l);
  RatFunc sum;
  const Weight two_rho = spec.rho * 2;
  for (int a = 0; a < spec.dim; ++a) {
    RatFunc w = qr(spec, bilinear(two_rho, wt(spec, a))) * RatFunc(sign_of(spec.grading[static_cast<size_t>(a)]));
    sum += w * t[static_cast<size_t>(a)];
  }
  return EigenReport{l, lambda, Route::PP, sum, false};
}

std::vector<Rational> closed_exponents(const BasisSpec& spec, const Weight& lambda) {
  const Weight base = spec.rho * 2 + lambda * 2;
  std::vector<Rational> x;
  for (const auto& ea : spec.weights) x.push_back(bilinear(ea, base + ea));
  return x;
}

bool spectrum_degenerate(const BasisSpec& spec, const Weight& lambda) {
  auto x = closed_exponents(spec, lambda);
  for (size_t a = 0; a < x.size(); ++a)
    for (size_t b = a + 1; b < x.size(); ++b)
      if (x[a] == x[b]) return true;
  return false;
}

EigenReport chi_closed(const BasisSpec& spec, const Weight& lambda, int l) {
  check_power(l);
  const std::vector<Rational> x = closed_exponents(spec, lambda);
  for (size_t a = 0; a < x.size(); ++a)
    for (size_t b = a + 1; b < x.size(); ++b)
      if (x[a] == x[b])
        throw DegenerateSpectrum("exponent " + rational_str(x[a]) + " shared by " +
                                 spec.labels[a] + " and " + spec.labels[b]);
  const Rational c0 = c_lambda0(spec);
  const Weight base = spec.rho * 2 + lambda * 2;
  const RatFunc qq = q_minus_qinv(spec);
  RatFunc sum;
  for (int a = 0; a < spec.dim; ++a) {
    const auto ua = static_cast<size_t>(a);
    const Weight& ea = wt(spec, a);
    RatFunc alpha = (qr(spec, x[ua] - c0) - 1) / qq;
    RatFunc term = qr(spec, c0 - bilinear(ea, ea)) * RatFunc(sign_of(spec.grading[ua]));
    for (int i = 0; i < l; ++i) term *= alpha;
    RatFunc qxa = qr(spec, x[ua]);
    for (int b = 0; b < spec.dim; ++b) {
      if (b == a) continue;
      const auto ub = static_cast<size_t>(b);
      RatFunc num;
      if (spec.bar[ua] == b) {
        // f(a) folded into this factor: its pole cancels the zero of q^x - q^-x.
        num = qxa - qr(spec, -x[ua]);
        if (spec.m % 2 == 0)
          num -= qq * qr(spec, 1 - x[ua]);
        else
          num += qq;
      } else {
        num = qxa - qr(spec, bilinear(wt(spec, b), base - wt(spec, b)));
      }
      term *= num / (qxa - qr(spec, x[ub]));
    }
    sum += term;
  }
  return EigenReport{l, lambda, Route::Closed, sum, false};
}

EigenReport chi_operator(const BasisSpec& spec, int l) {
  GradedMatrix A = build_A(spec);
  LaurentPoly v = scalar_value(casimir_operator(spec, A, l));
  return EigenReport{l, spec.delta(1), Route::Operator, RatFunc(v), false};
}

Weight parse_lambda(const BasisSpec& spec, const std::string& text) {
  Weight w = spec.zero_weight();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected label=value in '" + item + "'");
    std::string label = item.substr(0, eq);
    std::string value = item.substr(eq + 1);
    Rational v;
    try {
      v = Rational(value);
    } catch (const std::invalid_argument&) {
      throw ParseError("bad rational '" + value + "'");
    }
    v.canonicalize();
    if (label.size() >= 2 && (label[0] == 'd' || label[0] == 'e')) {
      int idx = 0;
      try {
        idx = std::stoi(label.substr(1));
      } catch (const std::exception&) {
        throw ParseError("bad weight label '" + label + "'");
      }
      if (label[0] == 'd' && idx >= 1 && idx <= spec.k) {
        w.delta(idx) = v;
        continue;
      }
      if (label[0] == 'e' && idx >= 1 && idx <= spec.l) {
        w.eps(idx) = v;
        continue;
      }
    }
    throw ParseError("unknown weight label '" + label + "'");
  }
  return w;
}

std::string lambda_str(const BasisSpec& spec, const Weight& w) {
  std::string out;
  auto emit = [&](const std::string& label, const Rational& v) {
    if (!out.empty()) out += ",";
    out += label + "=" + rational_str(v);
  };
  for (int mu = 1; mu <= spec.k; ++mu) emit("d" + std::to_string(mu), w.delta(mu));
  for (int i = 1; i <= spec.l; ++i) emit("e" + std::to_string(i), w.eps(i));
  return out;
}

}  // namespace qosp
