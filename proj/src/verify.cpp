#include "qosp/verify.hpp"

#include <chrono>

#include "qosp/errors.hpp"

namespace qosp {

namespace {

int sign_of(int e) { return e % 2 == 0 ? 1 : -1; }

class Checker {
 public:
  Checker(std::string suite, const BasisSpec& spec) : start_(std::chrono::steady_clock::now()) {
    report_.suite = std::move(suite);
    report_.m = spec.m;
    report_.n = spec.n;
  }

  bool failed() const { return report_.failure.has_value(); }

  void equal(const std::string& name, const GradedMatrix& lhs, const GradedMatrix& rhs) {
    if (failed()) return;
    auto diff = first_difference(lhs, rhs);
    report_.checks.push_back({name, !diff});
    if (diff) {
      auto [r, c] = *diff;
      report_.failure = Counterexample{name, r, c, lhs.get(r, c).str(), rhs.get(r, c).str()};
    }
  }

  void zero(const std::string& name, const GradedMatrix& x) {
    equal(name, x, GradedMatrix(x.grading()));
  }

  void truth(const std::string& name, bool ok, const std::string& lhs = "false",
             const std::string& rhs = "true") {
    if (failed()) return;
    report_.checks.push_back({name, ok});
    if (!ok) report_.failure = Counterexample{name, -1, -1, lhs, rhs};
  }

  VerifyReport finish() {
    report_.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return report_;
  }

 private:
  VerifyReport report_;
  std::chrono::steady_clock::time_point start_;
};

// Element of the algebra realized as a matrix, with its weight and parity.
struct Elt {
  GradedMatrix x;
  Weight w;
  int parity;
};

// ad x o y = xy - (-1)^{[x][y]} q^{(wt x, wt y)} yx
Elt q_adjoint(const BasisSpec& spec, const Elt& x, const Elt& y) {
  LaurentPoly c = spec.ctx.q_pow(bilinear(x.w, y.w)) * LaurentPoly(sign_of(x.parity * y.parity));
  return {x.x * y.x - (y.x * x.x).scaled(c), x.w + y.w, (x.parity + y.parity) % 2};
}

}  // namespace

std::pair<int, int> simple_sigma_pair(const BasisSpec& spec, int r) {
  const SimpleRoot& root = spec.roots.at(static_cast<size_t>(r));
  auto E = [&](int i) { return spec.even_pos(i); };
  auto O = [&](int mu) { return spec.odd_pos(mu); };
  switch (root.kind) {
    case RootKind::I:
      return {E(root.index), E(root.index + 1)};
    case RootKind::L:
      if (spec.m % 2 == 0) return {E(spec.l - 1), spec.bar[static_cast<size_t>(E(spec.l))]};
      return {E(spec.l), E(spec.l + 1)};
    case RootKind::Mu:
      return {O(root.index), O(root.index + 1)};
    case RootKind::S:
      return {O(spec.k), E(1)};
  }
  throw UnsupportedElement("unknown root kind");
}

GradedMatrix hopf_adjoint(const BasisSpec& spec, const Generator& g, bool raising,
                          const GradedMatrix& y) {
  const GradedMatrix& x = raising ? g.e : g.f;
  Rational norm = bilinear(g.root.alpha, g.root.alpha) / 2;
  // S(e) = -q^{-(a,a)/2} e, S(f) = -q^{(a,a)/2} f, S(q^{-h/2}) = q^{h/2}
  LaurentPoly s_coeff = -spec.ctx.q_pow(raising ? Rational(-norm) : norm);
  int sign = sign_of(g.root.parity * y.homogeneous_parity());
  GradedMatrix first = (g.k_half * y * x).scaled(s_coeff * LaurentPoly(sign));
  return first + x * y * g.k_half;
}

VerifyReport check_defining_relations(const BasisSpec& spec) {
  return check_defining_relations(spec, simple_generators(spec));
}

VerifyReport check_defining_relations(const BasisSpec& spec, const std::vector<Generator>& gens) {
  Checker ck("defrel", spec);
  const ScalarContext& ctx = spec.ctx;
  GradedMatrix id = GradedMatrix::identity(spec.grading);
  for (size_t a = 0; a < gens.size(); ++a) {
    const Generator& ga = gens[a];
    const std::string na = ga.root.name;
    ck.equal("k*kinv " + na, ga.k_half * ga.k_half_inv, id);
    if (sgn(bilinear(ga.root.alpha, ga.root.alpha)) == 0) {
      ck.zero("[e,e] " + na, graded_commutator(ga.e, ga.e));
      ck.zero("[f,f] " + na, graded_commutator(ga.f, ga.f));
    }
    for (size_t b = 0; b < gens.size(); ++b) {
      const Generator& gb = gens[b];
      const std::string pair = na + "," + gb.root.name;
      Rational ab = bilinear(ga.root.alpha, gb.root.alpha) / 2;
      ck.equal("k e k^-1 " + pair, ga.k_half * gb.e * ga.k_half_inv, gb.e.scaled(ctx.q_pow(ab)));
      ck.equal("k f k^-1 " + pair, ga.k_half * gb.f * ga.k_half_inv,
               gb.f.scaled(ctx.q_pow(-ab)));
      ck.equal("[k,k] " + pair, ga.k_half * gb.k_half, gb.k_half * ga.k_half);
      GradedMatrix lhs = graded_commutator(ga.e, gb.f).scaled(ctx.q_minus_qinv());
      GradedMatrix rhs(spec.grading);
      if (a == b) {
        GradedMatrix k2 = ga.k_half * ga.k_half;
        GradedMatrix kinv2 = ga.k_half_inv * ga.k_half_inv;
        rhs = k2 - kinv2;
      }
      ck.equal("[e,f] " + pair, lhs, rhs);
      if (a == b) continue;
      Rational power = 1 - spec.cartan[a][b];
      if (power < 1) continue;
      GradedMatrix ye = gb.e, yf = gb.f;
      for (int t = 0; power >= t + 1; ++t) {
        ye = hopf_adjoint(spec, ga, true, ye);
        yf = hopf_adjoint(spec, ga, false, yf);
      }
      ck.zero("serre e " + pair, ye);
      ck.zero("serre f " + pair, yf);
    }
  }
  return ck.finish();
}

VerifyReport check_sigma_consistency(const SigmaTable& table) {
  const BasisSpec& spec = table.spec();
  Checker ck("sigma-consistency", spec);
  const auto N = static_cast<size_t>(spec.dim);
  ck.truth("key count", table.size() == N * (N - 1) / 2, std::to_string(table.size()),
           std::to_string(N * (N - 1) / 2));
  auto gens = simple_generators(spec);
  for (const auto& [key, sigma] : table.entries()) {
    auto [b, a] = key;
    auto ub = static_cast<size_t>(b), ua = static_cast<size_t>(a);
    const std::string tag = "(" + spec.labels[ub] + "," + spec.labels[ua] + ")";
    GradedMatrix closed =
        q_weight_diag(spec, -spec.weights[ua]) * sigma_tilde_closed(spec, b, a);
    ck.equal("closed form " + tag, sigma, closed);
    for (int c : admissible_pivots(spec, b, a))
      ck.equal("pivot " + spec.labels[static_cast<size_t>(c)] + " " + tag,
               sigma_via_pivot(table, b, a, c), sigma);
    auto w = weight_offset(spec, sigma);
    ck.truth("weight " + tag, w && (sigma.is_zero() || *w == spec.weights[ub] - spec.weights[ua]));
    for (const auto& g : gens) {
      const Weight& al = g.root.alpha;
      Weight lo = spec.weights[ua] - al, hi = spec.weights[ub] + al;
      bool blocked = false;
      for (const auto& wt : spec.weights) blocked = blocked || wt == lo || wt == hi;
      if (blocked) continue;
      GradedMatrix ec = raising_operator(g);
      int sign = sign_of((spec.grading[ua] + spec.grading[ub]) * g.root.parity);
      LaurentPoly c1 = spec.ctx.q_pow(bilinear(al, spec.weights[ub]));
      LaurentPoly c2 = spec.ctx.q_pow(-bilinear(al, spec.weights[ua])) * LaurentPoly(sign);
      ck.zero("q-commutation " + g.root.name + " " + tag,
              (sigma * ec).scaled(c1) - (ec * sigma).scaled(c2));
    }
  }
  return ck.finish();
}

VerifyReport check_appendix_relations(const SigmaTable& table) {
  const BasisSpec& spec = table.spec();
  Checker ck("appendix", spec);
  const ScalarContext& ctx = spec.ctx;
  const int N = spec.dim, l = spec.l, k = spec.k;
  auto E = [&](int i) { return spec.even_pos(i); };
  auto O = [&](int mu) { return spec.odd_pos(mu); };
  auto Eb = [&](int i) { return spec.bar[static_cast<size_t>(spec.even_pos(i))]; };
  auto Ob = [&](int mu) { return spec.bar[static_cast<size_t>(spec.odd_pos(mu))]; };
  auto S = [&](int b, int a) -> const GradedMatrix& { return table.at(b, a); };
  auto wt = [&](int p) -> const Weight& { return spec.weights[static_cast<size_t>(p)]; };
  auto pr = [&](int p) { return spec.grading[static_cast<size_t>(p)]; };
  auto q = [&](const Rational& e) { return ctx.q_pow(e); };
  auto lab = [&](int p) { return spec.labels[static_cast<size_t>(p)]; };
  // x y * cx - y x * cy
  auto qcomm = [&](const GradedMatrix& x, const GradedMatrix& y, const LaurentPoly& cx,
                   const LaurentPoly& cy) { return (x * y).scaled(cx) - (y * x).scaled(cy); };
  const LaurentPoly one(1), qinv = q(-1), qq = q(1);

  auto commutation_rows = [&](const std::string& name, const GradedMatrix& X, const Weight& al,
                              int parity, std::initializer_list<int> bad_a,
                              std::initializer_list<int> bad_b) {
    for (int b = 0; b < N; ++b)
      for (int a = b + 1; a < N; ++a) {
        bool skip = false;
        for (int x : bad_a) skip = skip || a == x;
        for (int x : bad_b) skip = skip || b == x;
        if (skip) continue;
        int sign = sign_of((pr(a) + pr(b)) * parity);
        ck.zero(name + " b=" + lab(b) + " a=" + lab(a),
                qcomm(S(b, a), X, q(bilinear(al, wt(b))),
                      q(-bilinear(al, wt(a))) * LaurentPoly(sign)));
      }
  };

  for (int i = 1; i < l; ++i) {
    const std::string I = " i=" + std::to_string(i);
    const Weight al = spec.eps(i) - spec.eps(i + 1);
    const GradedMatrix& X = S(E(i), E(i + 1));
    for (int b = 0; b < E(i); ++b)
      ck.equal("sigma(b,i+1)" + I + " b=" + lab(b), S(b, E(i + 1)),
               qcomm(S(b, E(i)), X, one, qinv));
    for (int a = Eb(i) + 1; a < N; ++a)
      ck.equal("sigma(i+1 bar,a)" + I + " a=" + lab(a), S(Eb(i + 1), a),
               qcomm(S(Eb(i + 1), Eb(i)), S(Eb(i), a), one, qinv));
    for (int b = 0; b < Eb(i + 1); ++b) {
      if (b == E(i + 1)) continue;
      ck.equal("sigma(b,i bar)" + I + " b=" + lab(b), S(b, Eb(i)),
               qcomm(S(b, Eb(i + 1)), S(Eb(i + 1), Eb(i)), q(bilinear(al, wt(b))), qinv));
    }
    for (int a = E(i + 1) + 1; a < N; ++a) {
      if (a == Eb(i + 1)) continue;
      ck.equal("sigma(i,a)" + I + " a=" + lab(a), S(E(i), a),
               qcomm(X, S(E(i + 1), a), q(-bilinear(al, wt(a))), qinv));
    }
    ck.equal("sigma(i+1,i bar) + sigma(i,i+1 bar)" + I, S(E(i + 1), Eb(i)) + S(E(i), Eb(i + 1)),
             graded_commutator(X, S(E(i + 1), Eb(i + 1))).scaled(qinv));
    commutation_rows("q-commutation alpha_i" + I, X, al, 0, {E(i), Eb(i + 1)},
                     {E(i + 1), Eb(i)});
  }

  for (int mu = 1; mu < k; ++mu) {
    const std::string M = " mu=" + std::to_string(mu);
    const Weight al = spec.delta(mu) - spec.delta(mu + 1);
    const GradedMatrix& X = S(O(mu), O(mu + 1));
    for (int nu = 1; nu < mu; ++nu) {
      const std::string NM = M + " nu=" + std::to_string(nu);
      ck.equal("sigma(nu,mu+1)" + NM, S(O(nu), O(mu + 1)), qcomm(S(O(nu), O(mu)), X, one, qq));
      ck.equal("sigma(mu+1 bar,nu bar)" + NM, S(Ob(mu + 1), Ob(nu)),
               qcomm(S(Ob(mu + 1), Ob(mu)), S(Ob(mu), Ob(nu)), one, qq));
    }
    for (int b = 0; b < Ob(mu + 1); ++b) {
      if (b == O(mu + 1)) continue;
      ck.equal("sigma(b,mu bar)" + M + " b=" + lab(b), S(b, Ob(mu)),
               qcomm(S(b, Ob(mu + 1)), S(Ob(mu + 1), Ob(mu)), q(bilinear(al, wt(b))), qq));
    }
    for (int a = O(mu + 1) + 1; a < N; ++a) {
      if (a == Ob(mu + 1)) continue;
      ck.equal("sigma(mu,a)" + M + " a=" + lab(a), S(O(mu), a),
               qcomm(X, S(O(mu + 1), a), q(-bilinear(al, wt(a))), qq));
    }
    ck.equal("sigma(mu+1,mu bar) - sigma(mu,mu+1 bar)" + M,
             S(O(mu + 1), Ob(mu)) - S(O(mu), Ob(mu + 1)),
             graded_commutator(S(O(mu + 1), Ob(mu + 1)), X).scaled(qq));
    commutation_rows("q-commutation alpha_mu" + M, X, al, 0, {O(mu), Ob(mu + 1)},
                     {O(mu + 1), Ob(mu)});
  }

  {
    const Weight al = spec.delta(k) - spec.eps(1);
    const GradedMatrix& X = S(O(k), E(1));
    for (int nu = 1; nu < k; ++nu) {
      const std::string NU = " nu=" + std::to_string(nu);
      ck.equal("sigma(nu,1)" + NU, S(O(nu), E(1)), qcomm(S(O(nu), O(k)), X, one, qq));
      ck.equal("sigma(1 bar,nu bar)" + NU, S(Eb(1), Ob(nu)),
               qcomm(S(Eb(1), Ob(k)), S(Ob(k), Ob(nu)), one, qq));
    }
    for (int a = E(1) + 1; a < N; ++a) {
      if (a == Eb(1)) continue;
      ck.equal("sigma(k,a) a=" + lab(a), S(O(k), a),
               qcomm(X, S(E(1), a), q(-bilinear(al, wt(a))), qinv * LaurentPoly(sign_of(pr(a)))));
    }
    for (int b = 0; b < Eb(1); ++b) {
      if (b == E(1)) continue;
      ck.equal("sigma(b,k bar) b=" + lab(b), S(b, Ob(k)),
               qcomm(S(b, Eb(1)), S(Eb(1), Ob(k)), q(bilinear(al, wt(b))),
                     qinv * LaurentPoly(sign_of(pr(b)))));
    }
    ck.equal("sigma(k,1 bar) - (-1)^k q sigma(1,k bar)",
             S(O(k), Eb(1)) - S(E(1), Ob(k)).scaled(qq * LaurentPoly(sign_of(k))),
             graded_commutator(X, S(E(1), Eb(1))).scaled(qinv));
    commutation_rows("q-commutation alpha_s", X, al, 1, {O(k), Eb(1)}, {E(1), Ob(k)});
  }

  if (spec.m % 2 == 0) {
    const Weight al = spec.eps(l - 1) + spec.eps(l);
    const GradedMatrix& X = S(E(l - 1), Eb(l));
    for (int b = 0; b < E(l); ++b)
      ck.equal("sigma(b,l-1 bar) b=" + lab(b), S(b, Eb(l - 1)),
               qcomm(S(b, E(l)), S(E(l), Eb(l - 1)), q(bilinear(al, wt(b))), qinv));
    for (int b = 0; b < E(l - 1); ++b)
      ck.equal("sigma(b,l bar) b=" + lab(b), S(b, Eb(l)), qcomm(S(b, E(l - 1)), X, one, qinv));
    for (int a = Eb(l - 1) + 1; a < N; ++a)
      ck.equal("sigma(l,a) a=" + lab(a), S(E(l), a),
               qcomm(S(E(l), Eb(l - 1)), S(Eb(l - 1), a), one, qinv));
    for (int a = Eb(l) + 1; a < N; ++a)
      ck.equal("sigma(l-1,a) a=" + lab(a), S(E(l - 1), a),
               qcomm(X, S(Eb(l), a), q(-bilinear(al, wt(a))), qinv));
    commutation_rows("q-commutation alpha_l", X, al, 0, {E(l), E(l - 1)}, {Eb(l - 1), Eb(l)});
    ck.zero("sigma(l,l bar) = 0", S(E(l), Eb(l)));
    ck.equal("sigma(l-1,l bar) + sigma(l,l-1 bar)", S(E(l - 1), Eb(l)) + S(E(l), Eb(l - 1)),
             graded_commutator(S(E(l - 1), E(l)), S(E(l), Eb(l))).scaled(qinv));
  } else {
    const Weight al = spec.eps(l);
    const GradedMatrix& X = S(E(l), E(l + 1));
    for (int b = 0; b < E(l); ++b)
      ck.equal("sigma(b,l+1) b=" + lab(b), S(b, E(l + 1)), qcomm(S(b, E(l)), X, one, qinv));
    for (int b = 0; b < E(l + 1); ++b)
      ck.equal("sigma(b,l bar) b=" + lab(b), S(b, Eb(l)),
               qcomm(S(b, E(l + 1)), S(E(l + 1), Eb(l)), q(bilinear(al, wt(b))), one));
    for (int a = E(l + 1) + 1; a < N; ++a)
      ck.equal("sigma(l,a) a=" + lab(a), S(E(l), a),
               qcomm(X, S(E(l + 1), a), q(-bilinear(al, wt(a))), one));
    for (int a = Eb(l) + 1; a < N; ++a)
      ck.equal("sigma(l+1,a) a=" + lab(a), S(E(l + 1), a),
               qcomm(S(E(l + 1), Eb(l)), S(Eb(l), a), one, qinv));
    commutation_rows("q-commutation alpha_l", X, al, 0, {E(l), E(l + 1)}, {E(l + 1), Eb(l)});
  }
  return ck.finish();
}

VerifyReport check_ybe(const BasisSpec& spec, const GradedMatrix& R) {
  Checker ck("ybe", spec);
  GradedMatrix r12 = embed_three(R, spec.grading, Slot::S12);
  GradedMatrix r13 = embed_three(R, spec.grading, Slot::S13);
  GradedMatrix r23 = embed_three(R, spec.grading, Slot::S23);
  ck.equal("R13 conjugation agreement", r13, embed_13_alt(R, spec.grading));
  ck.equal("R12 R13 R23 = R23 R13 R12", r12 * r13 * r23, r23 * r13 * r12);
  return ck.finish();
}

VerifyReport check_intertwining(const BasisSpec& spec, const GradedMatrix& R) {
  Checker ck("intertwine", spec);
  auto gens = simple_generators(spec);
  const std::pair<GenKind, const char*> kinds[] = {
      {GenKind::E, "e"}, {GenKind::F, "f"}, {GenKind::KHalf, "q^(h/2)"},
      {GenKind::KHalfInv, "q^(-h/2)"}};
  for (int r = 0; r < static_cast<int>(gens.size()); ++r)
    for (const auto& [kind, name] : kinds) {
      GenRef g{r, kind};
      ck.equal(std::string("R Delta = Delta^T R for ") + name + " " + gens[static_cast<size_t>(r)].root.name,
               R * coproduct_pair(spec, gens, g, false), coproduct_pair(spec, gens, g, true) * R);
    }
  return ck.finish();
}

VerifyReport check_coproduct_property(const SigmaTable& table, const GradedMatrix& R) {
  const BasisSpec& spec = table.spec();
  Checker ck("coproduct", spec);
  const auto& g = spec.grading;
  const auto& w = spec.weights;
  GradedMatrix id = GradedMatrix::identity(g);
  LaurentPoly qq = spec.ctx.q_minus_qinv();
  GradedMatrix lhs(kron_grading(g, kron_grading(g, g)));
  for (int a = 0; a < spec.dim; ++a) {
    GradedMatrix D = q_weight_diag(spec, w[static_cast<size_t>(a)]);
    lhs += graded_kron(unit_matrix(spec, a, a), graded_kron(D, D));
  }
  for (const auto& [key, sigma] : table.entries()) {
    auto [b, a] = key;
    auto ua = static_cast<size_t>(a), ub = static_cast<size_t>(b);
    GradedMatrix delta = graded_kron(sigma, id) +
                         graded_kron(q_weight_diag(spec, w[ub] - w[ua]), sigma);
    for (int c = b + 1; c < a; ++c) {
      auto uc = static_cast<size_t>(c);
      GradedMatrix term = graded_kron(q_weight_diag(spec, w[uc] - w[ua]) * table.at(b, c),
                                      table.at(c, a));
      delta += term.scaled(qq * LaurentPoly(sign_of(g[uc])));
    }
    GradedMatrix D = q_weight_diag(spec, w[ua]);
    GradedMatrix second = graded_kron(D, D) * delta;
    lhs += graded_kron(unit_matrix(spec, a, b), second).scaled(qq * LaurentPoly(sign_of(g[ub])));
  }
  GradedMatrix rhs = embed_three(R, g, Slot::S13) * embed_three(R, g, Slot::S12);
  ck.equal("(id x Delta) R = R13 R12", lhs, rhs);
  return ck.finish();
}

VerifyReport check_opposite(const BasisSpec& spec, const GradedMatrix& R) {
  Checker ck("opposite", spec);
  GradedMatrix rt = assemble_RT(spec);
  ck.equal("R^T = dagger(R)", rt, tensor_dagger(R, spec.grading));
  GradedMatrix p = super_flip(spec.grading);
  ck.equal("R^T = P R P", rt, p * R * p);
  return ck.finish();
}

VerifyReport check_serre(const SigmaTable& table) {
  const BasisSpec& spec = table.spec();
  Checker ck("serre", spec);
  auto simple = [&](int r) {
    auto [b, a] = simple_sigma_pair(spec, r);
    return Elt{table.at(b, a), spec.roots[static_cast<size_t>(r)].alpha,
               spec.roots[static_cast<size_t>(r)].parity};
  };
  const int nr = static_cast<int>(spec.roots.size());
  for (int b = 0; b < nr; ++b)
    for (int c = 0; c < nr; ++c) {
      if (b == c) continue;
      Rational power = 1 - spec.cartan[static_cast<size_t>(b)][static_cast<size_t>(c)];
      if (power < 1) continue;
      Elt x = simple(b), y = simple(c);
      for (int t = 0; power >= t + 1; ++t) y = q_adjoint(spec, x, y);
      ck.zero("(ad " + spec.roots[static_cast<size_t>(b)].name + ")^" + rational_str(power) + " " +
                  spec.roots[static_cast<size_t>(c)].name,
              y.x);
    }
  if (spec.k >= 2 && spec.l >= 2) {
    Elt s = simple(spec.root_index("s"));
    Elt t = simple(spec.root_index("mu" + std::to_string(spec.k - 1)));
    Elt u = simple(spec.root_index("i1"));
    ck.zero("extra serre [s,[mu,[s,i]]]", q_adjoint(spec, s, q_adjoint(spec, t, q_adjoint(spec, s, u))).x);
    ck.zero("extra serre [s,[i,[s,mu]]]", q_adjoint(spec, s, q_adjoint(spec, u, q_adjoint(spec, s, t))).x);
  }
  return ck.finish();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "ybe", "intertwine", "coproduct", "serre", "defrel", "appendix", "sigma-consistency",
      "opposite"};
  return names;
}

VerifyReport run_suite(const std::string& name, const BasisSpec& spec) {
  if (name == "defrel") return check_defining_relations(spec);
  if (name == "ybe") return check_ybe(spec, assemble_R(spec));
  if (name == "intertwine") return check_intertwining(spec, assemble_R(spec));
  if (name == "opposite") return check_opposite(spec, assemble_R(spec));
  SigmaTable table = build_sigma_table(spec);
  if (name == "sigma-consistency") return check_sigma_consistency(table);
  if (name == "appendix") return check_appendix_relations(table);
  if (name == "serre") return check_serre(table);
  if (name == "coproduct") return check_coproduct_property(table, assemble_R(spec));
  throw UnsupportedElement("unknown verification suite '" + name + "'");
}

}  // namespace qosp
