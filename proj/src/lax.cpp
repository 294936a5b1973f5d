#include "qosp/lax.hpp"

#include "qosp/errors.hpp"

namespace qosp {

namespace {

int par(const BasisSpec& s, int p) { return s.grading[static_cast<size_t>(p)]; }

int sign_of(int e) { return e % 2 == 0 ? 1 : -1; }

void check_pair(const BasisSpec& spec, int b, int a) {
  if (b < 0 || a < 0 || b >= spec.dim || a >= spec.dim || b >= a)
    throw InvalidPair("pair (" + std::to_string(b) + "," + std::to_string(a) +
                      ") does not satisfy eps_b > eps_a");
}

const Generator& gen_of(const std::vector<Generator>& gens, RootKind kind, int index) {
  for (const auto& g : gens)
    if (g.root.kind == kind && g.root.index == index) return g;
  throw MissingPrerequisite("simple generator not found");
}

}  // namespace

const GradedMatrix& SigmaTable::at(int b, int a) const {
  auto it = entries_.find({b, a});
  if (it == entries_.end())
    throw MissingPrerequisite("sigma(" + spec_.labels[static_cast<size_t>(b)] + "," +
                              spec_.labels[static_cast<size_t>(a)] + ") not in table");
  return it->second;
}

void SigmaTable::put(int b, int a, GradedMatrix x) {
  check_pair(spec_, b, a);
  entries_[{b, a}] = std::move(x);
}

GradedMatrix raising_operator(const Generator& g) { return g.e * g.k_half; }

SigmaTable seed_sigma_table(const BasisSpec& spec, const std::vector<Generator>& gens) {
  SigmaTable t(spec);
  const ScalarContext& ctx = spec.ctx;
  auto E = [&](int i) { return spec.even_pos(i); };
  auto O = [&](int mu) { return spec.odd_pos(mu); };
  auto bar = [&](int p) { return spec.bar[static_cast<size_t>(p)]; };
  const LaurentPoly half = ctx.s_pow(1);
  const LaurentPoly mhalf = ctx.s_pow(-1);

  for (int i = 1; i < spec.l; ++i) {
    GradedMatrix x = raising_operator(gen_of(gens, RootKind::I, i)).scaled(half);
    t.put(E(i), E(i + 1), x);
    t.put(bar(E(i + 1)), bar(E(i)), -x);
  }
  GradedMatrix el = raising_operator(gen_of(gens, RootKind::L, 0));
  if (spec.m % 2 == 0) {
    GradedMatrix x = el.scaled(half);
    t.put(E(spec.l - 1), bar(E(spec.l)), x);
    t.put(E(spec.l), bar(E(spec.l - 1)), -x);
    t.put(E(spec.l), bar(E(spec.l)), GradedMatrix(spec.grading));
  } else {
    t.put(E(spec.l), E(spec.l + 1), el);
    t.put(E(spec.l + 1), bar(E(spec.l)), -el.scaled(half));
  }
  for (int mu = 1; mu < spec.k; ++mu) {
    GradedMatrix x = raising_operator(gen_of(gens, RootKind::Mu, mu)).scaled(mhalf);
    t.put(O(mu), O(mu + 1), x);
    t.put(bar(O(mu + 1)), bar(O(mu)), x);
  }
  GradedMatrix es = raising_operator(gen_of(gens, RootKind::S, 0));
  t.put(O(spec.k), E(1), es.scaled(half));
  t.put(bar(E(1)), bar(O(spec.k)), es.scaled(mhalf * LaurentPoly(sign_of(spec.k))));
  return t;
}

std::vector<int> admissible_pivots(const BasisSpec& spec, int b, int a) {
  check_pair(spec, b, a);
  std::vector<int> out;
  for (int c = b + 1; c < a; ++c)
    if (c != spec.bar[static_cast<size_t>(b)] && c != spec.bar[static_cast<size_t>(a)])
      out.push_back(c);
  return out;
}

GradedMatrix sigma_via_pivot(const SigmaTable& table, int b, int a, int c) {
  const BasisSpec& spec = table.spec();
  const auto& w = spec.weights;
  const GradedMatrix& bc = table.at(b, c);
  const GradedMatrix& ca = table.at(c, a);
  auto ub = static_cast<size_t>(b), ua = static_cast<size_t>(a), uc = static_cast<size_t>(c);
  LaurentPoly c1 = spec.ctx.q_pow(-bilinear(w[ub], w[ua]));
  int sign = sign_of((par(spec, b) + par(spec, c)) * (par(spec, a) + par(spec, c)));
  LaurentPoly c2 = spec.ctx.q_pow(-bilinear(w[uc], w[uc])) * LaurentPoly(sign);
  return (bc * ca).scaled(c1) - (ca * bc).scaled(c2);
}

SigmaTable extend_sigma_table(SigmaTable table) {
  const BasisSpec& spec = table.spec();
  for (int gap = 1; gap < spec.dim; ++gap) {
    for (int b = 0; b + gap < spec.dim; ++b) {
      int a = b + gap;
      if (table.contains(b, a)) continue;
      bool done = false;
      for (int c : admissible_pivots(spec, b, a)) {
        if (!table.contains(b, c) || !table.contains(c, a)) continue;
        table.put(b, a, sigma_via_pivot(table, b, a, c));
        done = true;
        break;
      }
      if (!done)
        throw MissingPrerequisite("no pivot available for (" + spec.labels[static_cast<size_t>(b)] +
                                  "," + spec.labels[static_cast<size_t>(a)] + ")");
    }
  }
  return table;
}

SigmaTable build_sigma_table(const BasisSpec& spec) {
  return extend_sigma_table(seed_sigma_table(spec, simple_generators(spec)));
}

GradedMatrix sigma_tilde_closed(const BasisSpec& spec, int b, int a) {
  check_pair(spec, b, a);
  auto ub = static_cast<size_t>(b), ua = static_cast<size_t>(a);
  int sign = sign_of(par(spec, b) * (par(spec, a) + par(spec, b))) * spec.xi[ua] * spec.xi[ub];
  LaurentPoly coeff =
      spec.ctx.q_pow(bilinear(spec.rho, spec.weights[ua] - spec.weights[ub])) * LaurentPoly(-sign);
  GradedMatrix m = unit_matrix(spec, b, a);
  m.add(spec.bar[ua], spec.bar[ub], coeff);
  return m;
}

GradedMatrix sigma_tilde_opposite_closed(const BasisSpec& spec, int b, int a) {
  check_pair(spec, b, a);
  auto ub = static_cast<size_t>(b), ua = static_cast<size_t>(a);
  int sign = sign_of(par(spec, a) * (par(spec, a) + par(spec, b))) * spec.xi[ua] * spec.xi[ub];
  LaurentPoly coeff =
      spec.ctx.q_pow(bilinear(spec.rho, spec.weights[ua] - spec.weights[ub])) * LaurentPoly(-sign);
  GradedMatrix m = unit_matrix(spec, a, b);
  m.add(spec.bar[ub], spec.bar[ua], coeff);
  return m;
}

GradedMatrix graded_dagger(const GradedMatrix& x) {
  const auto& g = x.grading();
  GradedMatrix out(g);
  for (int r = 0; r < x.dim(); ++r)
    for (const auto& [c, v] : x.row(r)) {
      int gr = g[static_cast<size_t>(r)], gc = g[static_cast<size_t>(c)];
      out.set(c, r, sign_of(gr * (gr + gc)) < 0 ? -v : v);
    }
  return out;
}

}  // namespace qosp
