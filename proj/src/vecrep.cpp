#include "qosp/vecrep.hpp"

#include "qosp/errors.hpp"

namespace qosp {

namespace {

int par(const BasisSpec& s, int p) { return s.grading[static_cast<size_t>(p)]; }

}  // namespace

GradedMatrix unit_matrix(const BasisSpec& spec, int a, int b) {
  return GradedMatrix::unit(spec.grading, a, b);
}

GradedMatrix cartan_weyl(const BasisSpec& spec, int a, int b) {
  if (a < 0 || b < 0 || a >= spec.dim || b >= spec.dim) throw InvalidPair("index out of range");
  int sign = (par(spec, a) * (par(spec, a) + par(spec, b))) % 2 == 0 ? 1 : -1;
  sign *= spec.xi[static_cast<size_t>(a)] * spec.xi[static_cast<size_t>(b)];
  GradedMatrix m = unit_matrix(spec, a, b);
  m.add(spec.bar[static_cast<size_t>(b)], spec.bar[static_cast<size_t>(a)], LaurentPoly(-sign));
  return m;
}

GradedMatrix q_weight_diag(const BasisSpec& spec, const Weight& w) {
  std::vector<LaurentPoly> d;
  d.reserve(static_cast<size_t>(spec.dim));
  for (const auto& wa : spec.weights) d.push_back(spec.ctx.q_pow(bilinear(w, wa)));
  return GradedMatrix::diagonal(spec.grading, d);
}

std::vector<Generator> simple_generators(const BasisSpec& spec) {
  std::vector<Generator> gens;
  auto E = [&](int i) { return spec.even_pos(i); };
  auto O = [&](int mu) { return spec.odd_pos(mu); };
  auto bar = [&](int p) { return spec.bar[static_cast<size_t>(p)]; };
  for (const auto& root : spec.roots) {
    int a = 0, b = 0, sign_f = 1;
    switch (root.kind) {
      case RootKind::I:
        a = E(root.index);
        b = E(root.index + 1);
        break;
      case RootKind::L:
        if (spec.m % 2 == 0) {
          a = E(spec.l - 1);
          b = bar(E(spec.l));
        } else {
          a = E(spec.l);
          b = E(spec.l + 1);
        }
        break;
      case RootKind::Mu:
        a = O(root.index);
        b = O(root.index + 1);
        sign_f = -1;
        break;
      case RootKind::S:
        a = O(spec.k);
        b = E(1);
        sign_f = -1;
        break;
    }
    Generator g{root, cartan_weyl(spec, a, b), cartan_weyl(spec, b, a),
                q_weight_diag(spec, root.alpha * Rational(1, 2)),
                q_weight_diag(spec, root.alpha * Rational(-1, 2))};
    if (sign_f < 0) g.f = -g.f;
    gens.push_back(std::move(g));
  }
  return gens;
}

GradedMatrix graded_commutator(const GradedMatrix& x, const GradedMatrix& y) {
  int px = x.homogeneous_parity();
  int py = y.homogeneous_parity();
  if (px * py == 1) return x * y + y * x;
  return x * y - y * x;
}

std::optional<Weight> weight_offset(const BasisSpec& spec, const GradedMatrix& x) {
  std::optional<Weight> w;
  for (int r = 0; r < x.dim(); ++r)
    for (const auto& entry : x.row(r)) {
      Weight d = spec.weights[static_cast<size_t>(r)] - spec.weights[static_cast<size_t>(entry.first)];
      if (w && !(*w == d)) return std::nullopt;
      w = d;
    }
  return w ? w : std::optional<Weight>(spec.zero_weight());
}

}  // namespace qosp
