#include "qosp/gtensor.hpp"

#include "qosp/errors.hpp"

namespace qosp {

namespace {

int sign_of(int e) { return e % 2 == 0 ? 1 : -1; }

LaurentPoly signed_value(int sign, const LaurentPoly& v) { return sign < 0 ? -v : v; }

}  // namespace

std::vector<int> kron_grading(const std::vector<int>& g1, const std::vector<int>& g2) {
  std::vector<int> g;
  g.reserve(g1.size() * g2.size());
  for (int a : g1)
    for (int c : g2) g.push_back((a + c) % 2);
  return g;
}

GradedMatrix graded_kron(const GradedMatrix& x, const GradedMatrix& y) {
  GradedMatrix out(kron_grading(x.grading(), y.grading()));
  const int ny = y.dim();
  const auto& gx = x.grading();
  const auto& gy = y.grading();
  for (int a = 0; a < x.dim(); ++a)
    for (int c = 0; c < ny; ++c) {
      auto& row = out.mutable_row(a * ny + c);
      for (const auto& [b, xv] : x.row(a)) {
        int s = sign_of(gy[static_cast<size_t>(c)] *
                        (gx[static_cast<size_t>(a)] + gx[static_cast<size_t>(b)]));
        for (const auto& [d, yv] : y.row(c)) row.emplace_back(b * ny + d, signed_value(s, xv * yv));
      }
    }
  return out;
}

GradedMatrix super_flip(const std::vector<int>& grading) {
  const int n = static_cast<int>(grading.size());
  GradedMatrix p(kron_grading(grading, grading));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int s = sign_of(grading[static_cast<size_t>(a)] * grading[static_cast<size_t>(b)]);
      p.set(a * n + b, b * n + a, LaurentPoly(s));
    }
  return p;
}

GradedMatrix embed_three(const GradedMatrix& x, const std::vector<int>& site, Slot slot) {
  GradedMatrix id = GradedMatrix::identity(site);
  switch (slot) {
    case Slot::S12:
      return graded_kron(x, id);
    case Slot::S23:
      return graded_kron(id, x);
    case Slot::S13: {
      GradedMatrix p23 = graded_kron(id, super_flip(site));
      return p23 * graded_kron(x, id) * p23;
    }
  }
  throw UnsupportedElement("unknown slot");
}

GradedMatrix embed_13_alt(const GradedMatrix& x, const std::vector<int>& site) {
  GradedMatrix p12 = graded_kron(super_flip(site), GradedMatrix::identity(site));
  return p12 * graded_kron(GradedMatrix::identity(site), x) * p12;
}

GradedMatrix partial_supertrace_first(const GradedMatrix& x, const std::vector<int>& site) {
  const int n = static_cast<int>(site.size());
  if (x.dim() != n * n) throw DimensionMismatch("partial trace needs an operator on V (x) V");
  GradedMatrix out(site);
  for (int a = 0; a < n; ++a) {
    int s = sign_of(site[static_cast<size_t>(a)]);
    for (int c = 0; c < n; ++c)
      for (const auto& [col, v] : x.row(a * n + c))
        if (col / n == a) out.add(c, col % n, signed_value(s, v));
  }
  return out;
}

LaurentPoly supertrace(const GradedMatrix& x) {
  LaurentPoly sum;
  for (int a = 0; a < x.dim(); ++a) {
    LaurentPoly v = x.get(a, a);
    sum += x.grading()[static_cast<size_t>(a)] == 1 ? -v : v;
  }
  return sum;
}

namespace {

GradedMatrix diagonal_part(const BasisSpec& spec) {
  GradedMatrix out(kron_grading(spec.grading, spec.grading));
  for (int a = 0; a < spec.dim; ++a)
    out += graded_kron(unit_matrix(spec, a, a),
                       q_weight_diag(spec, spec.weights[static_cast<size_t>(a)]));
  return out;
}

}  // namespace

GradedMatrix assemble_R(const BasisSpec& spec) {
  GradedMatrix r = diagonal_part(spec);
  LaurentPoly qq = spec.ctx.q_minus_qinv();
  for (int b = 0; b < spec.dim; ++b)
    for (int a = b + 1; a < spec.dim; ++a) {
      LaurentPoly c = signed_value(sign_of(spec.grading[static_cast<size_t>(b)]), qq);
      r += graded_kron(unit_matrix(spec, a, b), sigma_tilde_closed(spec, b, a)).scaled(c);
    }
  return r;
}

GradedMatrix assemble_R_from_table(const SigmaTable& table) {
  const BasisSpec& spec = table.spec();
  GradedMatrix r = diagonal_part(spec);
  LaurentPoly qq = spec.ctx.q_minus_qinv();
  for (const auto& [key, sigma] : table.entries()) {
    auto [b, a] = key;
    LaurentPoly c = signed_value(sign_of(spec.grading[static_cast<size_t>(b)]), qq);
    GradedMatrix second = q_weight_diag(spec, spec.weights[static_cast<size_t>(a)]) * sigma;
    r += graded_kron(unit_matrix(spec, a, b), second).scaled(c);
  }
  return r;
}

GradedMatrix assemble_RT(const BasisSpec& spec) {
  GradedMatrix r = diagonal_part(spec);
  LaurentPoly qq = spec.ctx.q_minus_qinv();
  for (int b = 0; b < spec.dim; ++b)
    for (int a = b + 1; a < spec.dim; ++a) {
      LaurentPoly c = signed_value(sign_of(spec.grading[static_cast<size_t>(a)]), qq);
      r += graded_kron(unit_matrix(spec, b, a), sigma_tilde_opposite_closed(spec, b, a)).scaled(c);
    }
  return r;
}

GradedMatrix tensor_dagger(const GradedMatrix& x, const std::vector<int>& site) {
  const int n = static_cast<int>(site.size());
  if (x.dim() != n * n) throw DimensionMismatch("tensor dagger needs an operator on V (x) V");
  GradedMatrix out(x.grading());
  auto g = [&](int i) { return site[static_cast<size_t>(i)]; };
  for (int row = 0; row < x.dim(); ++row)
    for (const auto& [col, v] : x.row(row)) {
      int a = row / n, c = row % n, b = col / n, d = col % n;
      int e = g(c) * (g(a) + g(b)) + g(a) * (g(a) + g(b)) + g(c) * (g(c) + g(d)) +
              g(d) * (g(a) + g(b));
      out.set(col, row, signed_value(sign_of(e), v));
    }
  return out;
}

const GradedMatrix& generator_matrix(const std::vector<Generator>& gens, GenRef g) {
  if (g.root < 0 || g.root >= static_cast<int>(gens.size()))
    throw UnsupportedElement("generator root index out of range");
  const Generator& gen = gens[static_cast<size_t>(g.root)];
  switch (g.kind) {
    case GenKind::E:
      return gen.e;
    case GenKind::F:
      return gen.f;
    case GenKind::KHalf:
      return gen.k_half;
    case GenKind::KHalfInv:
      return gen.k_half_inv;
  }
  throw UnsupportedElement("unknown generator kind");
}

GradedMatrix coproduct_pair(const BasisSpec& spec, const std::vector<Generator>& gens, GenRef g,
                            bool twisted) {
  const GradedMatrix& x = generator_matrix(gens, g);
  const Generator& gen = gens[static_cast<size_t>(g.root)];
  GradedMatrix d;
  if (g.kind == GenKind::E || g.kind == GenKind::F)
    d = graded_kron(gen.k_half, x) + graded_kron(x, gen.k_half_inv);
  else
    d = graded_kron(x, x);
  if (!twisted) return d;
  GradedMatrix p = super_flip(spec.grading);
  return p * d * p;
}

}  // namespace qosp
