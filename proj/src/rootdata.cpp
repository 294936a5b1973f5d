#include "qosp/rootdata.hpp"

#include "qosp/errors.hpp"

namespace qosp {

bool Weight::is_zero() const {
  for (const auto& x : c)
    if (sgn(x) != 0) return false;
  return true;
}

namespace {

void check_same(const Weight& u, const Weight& v) {
  if (u.l != v.l || u.c.size() != v.c.size())
    throw DimensionMismatch("weights over different root spaces");
}

}  // namespace

Weight Weight::operator+(const Weight& o) const {
  check_same(*this, o);
  Weight r = *this;
  for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

Weight Weight::operator-() const { return *this * Rational(-1); }

Weight Weight::operator*(const Rational& f) const {
  Weight r = *this;
  for (auto& x : r.c) x *= f;
  return r;
}

Rational bilinear(const Weight& u, const Weight& v) {
  check_same(u, v);
  Rational sum = 0;
  for (size_t i = 0; i < u.c.size(); ++i) {
    if (static_cast<int>(i) < u.l)
      sum += u.c[i] * v.c[i];
    else
      sum -= u.c[i] * v.c[i];
  }
  return sum;
}

Weight BasisSpec::eps(int i) const {
  Weight w = zero_weight();
  w.eps(i) = 1;
  return w;
}

Weight BasisSpec::delta(int mu) const {
  Weight w = zero_weight();
  w.delta(mu) = 1;
  return w;
}

int BasisSpec::pos_of_label(const std::string& label) const {
  for (int p = 0; p < dim; ++p)
    if (labels[static_cast<size_t>(p)] == label) return p;
  throw InvalidPair("unknown index label '" + label + "'");
}

int BasisSpec::root_index(const std::string& name) const {
  for (size_t r = 0; r < roots.size(); ++r)
    if (roots[r].name == name) return static_cast<int>(r);
  throw UnsupportedElement("unknown simple root '" + name + "'");
}

Weight rho_weight(const BasisSpec& spec) {
  Weight rho = spec.zero_weight();
  for (int i = 1; i <= spec.l; ++i) rho.eps(i) = frac(spec.m - 2 * i, 2);
  for (int mu = 1; mu <= spec.k; ++mu) rho.delta(mu) = frac(spec.n - spec.m + 2 - 2 * mu, 2);
  return rho;
}

BasisSpec build_basis(int m, int n, ScalarContext ctx) {
  if (m <= 2 || n < 2 || n % 2 != 0)
    throw InvalidRank("osp(" + std::to_string(m) + "|" + std::to_string(n) +
                      ") requires m > 2 and n even with n >= 2");
  BasisSpec s;
  s.m = m;
  s.n = n;
  s.l = m / 2;
  s.k = n / 2;
  s.dim = m + n;
  s.ctx = std::move(ctx);
  const auto N = static_cast<size_t>(s.dim);
  s.labels.resize(N);
  s.grading.assign(N, 0);
  s.bar.resize(N);
  s.xi.assign(N, 1);
  s.weights.assign(N, s.zero_weight());

  for (int mu = 1; mu <= n; ++mu) {
    auto p = static_cast<size_t>(s.odd_pos(mu));
    s.grading[p] = 1;
    s.xi[p] = mu % 2 == 0 ? 1 : -1;
    if (mu <= s.k) {
      s.labels[p] = "d" + std::to_string(mu);
      s.weights[p] = s.delta(mu);
    } else {
      s.labels[p] = "-d" + std::to_string(n + 1 - mu);
      s.weights[p] = -s.delta(n + 1 - mu);
    }
  }
  for (int a = 1; a <= m; ++a) {
    auto p = static_cast<size_t>(s.even_pos(a));
    if (a <= s.l) {
      s.labels[p] = "e" + std::to_string(a);
      s.weights[p] = s.eps(a);
    } else if (a > m - s.l) {
      s.labels[p] = "-e" + std::to_string(m + 1 - a);
      s.weights[p] = -s.eps(m + 1 - a);
    } else {
      s.labels[p] = "0";
    }
  }
  for (size_t p = 0; p < N; ++p) s.bar[p] = static_cast<int>(N - 1 - p);
  s.rho = rho_weight(s);

  for (int i = 1; i < s.l; ++i)
    s.roots.push_back({RootKind::I, i, "i" + std::to_string(i), s.eps(i) - s.eps(i + 1), 0});
  if (m % 2 == 0)
    s.roots.push_back({RootKind::L, 0, "l", s.eps(s.l - 1) + s.eps(s.l), 0});
  else
    s.roots.push_back({RootKind::L, 0, "l", s.eps(s.l), 0});
  for (int mu = 1; mu < s.k; ++mu)
    s.roots.push_back(
        {RootKind::Mu, mu, "mu" + std::to_string(mu), s.delta(mu) - s.delta(mu + 1), 0});
  s.roots.push_back({RootKind::S, 0, "s", s.delta(s.k) - s.eps(1), 1});

  for (const auto& b : s.roots) {
    std::vector<Rational> row;
    Rational bb = bilinear(b.alpha, b.alpha);
    for (const auto& c : s.roots) {
      Rational bc = bilinear(b.alpha, c.alpha);
      row.push_back(sgn(bb) == 0 ? bc : Rational(2 * bc / bb));
    }
    s.cartan.push_back(std::move(row));
  }
  return s;
}

Order weight_order(const BasisSpec& spec, int a, int b) {
  if (a < 0 || b < 0 || a >= spec.dim || b >= spec.dim)
    throw InvalidPair("index out of range");
  // Positions are laid out in strictly descending weight.
  if (a == b) return Order::Equal;
  return a < b ? Order::Greater : Order::Less;
}

Rational c_lambda0(const BasisSpec& spec) {
  Weight d1 = spec.delta(1);
  return bilinear(d1, d1 + spec.rho * 2);
}

}  // namespace qosp
