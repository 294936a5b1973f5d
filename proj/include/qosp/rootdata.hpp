#pragma once

#include <string>
#include <vector>

#include "qosp/qring.hpp"

namespace qosp {

/// Weight over the basis (eps_1..eps_l, delta_1..delta_k).
struct Weight {
  int l = 0;
  std::vector<Rational> c;

  Weight() = default;
  Weight(int l_, int k_) : l(l_), c(static_cast<size_t>(l_ + k_)) {}

  int k() const { return static_cast<int>(c.size()) - l; }
  Rational& eps(int i) { return c[static_cast<size_t>(i - 1)]; }
  Rational& delta(int mu) { return c[static_cast<size_t>(l + mu - 1)]; }
  const Rational& eps(int i) const { return c[static_cast<size_t>(i - 1)]; }
  const Rational& delta(int mu) const { return c[static_cast<size_t>(l + mu - 1)]; }
  bool is_zero() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight operator*(const Rational& f) const;
  bool operator==(const Weight& o) const { return l == o.l && c == o.c; }
};

Rational bilinear(const Weight& u, const Weight& v);

enum class RootKind { I, L, Mu, S };

struct SimpleRoot {
  RootKind kind;
  int index;         // i or mu for the I / Mu families, otherwise 0
  std::string name;  // "i1", "l", "mu1", "s"
  Weight alpha;
  int parity;        // 1 only for the odd root alpha_s
};

enum class Order { Less, Equal, Greater };

/// Graded index set of the vector representation in weight-descending
/// position order: delta_1..delta_k, eps_1..eps_l, [0], -eps_l..-eps_1,
/// -delta_k..-delta_1.
struct BasisSpec {
  int m = 0, n = 0, l = 0, k = 0, dim = 0;
  std::vector<std::string> labels;
  std::vector<int> grading;
  std::vector<int> bar;
  std::vector<int> xi;
  std::vector<Weight> weights;
  Weight rho;
  std::vector<SimpleRoot> roots;
  std::vector<std::vector<Rational>> cartan;
  ScalarContext ctx;

  /// Position of the even index a in 1..m.
  int even_pos(int a) const { return k + a - 1; }
  /// Position of the odd index mu in 1..n.
  int odd_pos(int mu) const { return mu <= k ? mu - 1 : m + mu - 1; }
  /// Position of eps_i / delta_mu and their negatives.
  int pos_eps(int i) const { return even_pos(i); }
  int pos_delta(int mu) const { return odd_pos(mu); }
  int pos_of_label(const std::string& label) const;
  int zero_pos() const { return m % 2 == 1 ? even_pos(l + 1) : -1; }

  Weight zero_weight() const { return Weight(l, k); }
  Weight eps(int i) const;
  Weight delta(int mu) const;
  int root_index(const std::string& name) const;
};

BasisSpec build_basis(int m, int n, ScalarContext ctx = {});
Weight rho_weight(const BasisSpec& spec);
Order weight_order(const BasisSpec& spec, int a, int b);
/// (delta_1, delta_1 + 2 rho)
Rational c_lambda0(const BasisSpec& spec);

}  // namespace qosp
