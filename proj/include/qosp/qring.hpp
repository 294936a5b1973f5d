#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qosp {

using Rational = mpq_class;

std::string rational_str(const Rational& r);
/// n/d in lowest terms.
Rational frac(long n, long d);

/// Laurent polynomial in s = q^{1/2} with exact rational coefficients.
/// Terms are kept sorted by ascending exponent and never store a zero.
class LaurentPoly {
 public:
  using Term = std::pair<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Rational& c);

  static LaurentPoly monomial(int s_exp, const Rational& c = 1);
  /// q^e for rational e; 2e must be an integer.
  static LaurentPoly q_pow(const Rational& e);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  int min_exp() const;
  int max_exp() const;
  Rational coeff(int s_exp) const;
  Rational leading_coeff() const;

  LaurentPoly shifted(int k) const;
  LaurentPoly scaled(const Rational& c) const;
  Rational evaluate(const Rational& s) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  /// this += a*b without a temporary for the common monomial cases.
  void add_product(const LaurentPoly& a, const LaurentPoly& b);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  std::string str() const;

 private:
  static LaurentPoly from_sorted(std::vector<Term> t);
  std::vector<Term> terms_;
};

LaurentPoly lp_multiply(const LaurentPoly& a, const LaurentPoly& b);
/// Returns c with b*c == a, or throws NotDivisible / DivisionByZero.
LaurentPoly lp_exact_divide(const LaurentPoly& a, const LaurentPoly& b);
/// Monic gcd of the polynomial parts (minimal s-power factored out).
LaurentPoly lp_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Quotient of Laurent polynomials kept in canonical form: the denominator
/// is a monic polynomial in s with nonzero constant term, coprime to the
/// numerator.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_ == LaurentPoly(1); }

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const;
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  Rational evaluate(const Rational& s) const;
  std::string str() const;

  friend RatFunc rf_normalize(const LaurentPoly& n, const LaurentPoly& d);

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

RatFunc rf_normalize(const LaurentPoly& n, const LaurentPoly& d);
Rational evaluate_at(const RatFunc& x, const Rational& s);

/// Parses the canonical rendering (and ordinary arithmetic on it):
/// rationals, q, s, ^ with integer or (k/2) exponents, + - * / and parens.
RatFunc parse_ratfunc(const std::string& text);
/// Like parse_ratfunc but requires a Laurent polynomial result.
LaurentPoly parse_laurent(const std::string& text);

/// Decides whether q-powers stay symbolic or are evaluated at s = P/Q.
class ScalarContext {
 public:
  ScalarContext() = default;
  explicit ScalarContext(const Rational& s);

  bool numeric() const { return point_.has_value(); }
  const std::optional<Rational>& point() const { return point_; }

  LaurentPoly s_pow(int e) const;
  LaurentPoly q_pow(const Rational& e) const;
  /// q - q^{-1}
  LaurentPoly q_minus_qinv() const;
  LaurentPoly map(const LaurentPoly& p) const;

 private:
  std::optional<Rational> point_;
};

}  // namespace qosp
