#include "qosp/qring.hpp"

#include <algorithm>
#include <cctype>

#include "qosp/errors.hpp"

namespace qosp {

std::string rational_str(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

Rational frac(long n, long d) {
  if (d == 0) throw DivisionByZero("zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

namespace {

Rational rpow(const Rational& base, int e) {
  Rational result = 1;
  Rational b = base;
  if (e < 0) {
    b = 1 / b;
    e = -e;
  }
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

// Dense polynomial helpers, coefficients ascending, no trailing zeros.
using Dense = std::vector<Rational>;

Dense to_dense(const LaurentPoly& p, int shift) {
  Dense d(static_cast<size_t>(p.max_exp() - shift + 1));
  for (const auto& [e, c] : p.terms()) d[static_cast<size_t>(e - shift)] = c;
  return d;
}

LaurentPoly from_dense(const Dense& d, int shift) {
  LaurentPoly out;
  for (size_t i = 0; i < d.size(); ++i)
    if (sgn(d[i]) != 0) out += LaurentPoly::monomial(static_cast<int>(i) + shift, d[i]);
  return out;
}

void trim(Dense& d) {
  while (!d.empty() && sgn(d.back()) == 0) d.pop_back();
}

// In-place: a becomes the remainder, returns the quotient.
Dense poly_divmod(Dense& a, const Dense& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  Dense quot(a.size() - b.size() + 1);
  const Rational& lead = b.back();
  for (size_t off = quot.size(); off-- > 0;) {
    size_t i = off + b.size() - 1;
    if (sgn(a[i]) == 0) continue;
    Rational f = a[i] / lead;
    quot[off] = f;
    for (size_t j = 0; j < b.size(); ++j) a[off + j] -= f * b[j];
  }
  trim(a);
  return quot;
}

Dense poly_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    poly_divmod(a, b);
    std::swap(a, b);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

}  // namespace

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace_back(0, Rational(c));
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace_back(0, c);
}

LaurentPoly LaurentPoly::monomial(int s_exp, const Rational& c) {
  LaurentPoly p;
  if (sgn(c) != 0) p.terms_.emplace_back(s_exp, c);
  return p;
}

LaurentPoly LaurentPoly::q_pow(const Rational& e) {
  Rational twice = 2 * e;
  twice.canonicalize();
  if (twice.get_den() != 1)
    throw NonIntegralExponent("q^(" + rational_str(e) + ") is not a power of q^(1/2)");
  return monomial(static_cast<int>(twice.get_num().get_si()));
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

int LaurentPoly::min_exp() const { return terms_.empty() ? 0 : terms_.front().first; }
int LaurentPoly::max_exp() const { return terms_.empty() ? 0 : terms_.back().first; }

Rational LaurentPoly::coeff(int s_exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), s_exp,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == s_exp) return it->second;
  return 0;
}

Rational LaurentPoly::leading_coeff() const {
  return terms_.empty() ? Rational(0) : terms_.back().second;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.first += k;
  return p;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (sgn(c) == 0) return {};
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.second *= c;
  return p;
}

Rational LaurentPoly::evaluate(const Rational& s) const {
  if (sgn(s) == 0 && !terms_.empty() && terms_.front().first < 0)
    throw PoleAtPoint("negative power of s at s = 0");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) sum += c * rpow(s, e);
  return sum;
}

LaurentPoly LaurentPoly::from_sorted(std::vector<Term> t) {
  LaurentPoly p;
  p.terms_ = std::move(t);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  if (o.terms_.size() == 1) {
    const auto& [e, c] = o.terms_[0];
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, int x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    } else {
      terms_.insert(it, o.terms_[0]);
    }
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      out.push_back(o.terms_[j++]);
    } else {
      Rational c = terms_[i].second + o.terms_[j].second;
      if (sgn(c) != 0) out.emplace_back(terms_[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.terms_.size() == 1) return b.shifted(a.terms_[0].first).scaled(a.terms_[0].second);
  if (b.terms_.size() == 1) return a.shifted(b.terms_[0].first).scaled(b.terms_[0].second);
  int lo = a.min_exp() + b.min_exp();
  Dense acc(static_cast<size_t>(a.max_exp() + b.max_exp() - lo + 1));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[static_cast<size_t>(ea + eb - lo)] += ca * cb;
  std::vector<LaurentPoly::Term> out;
  for (size_t i = 0; i < acc.size(); ++i)
    if (sgn(acc[i]) != 0) out.emplace_back(static_cast<int>(i) + lo, std::move(acc[i]));
  return LaurentPoly::from_sorted(std::move(out));
}

void LaurentPoly::add_product(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return;
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    LaurentPoly m;
    m.terms_.emplace_back(a.terms_[0].first + b.terms_[0].first,
                          a.terms_[0].second * b.terms_[0].second);
    *this += m;
    return;
  }
  *this += a * b;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    Rational mag = abs(c);
    std::string mono;
    if (e != 0) {
      if (e % 2 == 0)
        mono = e == 2 ? "q" : "q^" + std::to_string(e / 2);
      else
        mono = "q^(" + std::to_string(e) + "/2)";
    }
    if (mono.empty())
      out += rational_str(mag);
    else if (mag == 1)
      out += mono;
    else
      out += rational_str(mag) + "*" + mono;
  }
  return out;
}

LaurentPoly lp_multiply(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly lp_exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero("exact division by the zero polynomial");
  if (a.is_zero()) return {};
  if (b.is_monomial()) {
    const auto& [e, c] = b.terms()[0];
    return a.shifted(-e).scaled(1 / c);
  }
  Dense da = to_dense(a, a.min_exp());
  Dense db = to_dense(b, b.min_exp());
  Dense q = poly_divmod(da, db);
  if (!da.empty()) throw NotDivisible("(" + a.str() + ") / (" + b.str() + ") has a remainder");
  return from_dense(q, a.min_exp() - b.min_exp());
}

LaurentPoly lp_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return from_dense(poly_gcd(to_dense(b, b.min_exp()), {}), 0);
  if (b.is_zero()) return from_dense(poly_gcd(to_dense(a, a.min_exp()), {}), 0);
  return from_dense(poly_gcd(to_dense(a, a.min_exp()), to_dense(b, b.min_exp())), 0);
}

RatFunc rf_normalize(const LaurentPoly& n, const LaurentPoly& d) {
  if (d.is_zero()) throw DivisionByZero("rational function with zero denominator");
  RatFunc r;
  if (n.is_zero()) return r;
  int shift = n.min_exp() - d.min_exp();
  LaurentPoly num = n.shifted(-n.min_exp());
  LaurentPoly den = d.shifted(-d.min_exp());
  if (!den.is_constant()) {
    LaurentPoly g = lp_gcd(num, den);
    if (!g.is_constant()) {
      num = lp_exact_divide(num, g);
      den = lp_exact_divide(den, g);
    }
  }
  Rational lead = den.leading_coeff();
  r.num_ = num.scaled(1 / lead).shifted(shift);
  r.den_ = den.scaled(1 / lead);
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (is_laurent() && o.is_laurent()) {
    num_ += o.num_;
    return *this;
  }
  *this = rf_normalize(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_laurent() && o.is_laurent()) {
    num_ *= o.num_;
    return *this;
  }
  *this = rf_normalize(num_ * o.num_, den_ * o.den_);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw DivisionByZero("division by the zero rational function");
  *this = rf_normalize(num_ * o.den_, den_ * o.num_);
  return *this;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational RatFunc::evaluate(const Rational& s) const {
  Rational d = den_.evaluate(s);
  if (sgn(d) == 0) throw PoleAtPoint("denominator vanishes at s = " + rational_str(s));
  return num_.evaluate(s) / d;
}

std::string RatFunc::str() const {
  if (is_laurent()) return num_.str();
  std::string n = num_.str();
  if (num_.terms().size() > 1) n = "(" + n + ")";
  return n + "/(" + den_.str() + ")";
}

Rational evaluate_at(const RatFunc& x, const Rational& s) { return x.evaluate(s); }

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in \"" + text_ + "\"");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  long integer() {
    skip();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::stol(text_.substr(start, pos_ - start));
  }

  RatFunc expr() {
    RatFunc acc;
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  RatFunc term() {
    RatFunc acc = factor();
    while (true) {
      if (accept('*'))
        acc *= factor();
      else if (accept('/'))
        acc /= factor();
      else
        return acc;
    }
  }

  // Exponent in units of s: q^k -> 2k, q^(k/2) -> k.
  int q_exponent() {
    if (accept('(')) {
      bool neg = accept('-');
      long k = integer();
      long den = 1;
      if (accept('/')) den = integer();
      expect(')');
      if (den != 1 && den != 2) fail("q exponent must be integral or half-integral");
      long s = den == 1 ? 2 * k : k;
      return static_cast<int>(neg ? -s : s);
    }
    bool neg = accept('-');
    long k = integer();
    return static_cast<int>(neg ? -2 * k : 2 * k);
  }

  RatFunc factor() {
    skip();
    if (accept('-')) return -factor();
    if (accept('(')) {
      RatFunc r = expr();
      expect(')');
      return r;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'q' || text_[pos_] == 's')) {
      char v = text_[pos_++];
      int e = v == 'q' ? 2 : 1;
      if (accept('^')) {
        if (v == 'q') {
          e = q_exponent();
        } else {
          bool neg = accept('-');
          e = static_cast<int>(neg ? -integer() : integer());
        }
      }
      return RatFunc(LaurentPoly::monomial(e));
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      return RatFunc(LaurentPoly(Rational(integer())));
    fail("expected a number, q, s or '('");
  }

  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(const std::string& text) { return Parser(text).parse(); }

LaurentPoly parse_laurent(const std::string& text) {
  RatFunc r = parse_ratfunc(text);
  if (!r.is_laurent()) throw ParseError("\"" + text + "\" is not a Laurent polynomial");
  return r.num();
}

ScalarContext::ScalarContext(const Rational& s) : point_(s) {
  if (sgn(s) == 0) throw PoleAtPoint("s = 0 is a pole of q^{-1}");
}

LaurentPoly ScalarContext::s_pow(int e) const {
  if (point_) return LaurentPoly(rpow(*point_, e));
  return LaurentPoly::monomial(e);
}

LaurentPoly ScalarContext::q_pow(const Rational& e) const {
  LaurentPoly m = LaurentPoly::q_pow(e);
  return point_ ? map(m) : m;
}

LaurentPoly ScalarContext::q_minus_qinv() const { return s_pow(2) - s_pow(-2); }

LaurentPoly ScalarContext::map(const LaurentPoly& p) const {
  if (!point_) return p;
  return LaurentPoly(p.evaluate(*point_));
}

}  // namespace qosp
