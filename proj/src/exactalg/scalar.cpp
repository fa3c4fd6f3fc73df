#include "hgx/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace hgx {

namespace {

const TPoly& one_poly() {
  static const TPoly one = TPoly::constant(1);
  return one;
}

bool is_unit_den(const TPoly& den) { return den.degree() == 0; }

const mpq_class& const_of(const TPoly& p) {
  static const mpq_class zero(0);
  return p.is_zero() ? zero : p.coeffs()[0];
}

}  // namespace

Scalar::Scalar(const mpq_class& v) : den_(one_poly()) {
  mpq_class c(v);
  c.canonicalize();
  if (sgn(c) != 0) num_ = TPoly::constant(c);
}

Scalar Scalar::t() { return from_poly(TPoly(std::vector<mpq_class>{0, 1})); }

Scalar Scalar::from_poly(TPoly p) { return Scalar(std::move(p), one_poly(), true); }

Scalar Scalar::from_fraction(TPoly num, TPoly den) {
  if (den.is_zero()) throw std::domain_error("Scalar: zero denominator");
  if (num.is_zero()) return Scalar();
  if (den.degree() > 0) {
    TPoly g = gcd(num, den);
    if (g.degree() > 0) {
      num = divrem(num, g).first;
      den = divrem(den, g).first;
    }
  }
  mpq_class lc = den.lead();
  if (lc != 1) {
    num = num / lc;
    den = den / lc;
  }
  return Scalar(std::move(num), std::move(den), true);
}

mpq_class Scalar::constant_value() const {
  if (!is_constant()) throw std::domain_error("Scalar depends on t: " + to_string());
  return const_of(num_);
}

Scalar Scalar::evaluate(const mpq_class& at) const {
  mpq_class d = den_.eval(at);
  if (sgn(d) == 0) throw std::domain_error("Scalar: denominator vanishes at t = " + at.get_str());
  mpq_class n = num_.eval(at);
  return Scalar(mpq_class(n / d));
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, true); }

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() && b.is_constant())
    return Scalar(mpq_class(const_of(a.num_) + const_of(b.num_)));
  if (is_unit_den(a.den_) && is_unit_den(b.den_)) return Scalar(a.num_ + b.num_, one_poly(), true);
  if (a.den_ == b.den_) return Scalar::from_fraction(a.num_ + b.num_, a.den_);
  return Scalar::from_fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return Scalar();
  if (a.is_constant() && b.is_constant())
    return Scalar(mpq_class(const_of(a.num_) * const_of(b.num_)));
  if (is_unit_den(a.den_) && is_unit_den(b.den_)) return Scalar(a.num_ * b.num_, one_poly(), true);
  if (b.is_constant()) return Scalar(a.num_ * const_of(b.num_), a.den_, true);
  if (a.is_constant()) return Scalar(b.num_ * const_of(a.num_), b.den_, true);
  return Scalar::from_fraction(a.num_ * b.num_, a.den_ * b.den_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw std::domain_error("Scalar: division by zero");
  if (a.is_zero()) return Scalar();
  if (b.is_constant()) {
    const mpq_class& c = const_of(b.num_);
    if (a.is_constant()) return Scalar(mpq_class(const_of(a.num_) / c));
    return Scalar(a.num_ / c, a.den_, true);
  }
  if (is_unit_den(a.den_) && is_unit_den(b.den_)) {
    // Exact polynomial division is the common case inside fraction-free elimination.
    auto [q, r] = divrem(a.num_, b.num_);
    if (r.is_zero()) return Scalar(std::move(q), one_poly(), true);
    return Scalar::from_fraction(a.num_, b.num_);
  }
  return Scalar::from_fraction(a.num_ * b.den_, a.den_ * b.num_);
}

Scalar Scalar::inverse() const { return Scalar(1) / *this; }

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string tpoly_to_string(const TPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  auto coeffs = p.coeffs();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const mpq_class& c = coeffs[i];
    if (sgn(c) == 0) continue;
    std::string term;
    if (i == 0) {
      term = c.get_str();
    } else {
      std::string mono = i == 1 ? "t" : "t^" + std::to_string(i);
      if (c == 1)
        term = mono;
      else if (c == -1)
        term = "-" + mono;
      else
        term = c.get_str() + "*" + mono;
    }
    if (!out.empty() && term[0] != '-') out += '+';
    out += term;
  }
  return out;
}

namespace {

std::size_t term_count(const TPoly& p) {
  std::size_t n = 0;
  for (const auto& c : p.coeffs())
    if (sgn(c) != 0) ++n;
  return n;
}

}  // namespace

std::string Scalar::to_string() const {
  std::string n = tpoly_to_string(num_);
  if (is_unit_den(den_)) return n;
  if (term_count(num_) > 1 || n.find('/') != std::string::npos) n = "(" + n + ")";
  std::string d = tpoly_to_string(den_);
  if (term_count(den_) > 1) d = "(" + d + ")";
  return n + "/" + d;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

namespace {

// expr  := term (('+'|'-') term)*
// term  := unary (('*'|'/') unary)*
// unary := ('+'|'-') unary | power
// power := primary ('^' digits)?
// primary := digits | 't' | '(' expr ')'
class ScalarParser {
 public:
  explicit ScalarParser(std::string_view s) : s_(s) {}

  Scalar run() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << "cannot parse scalar '" << s_ << "' at offset " << pos_ << ": " << what;
    throw ParseError(os.str());
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        Scalar d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = primary();
    if (accept('^')) {
      std::string e = digits();
      if (e.size() > 6) fail("exponent too large");
      return base.pow(std::stol(e));
    }
    return base;
  }

  Scalar primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == 't') {
      ++pos_;
      return Scalar::t();
    }
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Scalar(mpz_class(digits()));
    fail("expected number, 't' or '('");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return ScalarParser(text).run(); }

}  // namespace hgx
