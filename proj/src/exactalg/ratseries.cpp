#include "hgx/ratseries.hpp"

namespace hgx {

Poly make_poly(std::vector<Scalar> coeffs) { return Poly(std::move(coeffs)); }

Poly x_pow(std::size_t k) { return Poly::monomial(Scalar(1), k); }

namespace {

bool is_single_term(const Scalar& c) {
  if (!c.is_polynomial()) return false;
  std::size_t n = 0;
  for (const auto& q : c.num().coeffs())
    if (sgn(q) != 0) ++n;
  return n <= 1;
}

}  // namespace

std::string poly_to_string(const Poly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  auto coeffs = p.coeffs();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Scalar& c = coeffs[i];
    if (c.is_zero()) continue;
    std::string term;
    if (i == 0) {
      term = c.to_string();
      if (!is_single_term(c) && !out.empty()) term = "(" + term + ")";
    } else {
      std::string mono(var);
      if (i > 1) mono += "^" + std::to_string(i);
      if (c == Scalar(1))
        term = mono;
      else if (c == Scalar(-1))
        term = "-" + mono;
      else if (is_single_term(c))
        term = c.to_string() + "*" + mono;
      else
        term = "(" + c.to_string() + ")*" + mono;
    }
    if (!out.empty() && term[0] != '-') out += '+';
    out += term;
  }
  return out;
}

RatSeries::RatSeries(Poly num, Poly den) {
  if (den.is_zero()) throw NotPowerSeries("RatSeries: zero denominator");
  if (num.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  if (den.degree() > 0) {
    Poly g = gcd(num, den);
    if (g.degree() > 0) {
      num = divrem(num, g).first;
      den = divrem(den, g).first;
    }
  }
  Scalar d0 = den.coeff(0);
  if (d0.is_zero()) throw NotPowerSeries("RatSeries: denominator vanishes at x = 0");
  if (!d0.is_one()) {
    num = num / d0;
    den = den / d0;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

std::size_t RatSeries::ord() const {
  if (num_.is_zero()) throw std::domain_error("RatSeries: order of the zero series");
  return num_.ord();
}

std::vector<Scalar> RatSeries::expand(std::size_t n) const {
  std::vector<Scalar> c(n);
  auto dc = den_.coeffs();
  for (std::size_t i = 0; i < n; ++i) {
    Scalar acc = num_.coeff(i);
    for (std::size_t j = 1; j < dc.size() && j <= i; ++j)
      if (!dc[j].is_zero()) acc -= dc[j] * c[i - j];
    c[i] = std::move(acc);
  }
  return c;
}

Poly RatSeries::truncated(std::size_t n) const {
  if (is_polynomial()) return num_.truncated(n);
  return Poly(expand(n));
}

RatSeries RatSeries::mul_x_pow(std::size_t k) const {
  return RatSeries(num_.shifted_up(k), den_, Canonical{});
}

RatSeries RatSeries::div_x_pow(std::size_t k) const {
  if (k == 0 || is_zero()) return *this;
  if (ord() < k) throw NotPowerSeries("RatSeries: division by x^" + std::to_string(k) + " leaves a pole");
  return RatSeries(num_.shifted_down(k), den_, Canonical{});
}

RatSeries RatSeries::operator-() const { return RatSeries(-num_, den_, Canonical{}); }

RatSeries operator+(const RatSeries& a, const RatSeries& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.is_polynomial()) return RatSeries(a.num_ + b.num_, a.den_, RatSeries::Canonical{});
    return RatSeries(a.num_ + b.num_, a.den_);
  }
  return RatSeries(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatSeries operator-(const RatSeries& a, const RatSeries& b) { return a + (-b); }

RatSeries operator*(const RatSeries& a, const RatSeries& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial())
    return RatSeries(a.num_ * b.num_, a.den_, RatSeries::Canonical{});
  return RatSeries(a.num_ * b.num_, a.den_ * b.den_);
}

RatSeries operator/(const RatSeries& a, const RatSeries& b) {
  if (b.is_zero()) throw std::domain_error("RatSeries: division by zero");
  if (a.is_zero()) return {};
  return RatSeries(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatSeries::to_string() const {
  std::string n = poly_to_string(num_);
  if (is_polynomial()) return n;
  return "(" + n + ")/(" + poly_to_string(den_) + ")";
}

}  // namespace hgx
