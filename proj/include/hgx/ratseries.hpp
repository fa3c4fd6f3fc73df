#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgx/polynomial.hpp"
#include "hgx/scalar.hpp"

namespace hgx {

/// Polynomials in the series variable x over Q(t).
using Poly = Polynomial<Scalar>;

/// Builds a Poly from integer or Scalar coefficients, ascending.
Poly make_poly(std::vector<Scalar> coeffs);
/// x^k.
Poly x_pow(std::size_t k);

/// Text form such as "1-2*x^2+(1+t)*x^3".
std::string poly_to_string(const Poly& p, std::string_view var = "x");

class NotPowerSeries : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/*
 * Rational function num/den in x read as a formal power series.
 *
 * Canonical form: num and den coprime, den(0) = 1. Construction reduces
 * eagerly, so two RatSeries are equal exactly when their fields match.
 */
class RatSeries {
 public:
  RatSeries() : den_(Poly::constant(1)) {}
  RatSeries(const Scalar& c) : num_(c.is_zero() ? Poly() : Poly::constant(c)), den_(Poly::constant(1)) {}
  RatSeries(int c) : RatSeries(Scalar(c)) {}
  RatSeries(Poly p) : num_(std::move(p)), den_(Poly::constant(1)) {}
  /// Throws NotPowerSeries if den(0) = 0 after cancelling common factors.
  RatSeries(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Constant term.
  Scalar at_zero() const { return num_.coeff(0); }

  /// Order of vanishing at x = 0; throws std::domain_error on the zero series.
  std::size_t ord() const;

  /// First n coefficients, via the recurrence induced by den.
  std::vector<Scalar> expand(std::size_t n) const;

  /// Sum of the terms of degree < n.
  Poly truncated(std::size_t n) const;

  RatSeries mul_x_pow(std::size_t k) const;
  /// Division by x^k; requires ord() >= k (the zero series is always allowed).
  RatSeries div_x_pow(std::size_t k) const;

  RatSeries operator-() const;
  friend RatSeries operator+(const RatSeries& a, const RatSeries& b);
  friend RatSeries operator-(const RatSeries& a, const RatSeries& b);
  friend RatSeries operator*(const RatSeries& a, const RatSeries& b);
  /// Requires the quotient to be a power series.
  friend RatSeries operator/(const RatSeries& a, const RatSeries& b);

  friend bool operator==(const RatSeries& a, const RatSeries& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "(num)/(den)" or just the numerator when den = 1.
  std::string to_string() const;

 private:
  struct Canonical {};
  RatSeries(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

}  // namespace hgx
