#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hgx/polynomial.hpp"

namespace hgx {

template <>
struct FieldTraits<mpq_class> {
  static bool is_zero(const mpq_class& a) { return sgn(a) == 0; }
  static bool is_one(const mpq_class& a) { return a == 1; }
};

/// Polynomials in the weight parameter t with rational coefficients.
using TPoly = Polynomial<mpq_class>;

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/*
 * Element of Q(t): a reduced quotient num/den of t-polynomials with a
 * monic denominator. Rationals are the constants of this field and take a
 * fast path through the arithmetic, so numeric and symbolic weights share
 * every code path above this type.
 *
 * Values are immutable once built; every constructor returns canonical form,
 * which makes == a plain structural comparison.
 */
class Scalar {
 public:
  Scalar() : den_(TPoly::constant(1)) {}
  Scalar(int v) : Scalar(mpq_class(v)) {}
  Scalar(long v) : Scalar(mpq_class(v)) {}
  Scalar(const mpz_class& v) : Scalar(mpq_class(v)) {}
  Scalar(const mpq_class& v);

  /// The indeterminate t.
  static Scalar t();
  static Scalar from_poly(TPoly p);
  /// Reduces num/den; throws std::domain_error when den is zero.
  static Scalar from_fraction(TPoly num, TPoly den);

  const TPoly& num() const { return num_; }
  const TPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return is_constant() && constant_value() == 1; }
  /// True when the value does not depend on t.
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  /// True when the denominator is 1.
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Value of a constant Scalar; throws std::domain_error otherwise.
  mpq_class constant_value() const;

  /// Substitutes t = at; throws std::domain_error if the denominator vanishes there.
  Scalar evaluate(const mpq_class& at) const;

  Scalar pow(long e) const;
  Scalar inverse() const;

  /// Canonical text form: ascending powers of t with explicit signs.
  std::string to_string() const;
  /// Accepts integers, rationals, t-polynomials and parenthesized quotients.
  static Scalar parse(std::string_view text);

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Scalar(TPoly num, TPoly den, bool /*canonical*/) : num_(std::move(num)), den_(std::move(den)) {}

  TPoly num_;
  TPoly den_;
};

template <>
struct FieldTraits<Scalar> {
  static bool is_zero(const Scalar& a) { return a.is_zero(); }
  static bool is_one(const Scalar& a) { return a.is_one(); }
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Text form of a t-polynomial, e.g. "1-2*t+t^3".
std::string tpoly_to_string(const TPoly& p);

}  // namespace hgx
