#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hgx {

/// Zero test used by Polynomial. Specialized next to each coefficient type.
template <class F>
struct FieldTraits {
  static bool is_zero(const F& a) { return a == F(0); }
  static bool is_one(const F& a) { return a == F(1); }
};

/*
 * Dense univariate polynomial over a field F.
 *
 * Coefficients are stored in ascending order of degree with no trailing
 * zeros, so the zero polynomial is the empty vector and equality of
 * polynomials is equality of the coefficient vectors.
 *
 * F must provide +, -, *, / and construction from int.
 */
template <class F>
class Polynomial {
 public:
  using coeff_type = F;

  Polynomial() = default;
  explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(F c) { return Polynomial(std::vector<F>{std::move(c)}); }

  static Polynomial monomial(F c, std::size_t degree) {
    std::vector<F> v(degree + 1, F(0));
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  std::span<const F> coeffs() const { return c_; }

  F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }
  const F& lead() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  /// Index of the lowest nonzero coefficient.
  std::size_t ord() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!FieldTraits<F>::is_zero(c_[i])) return i;
    throw std::domain_error("order of zero polynomial");
  }

  F eval(const F& at) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  /// Multiplication by x^k.
  Polynomial shifted_up(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<F> v(k, F(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return Polynomial(std::move(v));
  }

  /// Drops the k lowest coefficients (division by x^k when they vanish).
  Polynomial shifted_down(std::size_t k) const {
    if (k >= c_.size()) return {};
    return Polynomial(std::vector<F>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
  }

  /// Keeps coefficients of degree < n.
  Polynomial truncated(std::size_t n) const {
    if (n >= c_.size()) return *this;
    return Polynomial(std::vector<F>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n)));
  }

  Polynomial monic() const {
    if (is_zero() || FieldTraits<F>::is_one(c_.back())) return *this;
    return *this / c_.back();
  }

  Polynomial operator-() const {
    std::vector<F> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(-a);
    Polynomial r;
    r.c_ = std::move(v);
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> v(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (FieldTraits<F>::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(v));
  }

  friend Polynomial operator*(const Polynomial& a, const F& s) {
    if (FieldTraits<F>::is_zero(s)) return {};
    std::vector<F> v;
    v.reserve(a.c_.size());
    for (const auto& x : a.c_) v.push_back(x * s);
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const F& s, const Polynomial& a) { return a * s; }

  friend Polynomial operator/(const Polynomial& a, const F& s) {
    if (FieldTraits<F>::is_zero(s)) throw std::domain_error("polynomial divided by zero scalar");
    std::vector<F> v;
    v.reserve(a.c_.size());
    for (const auto& x : a.c_) v.push_back(x / s);
    return Polynomial(std::move(v));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Euclidean division; returns (quotient, remainder) with deg r < deg b.
  friend std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    std::vector<F> rem = a.c_;
    const std::size_t db = b.c_.size() - 1;
    std::vector<F> quo(rem.size() - db, F(0));
    const F& lb = b.c_.back();
    const bool unit_lead = FieldTraits<F>::is_one(lb);
    for (std::size_t i = rem.size(); i-- > db;) {
      if (FieldTraits<F>::is_zero(rem[i])) continue;
      F q = rem[i];
      if (!unit_lead) q = q / lb;
      for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = rem[i - db + j] - q * b.c_[j];
      quo[i - db] = std::move(q);
    }
    rem.resize(db);
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }

  /// Monic greatest common divisor; gcd(0, 0) = 0.
  friend Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      auto r = divrem(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

 private:
  void trim() {
    while (!c_.empty() && FieldTraits<F>::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

}  // namespace hgx
