#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hgx/pathcount.hpp"
#include "hgx/ratseries.hpp"
#include "hgx/scalar.hpp"

// Continued-fraction transformations of quadratic functional equations and
// the bookkeeping that relates the Hankel determinants before and after.
namespace hgx::gx {

/// a F^2 + b F + c = 0.
struct QuadraticForm {
  RatSeries a;
  RatSeries b;
  RatSeries c;
};

/*
 * F = x^d / (u + x^k v F), the unique power-series solution.
 * Requires u(0) != 0, v(0) != 0 and k >= 1; then ord(F) = d.
 */
struct QuadFE {
  int d = 0;
  int k = 1;
  RatSeries u = RatSeries(1);
  RatSeries v = RatSeries(1);

  void validate() const;
  QuadraticForm quadratic() const;
  std::string to_string() const;
};

/// d, k equal and u, v equal as reduced rational functions.
bool fe_equal(const QuadFE& a, const QuadFE& b);
inline bool operator==(const QuadFE& a, const QuadFE& b) { return fe_equal(a, b); }

class CanonicalizeError : public std::domain_error {
 public:
  enum class Reason {
    NoPowerSeriesBranch,  // b(0) = 0
    Linear,               // a = 0: F is rational
    ZeroSolution,         // c = 0: F = 0
    NonUnique,            // k would be 0
  };
  CanonicalizeError(Reason r, const std::string& what) : std::domain_error(what), reason_(r) {}
  Reason reason() const { return reason_; }
  /// True for the outcomes where the solution is a rational series.
  bool rational() const { return reason_ == Reason::Linear || reason_ == Reason::ZeroSolution; }

 private:
  Reason reason_;
};

/// Writes -c = x^d w with w(0) != 0 and returns (d, b/w, ord(a/w), (a/w)/x^k).
QuadFE canonicalize(const QuadraticForm& q);

/// F = 1 + t x^ell F + x^2 F^2 in canonical form.
QuadFE path_fe(const paths::PathParams& params);

/// u = u_L + x^(d+2) u_H with deg u_L <= d + 1.
struct ULSplit {
  Poly u_low;
  RatSeries u_high;
};
ULSplit split_u(const QuadFE& fe);

struct Factor {
  Scalar base;
  int offset = 0;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/*
 * det H_n(F_start) = sign * prod base_i^(n - offset_i) * det H_{n - delta}(F_end),
 * valid for n >= delta. Factors are kept merged by offset, sorted, without
 * unit bases.
 */
struct FactorChain {
  int sign = 1;
  std::vector<Factor> factors;
  int delta = 0;

  /// sign * prod base_i^(n - offset_i).
  Scalar multiplier(long n) const;
  /// Human-readable "det H_n(F) = ... det H_{n-delta}(G)".
  std::string to_string() const;
  friend bool operator==(const FactorChain&, const FactorChain&) = default;
};

/// `first` then `then`: offsets of `then` shift by first.delta.
FactorChain compose(const FactorChain& first, const FactorChain& then);

/// G = offset + x^x_exponent * scale * F.
struct LinearRelation {
  RatSeries offset;
  RatSeries scale;
  int x_exponent = 0;
  std::string to_string() const;
};

/// Returns G = u(0) F with det H_n(F) = u(0)^{-n} det H_n(G). Identity when u(0) = 1.
std::pair<QuadFE, FactorChain> normalize_const(const QuadFE& fe);

struct QuadraticResult {
  QuadFE next;
  FactorChain chain;
  LinearRelation relation;
  /// k = 1: the chain ends in det H^1_{n-d-1}(next) instead of det H_{n-d-1}(next).
  bool shifted_hankel = false;
};

/// Requires u(0) = 1. Throws CanonicalizeError when G is rational.
QuadraticResult transform_quadratic(const QuadFE& fe);

/// S with F = p + x^j S, where p collects the first j coefficients of F.
QuadFE shift_out(const QuadFE& fe, int j);

/// Canonical equation of c + F.
QuadFE add_constant(const QuadFE& fe, const Scalar& c);

/// Coefficients 0..n_max of the series solution.
std::vector<Scalar> series_of_fe(const QuadFE& fe, std::size_t n_max);

enum class StepKind { Normalize, Quadratic, Shift };
const char* to_string(StepKind kind);

struct TStep {
  StepKind kind = StepKind::Quadratic;
  QuadFE from;
  QuadFE to;
  FactorChain chain;
  /// The k = 1 case: the branch (i) series before its constant term is removed.
  std::optional<QuadFE> intermediate;
  std::string relation;
};

/// One application of the transformation; dispatches on u(0) and k.
TStep apply_T(const QuadFE& fe);

enum class OrbitStatus { Cycle, NoCycle, RationalTerminal };
const char* to_string(OrbitStatus status);

struct OrbitTrace {
  std::vector<QuadFE> states;
  std::vector<TStep> steps;
  OrbitStatus status = OrbitStatus::NoCycle;
  /// (i, j) with states[i] == states[j], i < j.
  std::optional<std::pair<std::size_t, std::size_t>> cycle;
  /// states[0] to states[i].
  FactorChain prefix;
  /// states[i] back to itself: det H_n(F_i) = S(n) det H_{n-delta}(F_i).
  FactorChain recurrence;
  std::string terminal_reason;
};

inline constexpr std::size_t kDefaultMaxSteps = 16;

OrbitTrace orbit(const QuadFE& fe, std::size_t max_steps = kDefaultMaxSteps);

/*
 * det H_n(states[0]) for n = 1..n_max reconstructed from a closed orbit:
 * initial values det H_m(F_i), m < recurrence.delta, and det H_n(F_0),
 * n < prefix.delta, are computed directly; every other term comes from the
 * chains alone.
 */
std::vector<Scalar> recurrence_dets(const OrbitTrace& trace, std::size_t n_max);

}  // namespace hgx::gx
