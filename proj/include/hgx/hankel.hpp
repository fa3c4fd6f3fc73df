#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hgx/matrix.hpp"
#include "hgx/scalar.hpp"

namespace hgx::hankel {

using ExactMatrix = SquareMatrix;

class InsufficientTerms : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Terms a_0 .. a_{2n+shift-2} are needed for the order-n shifted Hankel matrix.
inline std::size_t terms_needed(std::size_t shift, std::size_t n) { return n == 0 ? 0 : 2 * n + shift - 1; }

/// (a_{i+j+shift})_{0 <= i,j < n}.
ExactMatrix build(std::span<const Scalar> seq, std::size_t shift, std::size_t n);

/// Fraction-free elimination with exact divisions; pivots on the first nonzero entry.
Scalar det_bareiss(ExactMatrix m);
/// Gaussian elimination over the field Q(t).
Scalar det_gauss(ExactMatrix m);
/// Bareiss when every entry is a polynomial in t (integers included), Gauss otherwise.
/// The order-0 determinant is 1.
Scalar det_exact(const ExactMatrix& m);

/// [det H_1^shift, ..., det H_{n_max}^shift].
std::vector<Scalar> det_sequence(std::span<const Scalar> seq, std::size_t shift, std::size_t n_max);

struct Period {
  std::size_t period = 0;
  std::size_t offset = 0;
  friend bool operator==(const Period&, const Period&) = default;
};

/*
 * Smallest offset, then smallest period p <= max_period, such that
 * seq[i] == seq[i + p] for every i >= offset with i + p < seq.size().
 * A candidate is only reported when at least 2p such comparisons exist.
 */
std::optional<Period> detect_period(std::span<const Scalar> seq, std::size_t max_period);

}  // namespace hgx::hankel
