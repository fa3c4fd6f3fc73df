#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgx/matrix.hpp"
#include "hgx/scalar.hpp"

// Weighted lattice paths with steps U=(1,1), D=(1,-1) and H=(ell,0) that never
// go below the x-axis, where every H step carries the weight t.
namespace hgx::paths {

/// Horizontal step length and H-step weight.
struct PathParams {
  int ell = 1;
  Scalar t = Scalar(1);

  /// ell >= 1, or ell = 0 together with t = 0 (Dyck paths).
  void validate() const;
};

struct Point {
  long x = 0;
  long y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

enum class Step : char { U = 'U', D = 'D', H = 'H' };

struct LatticePath {
  Point start;
  std::vector<Step> steps;

  /// Step end points, including start; H contributes only its far end.
  std::vector<Point> vertices(int ell) const;
  std::size_t h_count() const;
  Point end(int ell) const;
};

/// Initial and terminal points of a tuple of paths.
struct ITConfig {
  std::vector<Point> initials;
  std::vector<Point> terminals;

  std::size_t order() const { return initials.size(); }
  /// Ordering chains x_{k+1} <= x_k <= 0, 0 <= y_k <= y_{k+1} (initials),
  /// 0 <= x'_k <= x'_{k+1}, 0 <= y'_k <= y'_{k+1} (terminals), distinct points.
  void validate() const;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// f(0..n_max) from F = 1 + t x^ell F + x^2 F^2.
std::vector<Scalar> f_series(const PathParams& params, std::size_t n_max);

/// f(0..n_max) by dynamic programming over (abscissa, height).
std::vector<Scalar> f_dp_oracle(const PathParams& params, std::size_t n_max);

/// Terms r(0..n_max) of R = 1 + t x R + x R^2, the weights of paths to (2n, 0) with ell = 2.
std::vector<Scalar> large_schroeder_series(const Scalar& t, std::size_t n_max);

/// Total weight of the nonnegative paths from `from` to `to`.
Scalar paths_weight(Point from, Point to, const PathParams& params);

/// Every nonnegative path from `from` to `to`, in step-string order U < D < H.
std::vector<LatticePath> enumerate_paths(Point from, Point to, int ell);

/// The matrix (paths_weight(initial_i, terminal_j))_{i,j}.
SquareMatrix path_weight_matrix(const ITConfig& config, const PathParams& params);

struct LgvResult {
  Scalar signed_sum;
  std::uint64_t nonintersecting_tuples = 0;
  std::uint64_t nodes_visited = 0;
};

inline constexpr std::uint64_t kDefaultLgvBudget = 200'000'000;

/*
 * Sum over all permutations sigma and all tuples (p_1..p_n), p_i running from
 * initial i to terminal sigma(i), whose vertex sets are pairwise disjoint, of
 * sgn(sigma) * prod weight(p_i).
 *
 * `budget` caps the number of partial tuples examined; exceeding it throws
 * BudgetExceeded.
 */
LgvResult lgv_signed_sum(const ITConfig& config, const PathParams& params,
                         std::uint64_t budget = kDefaultLgvBudget);

/// M(0): first row and column 1, M(i,j) = M(i-1,j) + t M(i-1,j-1) + M(i,j-1).
SquareMatrix delannoy_matrix(std::size_t n, const Scalar& t);

}  // namespace hgx::paths
