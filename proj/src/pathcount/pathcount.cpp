#include "hgx/pathcount.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace hgx::paths {

void PathParams::validate() const {
  if (ell < 0) throw std::invalid_argument("ell must be nonnegative");
  if (ell == 0 && !t.is_zero())
    throw std::invalid_argument("ell = 0 requires t = 0: a zero-length weighted step makes the path sets infinite");
}

std::vector<Point> LatticePath::vertices(int ell) const {
  std::vector<Point> v;
  v.reserve(steps.size() + 1);
  Point p = start;
  v.push_back(p);
  for (Step s : steps) {
    switch (s) {
      case Step::U: p = {p.x + 1, p.y + 1}; break;
      case Step::D: p = {p.x + 1, p.y - 1}; break;
      case Step::H: p = {p.x + ell, p.y}; break;
    }
    v.push_back(p);
  }
  return v;
}

std::size_t LatticePath::h_count() const {
  return static_cast<std::size_t>(std::count(steps.begin(), steps.end(), Step::H));
}

Point LatticePath::end(int ell) const { return vertices(ell).back(); }

void ITConfig::validate() const {
  if (initials.size() != terminals.size())
    throw std::invalid_argument("i-t-config: initial and terminal lists differ in length");
  for (std::size_t k = 0; k < initials.size(); ++k) {
    const Point& p = initials[k];
    const Point& q = terminals[k];
    if (p.x > 0 || p.y < 0) throw std::invalid_argument("i-t-config: initial points need x <= 0 and y >= 0");
    if (q.x < 0 || q.y < 0) throw std::invalid_argument("i-t-config: terminal points need x >= 0 and y >= 0");
    if (k + 1 < initials.size()) {
      const Point& pn = initials[k + 1];
      const Point& qn = terminals[k + 1];
      if (pn.x > p.x || pn.y < p.y)
        throw std::invalid_argument("i-t-config: initials must satisfy x_{k+1} <= x_k and y_k <= y_{k+1}");
      if (qn.x < q.x || qn.y < q.y)
        throw std::invalid_argument("i-t-config: terminals must satisfy x'_k <= x'_{k+1} and y'_k <= y'_{k+1}");
    }
  }
  if (std::set<Point>(initials.begin(), initials.end()).size() != initials.size() ||
      std::set<Point>(terminals.begin(), terminals.end()).size() != terminals.size())
    throw std::invalid_argument("i-t-config: points must be distinct");
}

std::vector<Scalar> f_series(const PathParams& params, std::size_t n_max) {
  params.validate();
  std::vector<Scalar> f(n_max + 1);
  f[0] = Scalar(1);
  const auto ell = static_cast<std::size_t>(params.ell);
  for (std::size_t n = 1; n <= n_max; ++n) {
    Scalar acc;
    if (ell >= 1 && n >= ell) acc = params.t * f[n - ell];
    for (std::size_t i = 0; i + 2 <= n; ++i) acc += f[i] * f[n - 2 - i];
    f[n] = std::move(acc);
  }
  return f;
}

std::vector<Scalar> f_dp_oracle(const PathParams& params, std::size_t n_max) {
  params.validate();
  const auto ell = static_cast<std::size_t>(params.ell);
  const bool horizontal = ell >= 1 && !params.t.is_zero();
  // w[x][y] = weight of nonnegative paths from (0,0) to (x,y), heights capped at n_max - x.
  std::vector<std::vector<Scalar>> w(n_max + 1);
  for (std::size_t x = 0; x <= n_max; ++x) {
    const std::size_t cap = std::min(x, n_max - x);
    w[x].assign(cap + 1, Scalar());
    if (x == 0) {
      w[0][0] = Scalar(1);
      continue;
    }
    const auto& prev = w[x - 1];
    for (std::size_t y = 0; y <= cap; ++y) {
      Scalar acc;
      if (y >= 1 && y - 1 < prev.size()) acc += prev[y - 1];
      if (y + 1 < prev.size()) acc += prev[y + 1];
      if (horizontal && x >= ell && y < w[x - ell].size()) acc += params.t * w[x - ell][y];
      w[x][y] = std::move(acc);
    }
  }
  std::vector<Scalar> f(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) f[n] = w[n][0];
  return f;
}

std::vector<Scalar> large_schroeder_series(const Scalar& t, std::size_t n_max) {
  std::vector<Scalar> r(n_max + 1);
  r[0] = Scalar(1);
  for (std::size_t n = 1; n <= n_max; ++n) {
    Scalar acc = t * r[n - 1];
    for (std::size_t i = 0; i + 1 <= n; ++i) acc += r[i] * r[n - 1 - i];
    r[n] = std::move(acc);
  }
  return r;
}

Scalar paths_weight(Point from, Point to, const PathParams& params) {
  params.validate();
  if (from.y < 0 || to.y < 0) throw std::invalid_argument("paths_weight: endpoints must lie on or above the x-axis");
  const long dx = to.x - from.x;
  if (dx < 0) return Scalar();
  if (dx == 0) return from == to ? Scalar(1) : Scalar();
  const long ell = params.ell;
  const bool horizontal = ell >= 1 && !params.t.is_zero();
  const long ymax = from.y + dx;
  // cols[x][y] for x = 0..dx relative to from.x.
  std::vector<std::vector<Scalar>> w(static_cast<std::size_t>(dx + 1), std::vector<Scalar>(static_cast<std::size_t>(ymax + 1)));
  w[0][static_cast<std::size_t>(from.y)] = Scalar(1);
  for (long x = 1; x <= dx; ++x) {
    const long cap = std::min(ymax, to.y + (dx - x));
    auto& col = w[static_cast<std::size_t>(x)];
    const auto& prev = w[static_cast<std::size_t>(x - 1)];
    for (long y = 0; y <= cap; ++y) {
      Scalar acc;
      if (y >= 1) acc += prev[static_cast<std::size_t>(y - 1)];
      if (y + 1 <= ymax) acc += prev[static_cast<std::size_t>(y + 1)];
      if (horizontal && x >= ell) acc += params.t * w[static_cast<std::size_t>(x - ell)][static_cast<std::size_t>(y)];
      col[static_cast<std::size_t>(y)] = std::move(acc);
    }
  }
  return w[static_cast<std::size_t>(dx)][static_cast<std::size_t>(to.y)];
}

namespace {

void enumerate_from(Point at, Point to, int ell, std::vector<Step>& prefix, Point start,
                    std::vector<LatticePath>& out) {
  const long remaining = to.x - at.x;
  if (remaining == 0) {
    if (at.y == to.y) out.push_back({start, prefix});
    return;
  }
  if (std::abs(at.y - to.y) > remaining) return;
  prefix.push_back(Step::U);
  enumerate_from({at.x + 1, at.y + 1}, to, ell, prefix, start, out);
  prefix.back() = Step::D;
  if (at.y >= 1) enumerate_from({at.x + 1, at.y - 1}, to, ell, prefix, start, out);
  prefix.back() = Step::H;
  if (ell >= 1 && ell <= remaining) enumerate_from({at.x + ell, at.y}, to, ell, prefix, start, out);
  prefix.pop_back();
}

}  // namespace

std::vector<LatticePath> enumerate_paths(Point from, Point to, int ell) {
  std::vector<LatticePath> out;
  if (from.y < 0 || to.y < 0 || to.x < from.x) return out;
  std::vector<Step> prefix;
  enumerate_from(from, to, ell, prefix, from, out);
  return out;
}

SquareMatrix path_weight_matrix(const ITConfig& config, const PathParams& params) {
  config.validate();
  const std::size_t n = config.order();
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = paths_weight(config.initials[i], config.terminals[j], params);
  return m;
}

namespace {

// Vertex sets as bitmasks over the bounding box of the configuration.
struct Grid {
  long x0 = 0;
  long width = 0;
  std::size_t words = 0;

  std::size_t cell(Point p) const { return static_cast<std::size_t>(p.y * width + (p.x - x0)); }
};

struct EncodedPath {
  std::size_t h = 0;
  std::size_t mask_offset = 0;
};

struct PathSet {
  std::vector<EncodedPath> paths;
};

class TupleSearch {
 public:
  TupleSearch(const Grid& grid, std::vector<std::uint64_t>& masks, std::uint64_t budget)
      : grid_(grid), masks_(masks), budget_(budget) {}

  void run(const std::vector<const PathSet*>& rows, long sign, std::vector<long long>& counts) {
    rows_ = &rows;
    sign_ = sign;
    counts_ = &counts;
    occupied_.assign((rows.size() + 1) * grid_.words, 0);
    descend(0, 0);
  }

  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t tuples() const { return tuples_; }

 private:
  void descend(std::size_t level, std::size_t h_total) {
    const auto& rows = *rows_;
    if (level == rows.size()) {
      ++tuples_;
      if (counts_->size() <= h_total) counts_->resize(h_total + 1, 0);
      (*counts_)[h_total] += sign_;
      return;
    }
    const std::uint64_t* occ = &occupied_[level * grid_.words];
    std::uint64_t* next = &occupied_[(level + 1) * grid_.words];
    for (const auto& p : rows[level]->paths) {
      if (++nodes_ > budget_)
        throw BudgetExceeded("lgv_signed_sum: tuple budget of " + std::to_string(budget_) + " exceeded");
      const std::uint64_t* m = &masks_[p.mask_offset];
      bool clash = false;
      for (std::size_t w = 0; w < grid_.words && !clash; ++w) clash = (occ[w] & m[w]) != 0;
      if (clash) continue;
      for (std::size_t w = 0; w < grid_.words; ++w) next[w] = occ[w] | m[w];
      descend(level + 1, h_total + p.h);
    }
  }

  const Grid& grid_;
  std::vector<std::uint64_t>& masks_;
  std::uint64_t budget_;
  const std::vector<const PathSet*>* rows_ = nullptr;
  long sign_ = 1;
  std::vector<long long>* counts_ = nullptr;
  std::vector<std::uint64_t> occupied_;
  std::uint64_t nodes_ = 0;
  std::uint64_t tuples_ = 0;
};

long permutation_sign(const std::vector<std::size_t>& perm) {
  long sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

}  // namespace

LgvResult lgv_signed_sum(const ITConfig& config, const PathParams& params, std::uint64_t budget) {
  params.validate();
  config.validate();
  const std::size_t n = config.order();
  LgvResult result;
  if (n == 0) {
    result.signed_sum = Scalar(1);
    result.nonintersecting_tuples = 1;
    return result;
  }

  Grid grid;
  long xmax = config.terminals.back().x;
  grid.x0 = config.initials.back().x;
  long ymax = 0;
  for (const auto& p : config.initials) ymax = std::max(ymax, p.y);
  for (const auto& p : config.terminals) ymax = std::max(ymax, p.y);
  ymax += xmax - grid.x0;
  grid.width = xmax - grid.x0 + 1;
  const auto cells = static_cast<std::size_t>(grid.width * (ymax + 1));
  grid.words = (cells + 63) / 64;

  // Zero-weight H steps cannot contribute; dropping them keeps enumeration finite for ell = 0.
  const int ell = params.t.is_zero() ? 0 : params.ell;
  std::vector<std::uint64_t> masks;
  std::vector<PathSet> sets(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto& set = sets[i * n + j];
      for (const auto& path : enumerate_paths(config.initials[i], config.terminals[j], ell)) {
        EncodedPath e{path.h_count(), masks.size()};
        masks.resize(masks.size() + grid.words, 0);
        for (const Point& v : path.vertices(ell)) {
          const std::size_t c = grid.cell(v);
          masks[e.mask_offset + c / 64] |= std::uint64_t{1} << (c % 64);
        }
        set.paths.push_back(e);
      }
    }
  }

  std::vector<long long> counts;
  TupleSearch search(grid, masks, budget);
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    std::vector<const PathSet*> rows(n);
    bool empty = false;
    for (std::size_t i = 0; i < n; ++i) {
      rows[i] = &sets[i * n + sigma[i]];
      empty = empty || rows[i]->paths.empty();
    }
    if (!empty) search.run(rows, permutation_sign(sigma), counts);
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  Scalar sum;
  for (std::size_t h = 0; h < counts.size(); ++h)
    if (counts[h] != 0) sum += Scalar(mpz_class(static_cast<long>(counts[h]))) * params.t.pow(static_cast<long>(h));
  result.signed_sum = std::move(sum);
  result.nodes_visited = search.nodes();
  result.nonintersecting_tuples = search.tuples();
  return result;
}

SquareMatrix delannoy_matrix(std::size_t n, const Scalar& t) {
  if (n == 0) throw std::invalid_argument("delannoy_matrix: order must be at least 1");
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == 0 || j == 0)
        m(i, j) = Scalar(1);
      else
        m(i, j) = m(i - 1, j) + t * m(i - 1, j - 1) + m(i, j - 1);
    }
  }
  return m;
}

}  // namespace hgx::paths
