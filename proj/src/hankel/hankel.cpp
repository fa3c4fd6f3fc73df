#include "hgx/hankel.hpp"

#include <string>
#include <utility>

namespace hgx::hankel {

ExactMatrix build(std::span<const Scalar> seq, std::size_t shift, std::size_t n) {
  if (seq.size() < terms_needed(shift, n))
    throw InsufficientTerms("hankel::build: order " + std::to_string(n) + " with shift " + std::to_string(shift) +
                            " needs " + std::to_string(terms_needed(shift, n)) + " terms, got " +
                            std::to_string(seq.size()));
  ExactMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = seq[i + j + shift];
  return m;
}

namespace {

// Swaps in the first row at or below k with a nonzero entry in column k.
// Returns false when the column is zero there.
bool pivot_rows(ExactMatrix& m, std::size_t k, int& sign) {
  const std::size_t n = m.order();
  std::size_t p = k;
  while (p < n && m(p, k).is_zero()) ++p;
  if (p == n) return false;
  if (p != k) {
    for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(p, j));
    sign = -sign;
  }
  return true;
}

}  // namespace

Scalar det_bareiss(ExactMatrix m) {
  const std::size_t n = m.order();
  if (n == 0) return Scalar(1);
  int sign = 1;
  Scalar prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!pivot_rows(m, k, sign)) return Scalar();
    const Scalar pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Scalar lead = m(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        Scalar v = m(i, j) * pivot;
        if (!lead.is_zero()) v -= lead * m(k, j);
        m(i, j) = v / prev;
      }
      m(i, k) = Scalar();
    }
    prev = pivot;
  }
  Scalar d = m(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

Scalar det_gauss(ExactMatrix m) {
  const std::size_t n = m.order();
  int sign = 1;
  Scalar det(1);
  for (std::size_t k = 0; k < n; ++k) {
    if (!pivot_rows(m, k, sign)) return Scalar();
    const Scalar pivot = m(k, k);
    det *= pivot;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      const Scalar factor = m(i, k) / pivot;
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= factor * m(k, j);
      m(i, k) = Scalar();
    }
  }
  return sign < 0 ? -det : det;
}

Scalar det_exact(const ExactMatrix& m) {
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j)
      if (!m(i, j).is_polynomial()) return det_gauss(m);
  return det_bareiss(m);
}

std::vector<Scalar> det_sequence(std::span<const Scalar> seq, std::size_t shift, std::size_t n_max) {
  std::vector<Scalar> out;
  out.reserve(n_max);
  if (n_max == 0) return out;
  ExactMatrix h = build(seq, shift, n_max);

  bool polynomial = true;
  for (std::size_t i = 0; i < n_max && polynomial; ++i)
    for (std::size_t j = 0; j < n_max && polynomial; ++j) polynomial = h(i, j).is_polynomial();

  // Without row exchanges the k-th Bareiss pivot is the leading k x k minor,
  // so one elimination yields the whole prefix up to the first vanishing minor.
  if (polynomial) {
    ExactMatrix m = h;
    Scalar prev(1);
    for (std::size_t k = 0; k < n_max; ++k) {
      const Scalar pivot = m(k, k);
      out.push_back(pivot);
      if (pivot.is_zero()) {
        out.pop_back();
        break;
      }
      for (std::size_t i = k + 1; i < n_max; ++i) {
        const Scalar lead = m(i, k);
        for (std::size_t j = k + 1; j < n_max; ++j) {
          Scalar v = m(i, j) * pivot;
          if (!lead.is_zero()) v -= lead * m(k, j);
          m(i, j) = v / prev;
        }
        m(i, k) = Scalar();
      }
      prev = pivot;
    }
  }
  for (std::size_t n = out.size() + 1; n <= n_max; ++n) out.push_back(det_exact(h.leading(n)));
  return out;
}

std::optional<Period> detect_period(std::span<const Scalar> seq, std::size_t max_period) {
  const std::size_t len = seq.size();
  for (std::size_t offset = 0; offset < len; ++offset) {
    for (std::size_t p = 1; p <= max_period; ++p) {
      if (offset + p > len) break;
      const std::size_t comparisons = len - offset - p;
      if (comparisons < 2 * p) break;
      bool ok = true;
      for (std::size_t i = offset; i + p < len && ok; ++i) ok = seq[i] == seq[i + p];
      if (ok) return Period{p, offset};
    }
  }
  return std::nullopt;
}

}  // namespace hgx::hankel
