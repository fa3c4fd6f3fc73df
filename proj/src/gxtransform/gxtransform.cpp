#include "hgx/gxtransform.hpp"

#include <algorithm>
#include <map>

#include "hgx/hankel.hpp"

namespace hgx::gx {

namespace {

std::string x_power_string(int e) {
  if (e == 0) return "1";
  if (e == 1) return "x";
  return "x^" + std::to_string(e);
}

std::string wrap(const std::string& s) { return "(" + s + ")"; }

}  // namespace

void QuadFE::validate() const {
  if (d < 0) throw std::invalid_argument("QuadFE: d must be nonnegative");
  if (k < 1) throw std::invalid_argument("QuadFE: k must be at least 1 (k = 0 has no unique solution)");
  if (u.at_zero().is_zero()) throw std::invalid_argument("QuadFE: u(0) must be nonzero");
  if (v.at_zero().is_zero()) throw std::invalid_argument("QuadFE: v(0) must be nonzero");
}

QuadraticForm QuadFE::quadratic() const {
  return {v.mul_x_pow(static_cast<std::size_t>(k)), u, -RatSeries(x_pow(static_cast<std::size_t>(d)))};
}

std::string QuadFE::to_string() const {
  std::string tail;
  if (v == RatSeries(1))
    tail = " + " + x_power_string(k) + "*F";
  else if (v == RatSeries(-1))
    tail = " - " + x_power_string(k) + "*F";
  else
    tail = " + " + x_power_string(k) + "*" + wrap(v.to_string()) + "*F";
  return "F = " + x_power_string(d) + "/(" + u.to_string() + tail + ")";
}

bool fe_equal(const QuadFE& a, const QuadFE& b) { return a.d == b.d && a.k == b.k && a.u == b.u && a.v == b.v; }

QuadFE canonicalize(const QuadraticForm& q) {
  using Reason = CanonicalizeError::Reason;
  if (q.a.is_zero()) throw CanonicalizeError(Reason::Linear, "canonicalize: a = 0, the equation is linear and F is rational");
  if (q.b.at_zero().is_zero())
    throw CanonicalizeError(Reason::NoPowerSeriesBranch, "canonicalize: b(0) = 0, no canonical power-series branch");
  if (q.c.is_zero()) throw CanonicalizeError(Reason::ZeroSolution, "canonicalize: c = 0, the power-series solution is F = 0");
  const RatSeries neg_c = -q.c;
  const std::size_t d = neg_c.ord();
  const RatSeries w = neg_c.div_x_pow(d);
  QuadFE fe;
  fe.d = static_cast<int>(d);
  fe.u = q.b / w;
  const RatSeries a_over_w = q.a / w;
  const std::size_t k = a_over_w.ord();
  if (k == 0) throw CanonicalizeError(Reason::NonUnique, "canonicalize: k = 0, the power-series solution is not unique");
  fe.k = static_cast<int>(k);
  fe.v = a_over_w.div_x_pow(k);
  return fe;
}

QuadFE path_fe(const paths::PathParams& params) {
  params.validate();
  // x^2 F^2 + (t x^ell - 1) F + 1 = 0
  const auto ell = static_cast<std::size_t>(params.ell);
  Poly b = Poly::monomial(params.t, ell) - Poly::constant(Scalar(1));
  return canonicalize({RatSeries(x_pow(2)), RatSeries(b), RatSeries(1)});
}

ULSplit split_u(const QuadFE& fe) {
  const auto cut = static_cast<std::size_t>(fe.d + 2);
  ULSplit s;
  s.u_low = fe.u.truncated(cut);
  s.u_high = (fe.u - RatSeries(s.u_low)).div_x_pow(cut);
  return s;
}

Scalar FactorChain::multiplier(long n) const {
  Scalar m(sign);
  for (const auto& f : factors) m *= f.base.pow(n - f.offset);
  return m;
}

std::string FactorChain::to_string() const {
  std::string s = "det H_n(F) = ";
  if (sign < 0) s += "-";
  for (const auto& f : factors) {
    std::string e = f.offset == 0 ? "n" : "(n-" + std::to_string(f.offset) + ")";
    s += wrap(f.base.to_string()) + "^" + e + " * ";
  }
  s += delta == 0 ? "det H_n(G)" : "det H_{n-" + std::to_string(delta) + "}(G)";
  return s;
}

namespace {

// Merges factors by offset and drops unit bases. A base of -1 contributes
// (-1)^n (-1)^offset, so it is rebased to offset 0 with the rest moved into sign.
std::vector<Factor> merge_factors(std::vector<Factor> in, int& sign) {
  std::map<int, Scalar> by_offset;
  for (auto& f : in) {
    if (f.base == Scalar(-1) && f.offset != 0) {
      if (f.offset % 2 != 0) sign = -sign;
      f.offset = 0;
    }
    auto [it, inserted] = by_offset.try_emplace(f.offset, f.base);
    if (!inserted) it->second *= f.base;
  }
  std::vector<Factor> out;
  for (auto& [offset, base] : by_offset)
    if (!base.is_one()) out.push_back({base, offset});
  return out;
}

}  // namespace

FactorChain compose(const FactorChain& first, const FactorChain& then) {
  FactorChain c;
  c.sign = first.sign * then.sign;
  c.delta = first.delta + then.delta;
  std::vector<Factor> all = first.factors;
  for (const auto& f : then.factors) all.push_back({f.base, f.offset + first.delta});
  c.factors = merge_factors(std::move(all), c.sign);
  return c;
}

std::string LinearRelation::to_string() const {
  std::string s = "G = ";
  if (!offset.is_zero()) s += wrap(offset.to_string()) + " + ";
  if (x_exponent != 0) s += "x^" + std::to_string(x_exponent) + "*";
  s += wrap(scale.to_string()) + "*F";
  return s;
}

std::pair<QuadFE, FactorChain> normalize_const(const QuadFE& fe) {
  fe.validate();
  const Scalar u0 = fe.u.at_zero();
  if (u0.is_one()) return {fe, FactorChain{}};
  QuadFE g = fe;
  g.u = fe.u / RatSeries(u0);
  g.v = fe.v / RatSeries(u0 * u0);
  FactorChain chain;
  chain.factors = merge_factors({{u0.inverse(), 0}}, chain.sign);
  return {g, chain};
}

QuadraticResult transform_quadratic(const QuadFE& fe) {
  fe.validate();
  if (!fe.u.at_zero().is_one()) throw std::invalid_argument("transform_quadratic: requires u(0) = 1; normalize first");
  const ULSplit s = split_u(fe);
  const RatSeries u_low(s.u_low);
  const auto d = static_cast<std::size_t>(fe.d);
  const auto k = static_cast<std::size_t>(fe.k);

  QuadraticResult r;
  RatSeries numer;
  RatSeries a;
  const RatSeries denom = u_low - s.u_high.mul_x_pow(d + 2);
  if (fe.k >= 2) {
    // G = (-x^(k-2) v - u_L u_H) / (u_L - x^(d+2) u_H - x^(d+2) G)
    numer = -fe.v.mul_x_pow(k - 2) - u_low * s.u_high;
    a = -RatSeries(x_pow(d + 2));
    r.relation = {-s.u_high, -fe.v, fe.k - fe.d - 2};
  } else {
    // G = (-v - x u_L u_H) / (u_L - x^(d+2) u_H - x^(d+1) G)
    numer = -fe.v - (u_low * s.u_high).mul_x_pow(1);
    a = -RatSeries(x_pow(d + 1));
    r.relation = {-s.u_high.mul_x_pow(1), -fe.v, -fe.d};
    r.shifted_hankel = true;
  }
  // (denom + a G) G = numer
  r.next = canonicalize({a, denom, -numer});
  r.chain.sign = (fe.d * (fe.d + 1) / 2) % 2 == 0 ? 1 : -1;
  r.chain.delta = fe.d + 1;
  return r;
}

std::vector<Scalar> series_of_fe(const QuadFE& fe, std::size_t n_max) {
  fe.validate();
  const std::size_t count = n_max + 1;
  const std::vector<Scalar> u = fe.u.expand(count);
  const std::vector<Scalar> v = fe.v.expand(count);
  const auto d = static_cast<std::size_t>(fe.d);
  const auto k = static_cast<std::size_t>(fe.k);
  const Scalar u0_inv = u[0].inverse();
  std::vector<Scalar> f(count);
  std::vector<Scalar> sq;  // coefficients of F^2
  sq.reserve(count);
  // F (u + x^k v F) = x^d, solved coefficient by coefficient.
  for (std::size_t n = 0; n < count; ++n) {
    Scalar rhs = n == d ? Scalar(1) : Scalar();
    for (std::size_t j = 1; j <= n; ++j)
      if (!u[j].is_zero() && !f[n - j].is_zero()) rhs -= u[j] * f[n - j];
    if (n >= k) {
      const std::size_t m = n - k;
      Scalar s;
      for (std::size_t i = 0; i <= m; ++i)
        if (!f[i].is_zero() && !f[m - i].is_zero()) s += f[i] * f[m - i];
      sq.push_back(std::move(s));
      for (std::size_t l = 0; l <= m; ++l)
        if (!v[l].is_zero() && !sq[m - l].is_zero()) rhs -= v[l] * sq[m - l];
    }
    f[n] = rhs * u0_inv;
  }
  return f;
}

QuadFE shift_out(const QuadFE& fe, int j) {
  fe.validate();
  if (j < 1) throw std::invalid_argument("shift_out: j must be positive");
  const auto jj = static_cast<std::size_t>(j);
  const RatSeries p(Poly(series_of_fe(fe, jj - 1)));
  const QuadraticForm q = fe.quadratic();
  // a (p + x^j S)^2 + b (p + x^j S) + c = 0, divided by x^j.
  QuadraticForm s;
  s.a = q.a.mul_x_pow(jj);
  s.b = RatSeries(2) * q.a * p + q.b;
  s.c = (q.a * p * p + q.b * p + q.c).div_x_pow(jj);
  return canonicalize(s);
}

QuadFE add_constant(const QuadFE& fe, const Scalar& c) {
  fe.validate();
  const QuadraticForm q = fe.quadratic();
  const RatSeries rc(c);
  // F = H - c in a F^2 + b F + c0 = 0.
  return canonicalize({q.a, q.b - RatSeries(2) * q.a * rc, q.a * rc * rc - q.b * rc + q.c});
}

const char* to_string(StepKind kind) {
  switch (kind) {
    case StepKind::Normalize: return "normalize";
    case StepKind::Quadratic: return "quadratic";
    case StepKind::Shift: return "shift";
  }
  return "?";
}

const char* to_string(OrbitStatus status) {
  switch (status) {
    case OrbitStatus::Cycle: return "cycle";
    case OrbitStatus::NoCycle: return "no_cycle";
    case OrbitStatus::RationalTerminal: return "rational_terminal";
  }
  return "?";
}

TStep apply_T(const QuadFE& fe) {
  fe.validate();
  TStep step;
  step.from = fe;
  const Scalar u0 = fe.u.at_zero();
  if (!u0.is_one()) {
    auto [g, chain] = normalize_const(fe);
    step.kind = StepKind::Normalize;
    step.to = std::move(g);
    step.chain = std::move(chain);
    step.relation = "G = " + wrap(u0.to_string()) + "*F";
    return step;
  }
  QuadraticResult q = transform_quadratic(fe);
  step.chain = q.chain;
  step.relation = q.relation.to_string();
  if (!q.shifted_hankel) {
    step.kind = StepKind::Quadratic;
    step.to = std::move(q.next);
    return step;
  }
  // det H^1_m(G) = det H_m(x^{-1}(G - G(0)))
  step.kind = StepKind::Shift;
  step.to = shift_out(q.next, 1);
  step.intermediate = std::move(q.next);
  step.relation += "; T(F) = (G - G(0))/x";
  return step;
}

OrbitTrace orbit(const QuadFE& fe, std::size_t max_steps) {
  if (max_steps < 1) throw std::invalid_argument("orbit: max_steps must be at least 1");
  fe.validate();
  OrbitTrace trace;
  trace.states.push_back(fe);
  for (std::size_t s = 0; s < max_steps; ++s) {
    TStep step;
    try {
      step = apply_T(trace.states.back());
    } catch (const CanonicalizeError& e) {
      if (!e.rational()) throw;
      trace.status = OrbitStatus::RationalTerminal;
      trace.terminal_reason = e.what();
      return trace;
    }
    const QuadFE next = step.to;
    trace.steps.push_back(std::move(step));
    trace.states.push_back(next);
    const std::size_t j = trace.states.size() - 1;
    for (std::size_t i = 0; i < j; ++i) {
      if (!fe_equal(trace.states[i], next)) continue;
      trace.status = OrbitStatus::Cycle;
      trace.cycle = std::make_pair(i, j);
      for (std::size_t m = 0; m < i; ++m) trace.prefix = compose(trace.prefix, trace.steps[m].chain);
      for (std::size_t m = i; m < j; ++m) trace.recurrence = compose(trace.recurrence, trace.steps[m].chain);
      return trace;
    }
  }
  trace.status = OrbitStatus::NoCycle;
  return trace;
}

namespace {

std::vector<Scalar> direct_dets(const QuadFE& fe, std::size_t n_max) {
  if (n_max == 0) return {};
  const auto seq = series_of_fe(fe, 2 * n_max);
  return hankel::det_sequence(seq, 0, n_max);
}

}  // namespace

std::vector<Scalar> recurrence_dets(const OrbitTrace& trace, std::size_t n_max) {
  if (trace.status != OrbitStatus::Cycle || !trace.cycle)
    throw std::invalid_argument("recurrence_dets: the orbit did not close");
  if (trace.recurrence.delta <= 0)
    throw std::invalid_argument("recurrence_dets: cycle without index shift cannot determine determinants");
  const QuadFE& start = trace.states.front();
  const QuadFE& cyc = trace.states[trace.cycle->first];
  const auto cyc_delta = static_cast<std::size_t>(trace.recurrence.delta);
  const auto pre_delta = static_cast<std::size_t>(trace.prefix.delta);

  // det H_m(F_i) for m = 0..n_max, seeded with m < cyc_delta.
  std::vector<Scalar> cyc_det(n_max + 1);
  cyc_det[0] = Scalar(1);
  const auto seed = direct_dets(cyc, std::min(n_max, cyc_delta - 1));
  for (std::size_t m = 1; m <= seed.size(); ++m) cyc_det[m] = seed[m - 1];
  for (std::size_t m = cyc_delta; m <= n_max; ++m)
    cyc_det[m] = trace.recurrence.multiplier(static_cast<long>(m)) * cyc_det[m - cyc_delta];

  std::vector<Scalar> out(n_max);
  const auto head = pre_delta > 1 ? direct_dets(start, std::min(n_max, pre_delta - 1)) : std::vector<Scalar>{};
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (n < pre_delta)
      out[n - 1] = head[n - 1];
    else
      out[n - 1] = trace.prefix.multiplier(static_cast<long>(n)) * cyc_det[n - pre_delta];
  }
  return out;
}

}  // namespace hgx::gx
