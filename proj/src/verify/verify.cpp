#include "hgx/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "hgx/gxtransform.hpp"
#include "hgx/hankel.hpp"
#include "hgx/pathcount.hpp"

namespace hgx::verify {

namespace {

constexpr std::size_t kMaxMessages = 6;

}  // namespace

void Check::expect(bool ok, const std::string& what) {
  ++count_;
  if (ok) return;
  ++failures_;
  if (messages_.size() < kMaxMessages) messages_.push_back(what);
}

void Check::expect_equal(const Scalar& got, const Scalar& want, const std::string& what) {
  ++count_;
  if (got == want) return;
  ++failures_;
  if (messages_.size() < kMaxMessages)
    messages_.push_back(what + ": got " + got.to_string() + ", want " + want.to_string());
}

void Check::note(const std::string& text) { notes_.push_back(text); }

std::string Check::summary() const {
  std::string s;
  if (passed()) {
    s = std::to_string(count_) + " checks";
  } else {
    s = std::to_string(failures_) + " of " + std::to_string(count_) + " checks failed";
    for (const auto& m : messages_) s += "; " + m;
  }
  for (const auto& n : notes_) s += "; " + n;
  return s;
}

namespace {

using gx::FactorChain;
using gx::QuadFE;
using paths::PathParams;

const Scalar kT = Scalar::t();

Poly ip(std::initializer_list<long> c) {
  std::vector<Scalar> v;
  for (long x : c) v.emplace_back(x);
  return make_poly(std::move(v));
}

RatSeries rs(std::initializer_list<long> num, std::initializer_list<long> den = {1}) {
  return RatSeries(ip(num), ip(den));
}

QuadFE fe(int d, RatSeries u, int k, RatSeries v) {
  QuadFE f;
  f.d = d;
  f.u = std::move(u);
  f.k = k;
  f.v = std::move(v);
  f.validate();
  return f;
}

std::vector<Scalar> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<Scalar> repeat(const std::vector<Scalar>& block, std::size_t times) {
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), block.begin(), block.end());
  return out;
}

std::vector<Scalar> dets_of(std::span<const Scalar> seq, std::size_t shift, std::size_t n) {
  return hankel::det_sequence(seq, shift, n);
}

std::vector<Scalar> fe_dets(const QuadFE& f, std::size_t shift, std::size_t n) {
  const auto seq = gx::series_of_fe(f, hankel::terms_needed(shift, n));
  return dets_of(seq, shift, n);
}

std::vector<Scalar> path_terms(int ell, const Scalar& t, std::size_t n_max) {
  return paths::f_series(PathParams{ell, t}, n_max);
}

void expect_seq(Check& c, std::span<const Scalar> got, std::span<const Scalar> want, const std::string& what) {
  c.expect(got.size() >= want.size(), what + ": too few terms");
  for (std::size_t i = 0; i < want.size() && i < got.size(); ++i)
    c.expect_equal(got[i], want[i], what + " [" + std::to_string(i) + "]");
}

void expect_chain(Check& c, const FactorChain& got, const FactorChain& want, const std::string& what) {
  c.expect(got == want, what + ": got " + got.to_string() + ", want " + want.to_string());
}

void expect_fe(Check& c, const QuadFE& got, const QuadFE& want, const std::string& what) {
  c.expect(gx::fe_equal(got, want), what + ": got " + got.to_string() + ", want " + want.to_string());
}

FactorChain chain(int sign, std::vector<gx::Factor> factors, int delta) {
  FactorChain f;
  f.sign = sign;
  f.factors = std::move(factors);
  f.delta = delta;
  return f;
}

// det H_n(from) = multiplier(n) det H_{n - delta}(to) for delta <= n <= n_max.
void expect_sound(Check& c, const QuadFE& from, const QuadFE& to, const FactorChain& ch, std::size_t n_max,
                  const std::string& what) {
  const auto lhs = fe_dets(from, 0, n_max);
  const auto delta = static_cast<std::size_t>(ch.delta);
  const auto rhs = delta < n_max ? fe_dets(to, 0, n_max - delta) : std::vector<Scalar>{};
  for (std::size_t n = std::max<std::size_t>(delta, 1); n <= n_max; ++n) {
    const Scalar tail = n == delta ? Scalar(1) : rhs[n - delta - 1];
    c.expect_equal(lhs[n - 1], ch.multiplier(static_cast<long>(n)) * tail, what + " n=" + std::to_string(n));
  }
}

void expect_orbit_sound(Check& c, const gx::OrbitTrace& tr, std::size_t n_max, const std::string& what) {
  for (std::size_t i = 0; i < tr.steps.size(); ++i)
    expect_sound(c, tr.steps[i].from, tr.steps[i].to, tr.steps[i].chain, n_max,
                 what + " step " + std::to_string(i) + " (" + gx::to_string(tr.steps[i].kind) + ")");
  if (tr.cycle) {
    const auto& cyc = tr.states[tr.cycle->first];
    expect_sound(c, tr.states.front(), cyc, tr.prefix, n_max, what + " prefix");
    expect_sound(c, cyc, cyc, tr.recurrence, n_max, what + " recurrence");
  }
}

// ell = 3, t = 1: F0 = 1/(1 - x^3 - x^2 F0).
QuadFE f0_l3() { return gx::path_fe(PathParams{3, Scalar(1)}); }

// The worked transformations 1-4 for ell = 3.
std::vector<QuadFE> l3_intermediates() {
  return {
      fe(0, rs({1, 0, 0, 1}, {1, 1}), 2, rs({-1}, {1, 1})),  // (1+x)/(1+x^3-x^2 F1)
      fe(2, rs({1, 0, -2, -1}), 2, rs({-1, -1})),            // x^2/(1-2x^2-x^3-(x^3+x^2) F2)
      fe(0, rs({1, 0, -2, -1}, {1, 1}), 4, rs({-1}, {1, 1})),  // (1+x)/(1-2x^2-x^3-x^4 F3)
      fe(0, rs({1, 0, 0, 1}), 2, rs({-1, -1})),              // 1/(1+x^3-(x^3+x^2) F4)
  };
}

Scalar one_plus_t_pow(long e) { return (Scalar(1) + kT).pow(e); }

Check crit_seq() {
  Check c;
  expect_seq(c, path_terms(3, 1, 13), ints({1, 0, 1, 1, 2, 3, 6, 10, 20, 36, 72, 136, 273, 532}), "ell=3 t=1");
  expect_seq(c, path_terms(1, 1, 9), ints({1, 1, 2, 4, 9, 21, 51, 127, 323, 835}), "Motzkin");
  expect_seq(c, path_terms(2, 1, 11), ints({1, 0, 2, 0, 6, 0, 22, 0, 90, 0, 394, 0}), "aerated Schroeder");
  expect_seq(c, path_terms(0, 0, 14), ints({1, 0, 1, 0, 2, 0, 5, 0, 14, 0, 42, 0, 132, 0, 429}), "aerated Catalan");
  return c;
}

Check crit_oracle() {
  Check c;
  for (int ell = 1; ell <= 4; ++ell)
    for (const Scalar& t : {Scalar(0), Scalar(1), Scalar(2), kT}) {
      const PathParams p{ell, t};
      expect_seq(c, paths::f_series(p, 30), paths::f_dp_oracle(p, 30),
                 "ell=" + std::to_string(ell) + " t=" + t.to_string());
    }
  return c;
}

Check crit_prop1() {
  Check c;
  const auto dets = dets_of(path_terms(1, kT, 20), 0, 10);
  for (std::size_t n = 1; n <= 10; ++n) c.expect_equal(dets[n - 1], Scalar(1), "det H_" + std::to_string(n));
  const auto dyck = dets_of(path_terms(0, 0, 20), 0, 10);
  for (std::size_t n = 1; n <= 10; ++n) c.expect_equal(dyck[n - 1], Scalar(1), "Dyck det H_" + std::to_string(n));
  return c;
}

Scalar prop2_value(long n) { return one_plus_t_pow(n % 2 == 0 ? n * n / 4 : (n - 1) * (n + 1) / 4); }

Check crit_prop2() {
  Check c;
  const auto dets = dets_of(path_terms(2, kT, 16), 0, 8);
  for (long n = 1; n <= 8; ++n) c.expect_equal(dets[n - 1], prop2_value(n), "det H_" + std::to_string(n));
  return c;
}

Check crit_prop3() { return check_prop3(path_terms(3, 1, 2 * 42)); }

Check crit_largesch() {
  Check c;
  const auto dets = dets_of(paths::large_schroeder_series(kT, 16), 0, 8);
  for (long n = 1; n <= 8; ++n)
    c.expect_equal(dets[n - 1], one_plus_t_pow(n * (n - 1) / 2), "det H_" + std::to_string(n));
  const auto at1 = dets_of(paths::large_schroeder_series(1, 16), 0, 8);
  for (long n = 1; n <= 8; ++n)
    c.expect_equal(at1[n - 1], Scalar(2).pow(n * (n - 1) / 2), "t=1 det H_" + std::to_string(n));
  return c;
}

Check crit_l1missing() {
  Check c;
  const auto sym = dets_of(path_terms(1, kT, 21), 1, 10);
  c.expect_equal(sym[0], kT, "det H^1_1");
  c.expect_equal(sym[1], (kT - Scalar(1)) * (kT + Scalar(1)), "det H^1_2");
  for (std::size_t n = 3; n <= 10; ++n)
    c.expect_equal(sym[n - 1], kT * sym[n - 2] - sym[n - 3], "recurrence at n=" + std::to_string(n));
  expect_seq(c, dets_of(path_terms(1, 1, 37), 1, 18), repeat(ints({1, 0, -1, -1, 0, 1}), 3), "t=1");
  const auto two = dets_of(path_terms(1, 2, 25), 1, 12);
  for (long n = 1; n <= 12; ++n) c.expect_equal(two[n - 1], Scalar(n + 1), "t=2 det H^1_" + std::to_string(n));
  return c;
}

Scalar l2missing_value(long n) {
  if (n % 2 != 0) return Scalar(0);
  const Scalar s = (n / 2) % 2 == 0 ? Scalar(1) : Scalar(-1);
  return s * one_plus_t_pow(n * (n + 2) / 4);
}

Check crit_l2missing() {
  Check c;
  const auto dets = dets_of(path_terms(2, kT, 17), 1, 8);
  for (long n = 1; n <= 8; ++n) c.expect_equal(dets[n - 1], l2missing_value(n), "det H^1_" + std::to_string(n));
  return c;
}

paths::ITConfig axis_config(std::vector<long> xs, std::vector<long> xts) {
  paths::ITConfig cfg;
  for (long x : xs) cfg.initials.push_back({x, 0});
  for (long x : xts) cfg.terminals.push_back({x, 0});
  return cfg;
}

void expect_lgv(Check& c, const paths::ITConfig& cfg, const PathParams& p, const std::string& what,
                const Scalar* want = nullptr, std::uint64_t* tuples = nullptr) {
  const auto lgv = paths::lgv_signed_sum(cfg, p);
  const Scalar det = hankel::det_exact(paths::path_weight_matrix(cfg, p));
  c.expect_equal(lgv.signed_sum, det, what);
  if (want) c.expect_equal(det, *want, what + " value");
  if (tuples) *tuples = lgv.nonintersecting_tuples;
}

Check crit_lgv() {
  Check c;
  const PathParams motzkin{1, kT};
  const Scalar one(1);
  std::uint64_t fig1_tuples = 0;
  expect_lgv(c, axis_config({0, -1, -2, -3}, {0, 1, 2, 3}), motzkin, "Figure 1", &one, &fig1_tuples);
  c.expect(fig1_tuples == 1, "Figure 1 has exactly one nonintersecting tuple, got " + std::to_string(fig1_tuples));
  const Scalar fig2 = kT.pow(4) - Scalar(3) * kT.pow(2) + Scalar(1);
  expect_lgv(c, axis_config({0, -1, -2, -3}, {1, 2, 3, 4}), motzkin, "Figure 2", &fig2);

  // Every order <= 3 configuration on the axis with |x| <= 4.
  std::size_t configs = 0;
  for (unsigned a = 1; a < 32; ++a)
    for (unsigned b = 1; b < 32; ++b) {
      const int n = std::popcount(a);
      if (n > 3 || std::popcount(b) != n) continue;
      std::vector<long> xs;
      std::vector<long> xts;
      for (long i = 0; i < 5; ++i) {
        if (a & (1u << i)) xs.push_back(-i);
        if (b & (1u << i)) xts.push_back(i);
      }
      const auto cfg = axis_config(xs, xts);
      for (int ell = 1; ell <= 3; ++ell) {
        expect_lgv(c, cfg, PathParams{ell, kT}, "ell=" + std::to_string(ell) + " config " + std::to_string(a) + "/" +
                                                   std::to_string(b));
        ++configs;
      }
    }
  // Points two apart with H = (2,0): (1+t)^(n(n-1)/2).
  for (long n = 1; n <= 3; ++n) {
    std::vector<long> xs;
    std::vector<long> xts;
    for (long i = 0; i < n; ++i) {
      xs.push_back(-2 * i);
      xts.push_back(2 * i);
    }
    const Scalar want = one_plus_t_pow(n * (n - 1) / 2);
    expect_lgv(c, axis_config(xs, xts), PathParams{2, kT}, "spaced order " + std::to_string(n), &want);
  }
  c.note(std::to_string(configs) + " sweep configurations");
  return c;
}

Check crit_delannoy() {
  Check c;
  for (long n = 1; n <= 6; ++n)
    c.expect_equal(hankel::det_exact(paths::delannoy_matrix(static_cast<std::size_t>(n), kT)),
                   one_plus_t_pow(n * (n - 1) / 2), "det M(0) order " + std::to_string(n));
  const auto m = paths::delannoy_matrix(4, 1);
  const long printed[4][4] = {{1, 1, 1, 1}, {1, 3, 5, 7}, {1, 5, 13, 25}, {1, 7, 25, 63}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      c.expect_equal(m(i, j), Scalar(printed[i][j]), "M(0)[" + std::to_string(i) + "][" + std::to_string(j) + "]");
  c.expect_equal(hankel::det_exact(m), Scalar(64), "det of the t=1 4x4 matrix");
  return c;
}

Check crit_gx_l3() {
  Check c;
  const QuadFE f0 = f0_l3();
  expect_fe(c, f0, fe(0, rs({1, 0, 0, -1}), 2, rs({-1})), "F0");
  const auto tr = gx::orbit(f0);
  c.expect(tr.status == gx::OrbitStatus::Cycle, std::string("status ") + gx::to_string(tr.status));
  if (!tr.cycle) return c;
  c.expect(tr.cycle->first == 0 && tr.cycle->second == 5, "cycle closes at F5 = F0");
  c.expect(tr.steps.size() == 5, "five steps");
  expect_chain(c, tr.recurrence, chain(-1, {}, 7), "recurrence");
  const auto want = l3_intermediates();
  for (std::size_t i = 0; i < want.size() && i + 1 < tr.states.size(); ++i)
    expect_fe(c, tr.states[i + 1], want[i], "F" + std::to_string(i + 1));
  const int deltas[5] = {1, 1, 3, 1, 1};
  for (std::size_t i = 0; i < 5 && i < tr.steps.size(); ++i)
    c.expect(tr.steps[i].chain.delta == deltas[i], "step " + std::to_string(i) + " index shift");
  c.expect(tr.steps.size() > 2 && tr.steps[2].chain.sign == -1, "Transformation 3 sign");
  return c;
}

Check crit_gx_examples() {
  Check c;
  // Example 1: Motzkin, fixed point.
  {
    const auto tr = gx::orbit(gx::path_fe(PathParams{1, kT}));
    c.expect(tr.cycle && tr.cycle->first == 0 && tr.cycle->second == 1, "Motzkin: one-step fixed point");
    expect_chain(c, tr.recurrence, chain(1, {}, 1), "Motzkin recurrence");
    if (tr.cycle)
      for (const auto& d : gx::recurrence_dets(tr, 10)) c.expect_equal(d, Scalar(1), "Motzkin det");
  }
  // Example 1 shifted, t = 1.
  {
    const QuadFE g1 = gx::shift_out(gx::path_fe(PathParams{1, Scalar(1)}), 1);
    expect_fe(c, g1, fe(0, rs({1, -2}), 3, rs({-1}, {1, 1})), "shifted Motzkin G1");
    const auto tr = gx::orbit(g1);
    c.expect(tr.cycle && tr.cycle->first == 0, "shifted Motzkin: returns to G1");
    if (tr.states.size() > 1) expect_fe(c, tr.states[1], fe(1, rs({1, -1, -2}), 2, rs({-1, -1})), "G2");
    expect_chain(c, tr.recurrence, chain(-1, {}, 3), "shifted Motzkin recurrence");
    if (tr.cycle) expect_seq(c, gx::recurrence_dets(tr, 18), repeat(ints({1, 0, -1, -1, 0, 1}), 3), "period 6");
  }
  // Example 2: ell = 2.
  {
    const auto tr = gx::orbit(gx::path_fe(PathParams{2, kT}));
    // The second transformation is a normalization followed by a quadratic step.
    c.expect(tr.cycle && tr.cycle->first == 0 && tr.cycle->second == 3, "ell=2: cycle back to F");
    if (tr.states.size() > 1) {
      const RatSeries opt(Scalar(1) + kT);
      QuadFE f1 = fe(0, RatSeries(make_poly({Scalar(1), Scalar(0), kT})) / opt, 2, RatSeries(-1) / opt);
      expect_fe(c, tr.states[1], f1, "ell=2 F1");
    }
    expect_chain(c, tr.recurrence, chain(1, {{Scalar(1) + kT, 1}}, 2), "ell=2 recurrence");
    if (tr.cycle) {
      const auto d = gx::recurrence_dets(tr, 8);
      for (long n = 1; n <= 8; ++n) c.expect_equal(d[n - 1], prop2_value(n), "ell=2 det H_" + std::to_string(n));
    }
  }
  // Example 3: 1/(1 - t x - x F).
  {
    const QuadFE f = gx::canonicalize({RatSeries(make_poly({Scalar(0), Scalar(1)})),
                                       RatSeries(make_poly({Scalar(-1), kT})), RatSeries(1)});
    expect_fe(c, f, fe(0, RatSeries(make_poly({Scalar(1), -kT})), 1, rs({-1})), "Example 3 F");
    const auto tr = gx::orbit(f);
    c.expect(tr.cycle && tr.cycle->first == 1 && tr.cycle->second == 3, "Example 3: G4 = G2");
    expect_chain(c, tr.prefix, chain(1, {}, 1), "Example 3 prefix");
    expect_chain(c, tr.recurrence, chain(1, {{Scalar(1) + kT, 0}}, 1), "Example 3 recurrence");
    if (tr.cycle) {
      const auto d = gx::recurrence_dets(tr, 8);
      for (long n = 1; n <= 8; ++n)
        c.expect_equal(d[n - 1], one_plus_t_pow(n * (n - 1) / 2), "Example 3 det H_" + std::to_string(n));
    }
  }
  // Example 4: ell = 2 shifted.
  {
    const QuadFE f1 = gx::shift_out(gx::path_fe(PathParams{2, kT}), 1);
    const RatSeries opt(Scalar(1) + kT);
    expect_fe(c, f1,
              fe(1, RatSeries(make_poly({Scalar(1), Scalar(0), -(Scalar(2) + kT)})) / opt, 3, RatSeries(-1) / opt),
              "Example 4 F1");
    const auto tr = gx::orbit(f1);
    c.expect(tr.cycle && tr.cycle->first == 0, "Example 4: returns to F1");
    expect_chain(c, tr.recurrence, chain(-1, {{Scalar(1) + kT, 0}}, 2), "Example 4 recurrence");
    if (tr.cycle) {
      const auto d = gx::recurrence_dets(tr, 8);
      for (long n = 1; n <= 8; ++n) c.expect_equal(d[n - 1], l2missing_value(n), "Example 4 det H_" + std::to_string(n));
    }
  }
  return c;
}

Check crit_soundness() {
  Check c;
  constexpr std::size_t n_max = 12;
  expect_orbit_sound(c, gx::orbit(f0_l3()), n_max, "ell=3");
  expect_orbit_sound(c, gx::orbit(gx::path_fe(PathParams{1, kT})), n_max, "Motzkin");
  expect_orbit_sound(c, gx::orbit(gx::shift_out(gx::path_fe(PathParams{1, Scalar(1)}), 1)), n_max, "shifted Motzkin");
  expect_orbit_sound(c, gx::orbit(gx::path_fe(PathParams{2, kT})), n_max, "ell=2");
  const QuadFE ex3 = gx::canonicalize(
      {RatSeries(make_poly({Scalar(0), Scalar(1)})), RatSeries(make_poly({Scalar(-1), kT})), RatSeries(1)});
  expect_orbit_sound(c, gx::orbit(ex3), n_max, "Example 3");
  expect_orbit_sound(c, gx::orbit(gx::shift_out(gx::path_fe(PathParams{2, kT}), 1)), n_max, "Example 4");
  return c;
}

Check crit_shift1_3() {
  Check c;
  const QuadFE f0 = f0_l3();
  const auto terms = gx::series_of_fe(f0, 2 * 42 + 3);
  const std::vector<Scalar> prefixes[3] = {
      ints({0, -1, 0, 1, 1, 0, -1, 0, 1, 0, -1, -1, 0, 1}),
      ints({1, 1, 1, 1, 0, 0, -1, -1, -1, -1, -1, 0, 0, 1}),
      ints({1, -1, -1, 0, 0, 0, -1, -1, 1, 1, 0, 0, 0, 1}),
  };
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto d = dets_of(terms, k, 42);
    expect_seq(c, d, repeat(prefixes[k - 1], 3), "det H^" + std::to_string(k));
    const auto per = hankel::detect_period(d, 14);
    c.expect(per && *per == hankel::Period{14, 0}, "period 14 for shift " + std::to_string(k));
  }

  // shift 1: F0 = 1 + x F1.
  const QuadFE f1 = gx::shift_out(f0, 1);
  expect_fe(c, f1, fe(1, rs({1, 0, -2, -1}, {1, 1}), 3, rs({-1}, {1, 1})), "shift 1 F1");
  const auto tr1 = gx::orbit(f1);
  c.expect(tr1.cycle && tr1.cycle->first == 0, "shift 1 returns to F1");
  expect_chain(c, tr1.recurrence, chain(-1, {}, 7), "shift 1 recurrence");
  if (tr1.states.size() > 3) {
    expect_fe(c, tr1.states[1], fe(1, rs({1, 0, -2, -1}), 3, rs({-1, -1})), "shift 1 F2");
    expect_fe(c, tr1.states[2], fe(0, rs({1, 0, -2, 1}, {1, 1, -1}), 3, rs({-1}, {1, 1, -1})), "shift 1 F3");
    expect_fe(c, tr1.states[3], fe(1, rs({1, 0, -2, 1}), 2, rs({-1, -1, 1})), "shift 1 F4");
  }

  // shift 2: F0 = 1 + x^2 G0, the third intermediate of the ell = 3 orbit.
  const QuadFE g0 = gx::shift_out(f0, 2);
  expect_fe(c, g0, l3_intermediates()[2], "shift 2 G0");
  const auto tr2 = gx::orbit(g0);
  expect_chain(c, tr2.recurrence, chain(-1, {}, 7), "shift 2 recurrence");

  // shift 3: F0 = 1 + x^2 + x^3 F1.
  const QuadFE h1 = gx::shift_out(f0, 3);
  expect_fe(c, h1, fe(0, rs({1, 0, -2, -1, -2}, {1, 2, 1, 1}), 5, rs({-1}, {1, 2, 1, 1})), "shift 3 F1");
  const auto tr3 = gx::orbit(h1);
  if (tr3.states.size() > 1) {
    // (1-2x-x^3)/(-1+4x^2+x^3+2x^4 + x^2(1+2x+x^2+x^3) F2)
    expect_fe(c, tr3.states[1], fe(0, rs({-1, 0, 4, 1, 2}, {1, -2, 0, -1}), 2, rs({1, 2, 1, 1}, {1, -2, 0, -1})),
              "shift 3 F2");
    c.expect_equal(tr3.states[1].u.at_zero(), Scalar(-1), "shift 3 F2 u(0)");
  }
  c.expect(tr3.cycle && tr3.cycle->first == 0, "shift 3 returns to F1");
  expect_chain(c, tr3.recurrence, chain(-1, {}, 7), "shift 3 recurrence");
  const bool has_d3 = std::any_of(tr3.steps.begin(), tr3.steps.end(), [](const gx::TStep& s) {
    return s.kind == gx::StepKind::Quadratic && s.from.d == 3;
  });
  c.expect(has_d3, "shift 3 uses a d=3 step");
  return c;
}

Check crit_shift4() {
  Check c;
  const QuadFE f0 = f0_l3();
  const auto terms = gx::series_of_fe(f0, 2 * 40 + 4);
  const auto h4 = dets_of(terms, 4, 40);
  const auto h0 = dets_of(terms, 0, 40);
  expect_seq(c, h4,
             ints({2, 3, 4, 0, 0, -4, -5, -6, -7, -8, 0, 0, 8, 9, 10, 11, 12, 0, 0, -12, -13, -14, -15, -16, 0, 0, 16}),
             "det H^4 prefix");
  for (std::size_t n = 8; n <= 40; ++n)
    c.expect_equal(h4[n - 1], Scalar(4) * h0[n - 2] - h4[n - 8], "recurrence at n=" + std::to_string(n));

  const QuadFE g0 = gx::shift_out(f0, 2);
  const auto hg = fe_dets(g0, 0, 20);
  for (std::size_t n = 1; n <= 20; ++n) c.expect_equal(hg[n - 1], -h0[n + 4], "det H_n(G0) at n=" + std::to_string(n));

  const QuadFE f1 = gx::shift_out(f0, 4);
  const RatSeries num = rs({2, 3, 2, 2, 1});
  expect_fe(c, f1, fe(0, rs({1, 0, -2, -1, -2, -2}) / num, 6, RatSeries(-1) / num), "shift 4 F1");
  const auto tr = gx::orbit(f1);
  c.expect(tr.status == gx::OrbitStatus::NoCycle, std::string("no cycle, got ") + gx::to_string(tr.status));
  if (tr.states.size() > 8) {
    const Scalar u0[4] = {Scalar(mpq_class(1, 2)), Scalar(mpq_class(4, 3)), Scalar(mpq_class(9, 8)),
                          Scalar(mpq_class(4, 3))};
    for (std::size_t i = 0; i < 4; ++i) {
      c.expect(tr.steps[2 * i].kind == gx::StepKind::Normalize, "normalize at step " + std::to_string(2 * i));
      c.expect_equal(tr.steps[2 * i].from.u.at_zero(), u0[i], "u(0) before step " + std::to_string(2 * i));
    }
    c.expect(tr.states[7].d == 2, "d=2 before the eighth step");
    FactorChain to_f9;
    for (std::size_t i = 0; i < 8; ++i) to_f9 = gx::compose(to_f9, tr.steps[i].chain);
    c.expect(to_f9.delta == 6, "F1 to F9 shifts the index by 6");
    for (long n = 6; n <= 12; ++n)
      c.expect_equal(to_f9.multiplier(n), Scalar(-4), "det H^4_n = -4 det H_{n-6}(F9) at n=" + std::to_string(n));
    const QuadFE f9 = tr.states[8];
    expect_fe(c, f9, gx::add_constant(g0, Scalar(mpq_class(1, 4))), "F9 = 1/4 + G0");
    const RatSeries n9 = rs({20, 16, -8, -4, 1});
    expect_fe(c, f9, fe(0, rs({16, 0, -32, -16, 8}) / n9, 4, RatSeries(-16) / n9), "F9 printed form");
  } else {
    c.expect(false, "orbit too short");
  }
  return c;
}

}  // namespace

Check check_prop3(std::span<const Scalar> f_terms) {
  Check c;
  const std::vector<Scalar> block = ints({1, 1, 0, 0, -1, -1, -1, -1, -1, 0, 0, 1, 1, 1});
  if (f_terms.size() < hankel::terms_needed(0, 42)) {
    c.expect(false, "need " + std::to_string(hankel::terms_needed(0, 42)) + " terms");
    return c;
  }
  const auto dets = dets_of(f_terms, 0, 42);
  expect_seq(c, dets, repeat(block, 3), "det H_n");
  const auto per = hankel::detect_period(dets, 21);
  c.expect(per && *per == hankel::Period{14, 0},
           per ? "detected (" + std::to_string(per->period) + "," + std::to_string(per->offset) + ")" : "no period");
  c.expect_equal(hankel::det_exact(hankel::build(f_terms, 0, 0)), Scalar(1), "det H_0");
  c.expect_equal(Scalar(1), dets[13], "det H_0 = det H_14");
  return c;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "seq", "path-count sequences", crit_seq},
      {2, "oracle", "series vs dynamic programming", crit_oracle},
      {3, "prop1", "Motzkin Hankel determinants are 1", crit_prop1},
      {4, "prop2", "ell=2 Hankel determinants", crit_prop2},
      {5, "prop3", "ell=3 period 14", crit_prop3},
      {6, "largesch", "large Schroeder Hankel determinants", crit_largesch},
      {7, "l1missing", "shifted Motzkin determinants", crit_l1missing},
      {8, "l2missing", "shifted ell=2 determinants", crit_l2missing},
      {9, "lgv", "nonintersecting paths vs determinant", crit_lgv},
      {10, "delannoy", "Delannoy matrix determinant", crit_delannoy},
      {11, "gx-l3", "transformation orbit for ell=3", crit_gx_l3},
      {12, "gx-examples", "transformation orbits for the examples", crit_gx_examples},
      {13, "soundness", "every transformation step against direct determinants", crit_soundness},
      {14, "shift1-3", "shifted ell=3 sequences, shifts 1-3", crit_shift1_3},
      {15, "shift4", "shifted ell=3 sequence, shift 4", crit_shift4},
  };
  return all;
}

Result run(const Criterion& crit) {
  Result r{crit.number, crit.name, crit.title, false, {}, 0.0};
  const auto start = std::chrono::steady_clock::now();
  try {
    const Check c = crit.run();
    r.passed = c.passed();
    r.detail = c.summary();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<Result> run_all(const std::optional<std::string>& only) {
  std::vector<Result> out;
  for (const auto& c : criteria())
    if (!only || *only == c.name || *only == std::to_string(c.number)) out.push_back(run(c));
  if (only && out.empty()) throw std::invalid_argument("unknown criterion: " + *only);
  return out;
}

std::string format(const Result& r) {
  char head[64];
  std::snprintf(head, sizeof head, "%s %2d %-12s %7.3fs  ", r.passed ? "PASS" : "FAIL", r.number, r.name.c_str(),
                r.seconds);
  return head + r.title + ": " + r.detail;
}

}  // namespace hgx::verify
