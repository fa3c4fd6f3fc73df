#include <doctest.h>

#include "hgx/gxtransform.hpp"
#include "hgx/hankel.hpp"

using namespace hgx;
using namespace hgx::gx;

namespace {

const Scalar t = Scalar::t();

Poly px(std::initializer_list<long> c) {
  std::vector<Scalar> v;
  for (long x : c) v.emplace_back(x);
  return make_poly(std::move(v));
}

RatSeries rs(std::initializer_list<long> num, std::initializer_list<long> den = {1}) {
  return RatSeries(px(num), px(den));
}

QuadFE fe(int d, RatSeries u, int k, RatSeries v) {
  QuadFE f;
  f.d = d;
  f.u = std::move(u);
  f.k = k;
  f.v = std::move(v);
  return f;
}

std::vector<Scalar> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

QuadFE l3() { return path_fe({3, Scalar(1)}); }

// Power-series solution of a F^2 + b F + c = 0 by iterating F = -c / (b + a F), kept apart from series_of_fe.
std::vector<Scalar> direct_solution(const QuadraticForm& q, std::size_t n) {
  const auto a = q.a.expand(n);
  const auto b = q.b.expand(n);
  const auto c = q.c.expand(n);
  std::vector<Scalar> f(n);
  for (std::size_t iter = 0; iter <= n; ++iter) {
    std::vector<Scalar> den(n);
    for (std::size_t k = 0; k < n; ++k) {
      den[k] = b[k];
      for (std::size_t i = 0; i <= k; ++i) den[k] += a[i] * f[k - i];
    }
    std::vector<Scalar> next(n);
    for (std::size_t k = 0; k < n; ++k) {
      Scalar s = -c[k];
      for (std::size_t i = 1; i <= k; ++i) s -= den[i] * next[k - i];
      next[k] = s / den[0];
    }
    f = std::move(next);
  }
  return f;
}

// det H_n(from) = multiplier(n) det H_{n-delta}(to).
void check_chain(const QuadFE& from, const QuadFE& to, const FactorChain& ch, std::size_t n_max) {
  const auto lhs = hankel::det_sequence(series_of_fe(from, 2 * n_max), 0, n_max);
  const auto rhs = hankel::det_sequence(series_of_fe(to, 2 * n_max), 0, n_max);
  const auto delta = static_cast<std::size_t>(ch.delta);
  for (std::size_t n = std::max<std::size_t>(delta, 1); n <= n_max; ++n) {
    const Scalar tail = n == delta ? Scalar(1) : rhs[n - delta - 1];
    CHECK(lhs[n - 1] == ch.multiplier(static_cast<long>(n)) * tail);
  }
}

}  // namespace

TEST_CASE("canonicalize") {
  CHECK(fe_equal(canonicalize({RatSeries(px({0, 0, -1})), RatSeries(px({1, 0, 0, -1})), RatSeries(-1)}),
                 fe(0, rs({1, 0, 0, -1}), 2, RatSeries(-1))));
  // (1+x)/(1-x-2x^2-x^3 G), multiplied out by (1+x).
  CHECK(fe_equal(canonicalize({RatSeries(px({0, 0, 0, -1})), RatSeries(px({1, -1, -2})), RatSeries(px({-1, -1}))}),
                 fe(0, rs({1, -2}), 3, rs({-1}, {1, 1}))));
  const Scalar opt = Scalar(1) + t;
  const QuadFE ex2 = canonicalize({RatSeries(px({0, 0, -1})), RatSeries(make_poly({Scalar(1), Scalar(0), t})),
                                   RatSeries(-opt)});
  CHECK(ex2.d == 0);
  CHECK(ex2.k == 2);
  CHECK(ex2.u == RatSeries(make_poly({Scalar(1), Scalar(0), t})) / RatSeries(opt));
  CHECK(ex2.v == RatSeries(Scalar(-1) / opt));
  CHECK(ex2.u.at_zero() == Scalar(1) / opt);
}

TEST_CASE("canonicalize failures") {
  using R = CanonicalizeError::Reason;
  auto reason = [](const QuadraticForm& q) {
    try {
      canonicalize(q);
    } catch (const CanonicalizeError& e) {
      return e.reason();
    }
    FAIL("no error");
    return R::Linear;
  };
  CHECK(reason({RatSeries(1), RatSeries(px({0, 1})), RatSeries(-1)}) == R::NoPowerSeriesBranch);
  CHECK(reason({RatSeries(), RatSeries(1), RatSeries(-1)}) == R::Linear);
  CHECK(reason({RatSeries(1), RatSeries(1), RatSeries()}) == R::ZeroSolution);
  CHECK(reason({RatSeries(1), RatSeries(1), RatSeries(-1)}) == R::NonUnique);
  CHECK(CanonicalizeError(R::Linear, "").rational());
  CHECK_FALSE(CanonicalizeError(R::NonUnique, "").rational());
}

TEST_CASE("validate") {
  CHECK_THROWS(fe(0, RatSeries(0), 2, RatSeries(1)).validate());
  CHECK_THROWS(fe(0, RatSeries(1), 0, RatSeries(1)).validate());
  CHECK_THROWS(fe(0, RatSeries(1), 1, rs({0, 1})).validate());
  CHECK_THROWS(fe(-1, RatSeries(1), 1, RatSeries(1)).validate());
}

TEST_CASE("split_u") {
  auto check = [](const QuadFE& f, const Poly& low, const RatSeries& high) {
    const ULSplit s = split_u(f);
    CHECK(s.u_low == low);
    CHECK(s.u_high == high);
    CHECK(RatSeries(s.u_low) + s.u_high.mul_x_pow(static_cast<std::size_t>(f.d + 2)) == f.u);
  };
  check(fe(0, rs({1, 0, 0, -1}), 2, RatSeries(-1)), px({1}), rs({0, -1}));
  check(fe(0, rs({1, 0, -2, -1}, {1, 1}), 4, RatSeries(-1)), px({1, -1}), RatSeries(-1));
  check(fe(2, rs({1, 0, -2, -1}), 2, rs({-1, -1})), px({1, 0, -2, -1}), RatSeries());
}

TEST_CASE("split_u reconstructs u along every orbit") {
  for (const QuadFE& start : {l3(), shift_out(l3(), 1), shift_out(l3(), 3), shift_out(l3(), 4)})
    for (const QuadFE& s : orbit(start).states) {
      const ULSplit sp = split_u(s);
      CHECK(sp.u_low.degree() <= s.d + 1);
      CHECK(RatSeries(sp.u_low) + sp.u_high.mul_x_pow(static_cast<std::size_t>(s.d + 2)) == s.u);
    }
}

TEST_CASE("normalize_const") {
  const Scalar opt = Scalar(1) + t;
  const QuadFE f1 = fe(0, RatSeries(make_poly({Scalar(1), Scalar(0), t})) / RatSeries(opt), 2, RatSeries(Scalar(-1) / opt));
  const auto [g, ch] = normalize_const(f1);
  CHECK(ch.delta == 0);
  CHECK(ch.sign == 1);
  REQUIRE(ch.factors.size() == 1);
  CHECK(ch.factors[0].base == opt);
  CHECK(ch.multiplier(3) == opt.pow(3));
  CHECK(g.u.at_zero() == Scalar(1));
  CHECK(fe_equal(g, fe(0, RatSeries(make_poly({Scalar(1), Scalar(0), t})), 2, RatSeries(-opt))));

  // Example 3: G3 = G2/(1+t).
  const QuadFE g2 = fe(0, RatSeries(make_poly({Scalar(1), -(Scalar(2) + t)})) / RatSeries(opt), 2,
                       RatSeries(Scalar(-1) / opt));
  const auto [g3, ch3] = normalize_const(g2);
  const auto s2 = series_of_fe(g2, 6);
  const auto s3 = series_of_fe(g3, 6);
  for (std::size_t i = 0; i < s2.size(); ++i) CHECK(s3[i] == s2[i] / opt);

  const auto [same, id] = normalize_const(l3());
  CHECK(fe_equal(same, l3()));
  CHECK(id == FactorChain{});
}

TEST_CASE("transform_quadratic") {
  const auto r1 = transform_quadratic(l3());
  CHECK(fe_equal(r1.next, fe(0, rs({1, 0, 0, 1}, {1, 1}), 2, rs({-1}, {1, 1}))));
  CHECK(r1.chain == FactorChain{1, {}, 1});
  const auto f = series_of_fe(l3(), 8);
  const auto g = series_of_fe(r1.next, 8);
  for (std::size_t i = 0; i <= 8; ++i) CHECK(g[i] == f[i] + Scalar(i == 1 ? 1 : 0));

  const QuadFE f2 = fe(2, rs({1, 0, -2, -1}), 2, rs({-1, -1}));
  const auto r3 = transform_quadratic(f2);
  CHECK(r3.chain.sign == -1);
  CHECK(r3.chain.delta == 3);
  CHECK(r3.relation.offset.is_zero());
  CHECK(r3.relation.x_exponent == -2);
  CHECK(r3.relation.scale == rs({1, 1}));

  const QuadFE motz = path_fe({1, t});
  CHECK(fe_equal(motz, fe(0, RatSeries(make_poly({Scalar(1), -t})), 2, RatSeries(-1))));
  const auto rm = transform_quadratic(motz);
  CHECK(fe_equal(rm.next, motz));
  CHECK(rm.chain == FactorChain{1, {}, 1});

  const QuadFE sch = fe(0, RatSeries(make_poly({Scalar(1), -t})), 1, RatSeries(-1));
  const auto rs1 = transform_quadratic(sch);
  CHECK(rs1.shifted_hankel);
  CHECK(fe_equal(rs1.next, sch));
  CHECK_THROWS(transform_quadratic(fe(0, RatSeries(2), 2, RatSeries(1))));
}

TEST_CASE("shift_out") {
  CHECK(fe_equal(shift_out(l3(), 2), fe(0, rs({1, 0, -2, -1}, {1, 1}), 4, rs({-1}, {1, 1}))));
  CHECK(fe_equal(shift_out(l3(), 1), fe(1, rs({1, 0, -2, -1}, {1, 1}), 3, rs({-1}, {1, 1}))));
  const Scalar opt = Scalar(1) + t;
  const QuadFE sch = fe(0, RatSeries(make_poly({Scalar(1), -t})), 1, RatSeries(-1));
  CHECK(fe_equal(shift_out(sch, 1), fe(0, RatSeries(make_poly({Scalar(1), -(Scalar(2) + t)})) / RatSeries(opt), 2,
                                       RatSeries(Scalar(-1) / opt))));
  const auto f = series_of_fe(l3(), 20);
  for (int j = 1; j <= 6; ++j) {
    const auto s = series_of_fe(shift_out(l3(), j), 20 - j);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] == f[i + static_cast<std::size_t>(j)]);
  }
  CHECK_THROWS(shift_out(l3(), 0));
}

TEST_CASE("series_of_fe") {
  CHECK(series_of_fe(l3(), 13) == paths::f_series({3, 1}, 13));
  const auto s = series_of_fe(fe(3, rs({1, 1}), 2, rs({2})), 5);
  CHECK(s[0].is_zero());
  CHECK(s[1].is_zero());
  CHECK(s[2].is_zero());
  CHECK_FALSE(s[3].is_zero());
  const QuadFE g0 = shift_out(l3(), 2);
  CHECK(series_of_fe(add_constant(g0, Scalar(mpq_class(1, 4))), 5) ==
        std::vector<Scalar>{Scalar(mpq_class(5, 4)), 1, 2, 3, 6, 10});
}

TEST_CASE("canonical form solves the quadratic") {
  const Scalar opt = Scalar(1) + t;
  const std::vector<QuadraticForm> forms = {
      path_fe({1, t}).quadratic(),
      path_fe({2, t}).quadratic(),
      path_fe({3, 1}).quadratic(),
      {RatSeries(px({0, 1})), RatSeries(make_poly({Scalar(-1), t})), RatSeries(1)},
      {RatSeries(px({0, 0, 0, -1})), RatSeries(make_poly({Scalar(1), Scalar(0), -(Scalar(2) + t)})),
       RatSeries(make_poly({Scalar(0), -opt}))},
      {RatSeries(px({0, 0, 0, 0, 0, -1})), RatSeries(px({1, 0, -2, -1, -2})), RatSeries(px({-1, -2, -1, -1}))},
      {RatSeries(px({0, 0, 0, 0, 0, 0, -1})), RatSeries(px({1, 0, -2, -1, -2, -2})),
       RatSeries(px({-2, -3, -2, -2, -1}))},
  };
  for (const auto& q : forms) {
    const QuadFE f = canonicalize(q);
    CHECK(series_of_fe(f, 29) == direct_solution(q, 30));
  }
}

TEST_CASE("compose and factor bookkeeping") {
  const FactorChain a{1, {{Scalar(2), 0}}, 1};
  const FactorChain b{-1, {{Scalar(3), 0}}, 2};
  const FactorChain c = compose(a, b);
  CHECK(c.delta == 3);
  CHECK(c.sign == -1);
  REQUIRE(c.factors.size() == 2);
  CHECK(c.factors[1] == Factor{Scalar(3), 1});
  CHECK(c.multiplier(4) == Scalar(-1) * Scalar(16) * Scalar(27));

  const FactorChain same = compose(FactorChain{1, {{Scalar(2), 0}}, 0}, FactorChain{1, {{Scalar(mpq_class(1, 2)), 0}}, 0});
  CHECK(same.factors.empty());

  // (-1)^(n-1) (-1)^(n-2) = -1.
  const FactorChain neg = compose(FactorChain{1, {{Scalar(-1), 1}}, 0}, FactorChain{1, {{Scalar(-1), 2}}, 0});
  CHECK(neg.factors.empty());
  CHECK(neg.sign == -1);
}

TEST_CASE("apply_T dispatch") {
  CHECK(apply_T(fe(0, RatSeries(2), 2, RatSeries(1))).kind == StepKind::Normalize);
  CHECK(apply_T(l3()).kind == StepKind::Quadratic);
  const auto s = apply_T(fe(0, RatSeries(make_poly({Scalar(1), -t})), 1, RatSeries(-1)));
  CHECK(s.kind == StepKind::Shift);
  REQUIRE(s.intermediate);
  CHECK(s.chain == FactorChain{1, {}, 1});
}

TEST_CASE("orbit examples") {
  const auto tr = orbit(l3());
  CHECK(tr.status == OrbitStatus::Cycle);
  CHECK(*tr.cycle == std::make_pair<std::size_t, std::size_t>(0, 5));
  CHECK(tr.recurrence == FactorChain{-1, {}, 7});
  CHECK(fe_equal(tr.states[5], tr.states[0]));

  const auto ex2 = orbit(path_fe({2, t}));
  REQUIRE(ex2.cycle);
  CHECK(ex2.steps.size() == 3);
  CHECK(ex2.steps[1].kind == StepKind::Normalize);
  CHECK(ex2.recurrence == FactorChain{1, {{Scalar(1) + t, 1}}, 2});

  const auto motz = orbit(path_fe({1, t}));
  CHECK(motz.steps.size() == 1);
  CHECK(motz.recurrence == FactorChain{1, {}, 1});

  const auto shifted = orbit(shift_out(path_fe({1, Scalar(1)}), 1));
  CHECK(shifted.recurrence == FactorChain{-1, {}, 3});

  const auto iv = orbit(shift_out(l3(), 4), 12);
  CHECK(iv.status == OrbitStatus::NoCycle);
  CHECK(iv.steps.size() == 12);
}

TEST_CASE("orbit reaching a rational series") {
  // F = 1/(1 - x^2 + x^2 F) is solved by F = 1, so the transformed series vanishes.
  const auto tr = orbit(fe(0, rs({1, 0, -1}), 2, RatSeries(1)));
  CHECK(tr.status == OrbitStatus::RationalTerminal);
  CHECK_FALSE(tr.terminal_reason.empty());
  CHECK(series_of_fe(tr.states[0], 5) == ints({1, 0, 0, 0, 0, 0}));
  CHECK_THROWS(orbit(l3(), 0));
}

TEST_CASE("every orbit step is sound") {
  for (const QuadFE& start : {l3(), shift_out(l3(), 1), shift_out(l3(), 2), shift_out(l3(), 3), shift_out(l3(), 4),
                              path_fe({1, Scalar(2)}), shift_out(path_fe({1, Scalar(2)}), 1)}) {
    const auto tr = orbit(start, 10);
    for (const auto& s : tr.steps) check_chain(s.from, s.to, s.chain, 14);
  }
}

TEST_CASE("orbit is deterministic") {
  const auto a = orbit(shift_out(l3(), 3));
  const auto b = orbit(shift_out(l3(), 3));
  REQUIRE(a.states.size() == b.states.size());
  for (std::size_t i = 0; i < a.states.size(); ++i) CHECK(fe_equal(a.states[i], b.states[i]));
  for (std::size_t i = 0; i < a.steps.size(); ++i) {
    CHECK(a.steps[i].chain == b.steps[i].chain);
    CHECK(a.steps[i].relation == b.steps[i].relation);
  }
  CHECK(a.recurrence == b.recurrence);
}

TEST_CASE("recurrence_dets reproduces direct determinants") {
  const auto tr = orbit(l3());
  const auto rec = recurrence_dets(tr, 30);
  CHECK(rec == hankel::det_sequence(paths::f_series({3, 1}, 60), 0, 30));
  CHECK_THROWS(recurrence_dets(orbit(shift_out(l3(), 4)), 5));
}

TEST_CASE("fe_equal and add_constant") {
  const auto tr = orbit(l3());
  CHECK(fe_equal(tr.states[5], tr.states[0]));
  const QuadFE sch = fe(0, RatSeries(make_poly({Scalar(1), -t})), 1, RatSeries(-1));
  CHECK_FALSE(fe_equal(path_fe({1, t}), sch));
  const auto iv = orbit(shift_out(l3(), 4));
  CHECK(fe_equal(iv.states[8], add_constant(shift_out(l3(), 2), Scalar(mpq_class(1, 4)))));
  CHECK(fe_equal(add_constant(add_constant(l3(), 3), -3), l3()));
}

TEST_CASE("to_string") {
  CHECK(l3().to_string() == "F = 1/(1-x^3 - x^2*F)");
  CHECK((FactorChain{-1, {}, 7}).to_string() == "det H_n(F) = -det H_{n-7}(G)");
  CHECK((FactorChain{1, {{Scalar(1) + t, 1}}, 2}).to_string() == "det H_n(F) = (1+t)^(n-1) * det H_{n-2}(G)");
}
