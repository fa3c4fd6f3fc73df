#include <doctest.h>

#include "hgx/io.hpp"

using namespace hgx;
using io::json;

namespace {

const Scalar t = Scalar::t();

}  // namespace

TEST_CASE("scalar json") {
  CHECK(io::to_json(Scalar(1) + t) == json("1+t"));
  CHECK(io::scalar_from_json(json("(1+t)/(1-t)")) == (Scalar(1) + t) / (Scalar(1) - t));
  CHECK(io::scalar_from_json(json(-3)) == Scalar(-3));
  CHECK_THROWS_AS(io::scalar_from_json(json(1.5)), io::FormatError);
  CHECK_THROWS_AS(io::scalar_from_json(json("1+")), ParseError);
}

TEST_CASE("poly and ratseries json round trip") {
  const Poly p = make_poly({Scalar(1), Scalar(0), -t});
  CHECK(io::to_json(p) == json::parse(R"(["1","0","-t"])"));
  CHECK(io::poly_from_json(io::to_json(p)) == p);
  const RatSeries r(make_poly({Scalar(1), Scalar(1)}), make_poly({Scalar(1), -t}));
  CHECK(io::ratseries_from_json(io::to_json(r)) == r);
  CHECK(io::ratseries_from_json(json::parse(R"({"num":["2"]})")) == RatSeries(2));
  CHECK(io::ratseries_from_json(json::parse(R"(["1","1"])")) == RatSeries(make_poly({Scalar(1), Scalar(1)})));
  CHECK(io::ratseries_from_json(json("t")) == RatSeries(t));
  CHECK_THROWS_AS(io::ratseries_from_json(json::parse(R"({"den":["1"]})")), io::FormatError);
  CHECK_THROWS_AS(io::ratseries_from_json(json::parse(R"({"num":["1"],"den":["0","1"]})")), NotPowerSeries);
}

TEST_CASE("fe json") {
  const auto canon = io::fe_from_json(json::parse(R"({"d":0,"k":2,"u":["1","0","0","-1"],"v":["-1"]})"));
  const auto quad = io::fe_from_json(json::parse(R"({"a":["0","0","-1"],"b":["1","0","0","-1"],"c":["-1"]})"));
  CHECK(gx::fe_equal(canon, quad));
  CHECK(gx::fe_equal(io::fe_from_json(io::to_json(canon)), canon));
  CHECK_THROWS_AS(io::fe_from_json(json::parse(R"({"a":["1"],"b":["1"]})")), io::FormatError);
  CHECK_THROWS_AS(io::fe_from_json(json::parse(R"({"d":0,"k":2,"u":["1"]})")), io::FormatError);
  CHECK_THROWS_AS(io::fe_from_json(json::parse(R"({"a":["1"],"b":["0","1"],"c":["-1"]})")), gx::CanonicalizeError);
  CHECK_THROWS(io::fe_from_json(json::parse(R"({"d":0,"k":0,"u":["1"],"v":["1"]})")));
}

TEST_CASE("factor chain json") {
  const gx::FactorChain c{-1, {{Scalar(1) + t, 1}}, 2};
  const json j = io::to_json(c);
  CHECK(j.at("delta") == 2);
  CHECK(j.at("sign") == -1);
  CHECK(j.at("factors")[0].at("base") == "1+t");
  CHECK(io::chain_from_json(j) == c);
}

TEST_CASE("orbit trace json") {
  const auto tr = gx::orbit(gx::path_fe({3, Scalar(1)}));
  const json j = io::to_json(tr);
  CHECK(j.at("status") == "cycle");
  CHECK(j.at("recurrence") == json::parse(R"({"delta":7,"sign":-1,"factors":[]})"));
  CHECK(j.at("steps").size() == 5);
  CHECK(j.at("cycle").at("to") == 5);
  CHECK(j.at("steps")[0].at("kind") == "quadratic");
  for (std::size_t i = 0; i < tr.states.size(); ++i)
    CHECK(gx::fe_equal(io::fe_from_json(j.at("states")[i]), tr.states[i]));

  const auto none = io::to_json(gx::orbit(gx::shift_out(gx::path_fe({3, Scalar(1)}), 4), 4));
  CHECK(none.at("status") == "no_cycle");
  CHECK_FALSE(none.contains("recurrence"));
}

TEST_CASE("sequence json") {
  const std::vector<Scalar> s{Scalar(1), t, Scalar(mpq_class(1, 2))};
  CHECK(io::sequence_from_json(io::sequence_to_json(s)) == s);
  CHECK_THROWS_AS(io::sequence_from_json(json("1")), io::FormatError);
}

TEST_CASE("lgv input json") {
  const auto in = io::lgv_input_from_json(
      json::parse(R"({"initials":[[0,0],[-1,0]],"terminals":[[1,0],[2,0]],"ell":1,"t":"t"})"));
  CHECK(in.config.order() == 2);
  CHECK(in.params.t == t);
  const auto back = io::lgv_input_from_json(io::to_json(in));
  CHECK(back.config.initials == in.config.initials);
  CHECK(back.config.terminals == in.config.terminals);
  CHECK(back.params.ell == 1);
  CHECK_THROWS_AS(io::lgv_input_from_json(json::parse(R"({"initials":[[0]],"terminals":[[0,0]]})")),
                  io::FormatError);
  CHECK_THROWS_AS(io::lgv_input_from_json(json::parse(R"({"initials":[[1,0]],"terminals":[[0,0]]})")),
                  std::invalid_argument);
}

TEST_CASE("read_json_file") {
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), io::FormatError);
}
