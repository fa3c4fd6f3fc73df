#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "hgx/io.hpp"

using namespace hgx;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run hgx_run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(HGX_BINARY) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(HGX_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("seq") {
  const auto r = hgx_run("seq --ell 3 --t 1 --n 13");
  CHECK(r.code == 0);
  CHECK(r.out == "0 1\n1 0\n2 1\n3 1\n4 2\n5 3\n6 6\n7 10\n8 20\n9 36\n10 72\n11 136\n12 273\n13 532\n");
  const auto s = hgx_run("seq --ell 1 --t t --n 3 --format json");
  CHECK(s.code == 0);
  CHECK(io::sequence_from_json(io::json::parse(s.out)) ==
        std::vector<Scalar>{Scalar(1), Scalar::t(), Scalar::parse("1+t^2"), Scalar::parse("3*t+t^3")});
  const auto bad = hgx_run("seq --ell 0 --t 1", true);
  CHECK(bad.code == 2);
  CHECK(bad.out.find("error") != std::string::npos);
  CHECK(hgx_run("seq --t 1+").code == 2);
}

TEST_CASE("seq csv") {
  const auto r = hgx_run("seq --ell 2 --t 1 --n 4 --format csv");
  CHECK(r.out == "n,f\n0,1\n1,0\n2,2\n3,0\n4,6\n");
}

TEST_CASE("hankel") {
  const auto p = hgx_run("hankel --ell 3 --t 1 --n 42 --detect-period");
  CHECK(p.code == 0);
  CHECK(p.out.find("# period 14 offset 0") != std::string::npos);

  const auto s = hgx_run("hankel --ell 2 --t t --n 6 --format json");
  REQUIRE(s.code == 0);
  const auto j = io::json::parse(s.out);
  const std::vector<Scalar> want{Scalar::parse("1"),          Scalar::parse("1+t"),        Scalar::parse("(1+t)^2"),
                                 Scalar::parse("(1+t)^4"), Scalar::parse("(1+t)^6"), Scalar::parse("(1+t)^9")};
  CHECK(io::sequence_from_json(j.at("dets")) == want);

  const auto iv = hgx_run("hankel --ell 3 --t 1 --shift 4 --n 15 --format csv");
  CHECK(iv.out == "n,det\n1,2\n2,3\n3,4\n4,0\n5,0\n6,-4\n7,-5\n8,-6\n9,-7\n10,-8\n11,0\n12,0\n13,8\n14,9\n15,10\n");

  const auto fe = hgx_run("hankel --fe " + data("l3.json") + " --n 14 --format json");
  CHECK(io::sequence_from_json(io::json::parse(fe.out).at("dets")).size() == 14);
  CHECK(io::json::parse(fe.out).at("dets")[4] == "-1");
}

TEST_CASE("transform") {
  const auto l3 = hgx_run("transform --fe " + data("l3.json"));
  CHECK(l3.code == 0);
  CHECK(l3.out.find("cycle: F5 = F0") != std::string::npos);
  CHECK(l3.out.find("delta=7, sign=-1") != std::string::npos);

  const auto m = hgx_run("transform --fe " + data("motzkin.json") + " --format json");
  const auto j = io::json::parse(m.out);
  CHECK(j.at("steps").size() == 1);
  CHECK(j.at("recurrence") == io::json::parse(R"({"delta":1,"sign":1,"factors":[]})"));

  const auto iv = hgx_run("transform --ell 3 --t 1 --shift 4 --max-steps 12");
  CHECK(iv.code == 0);
  CHECK(iv.out.find("no cycle within 12 steps") != std::string::npos);

  const auto bad = hgx_run("transform --fe " + data("bad_fe.json"), true);
  CHECK(bad.code == 2);
  CHECK(bad.out.find("b(0) = 0") != std::string::npos);
  CHECK(hgx_run("transform --fe /nonexistent.json").code == 2);
}

TEST_CASE("lgv") {
  const auto f1 = hgx_run("lgv --config " + data("figure1.json"));
  CHECK(f1.code == 0);
  CHECK(f1.out == "signed sum: 1\ndet: 1\nnonintersecting tuples: 1\nMATCH\n");
  const auto f2 = hgx_run("lgv --config " + data("figure2.json") + " --format json");
  const auto j = io::json::parse(f2.out);
  CHECK(j.at("signed_sum") == "1-3*t^2+t^4");
  CHECK(j.at("match") == true);
  const auto pt = hgx_run("lgv --config " + data("point.json") + " --format csv");
  CHECK(pt.out == "signed_sum,det,match\n1,1,MATCH\n");
  CHECK(hgx_run("lgv").code == 2);
}

TEST_CASE("verify") {
  const auto one = hgx_run("verify --only prop2");
  CHECK(one.code == 0);
  CHECK(one.out.rfind("PASS  4 prop2", 0) == 0);
  CHECK(one.out.find("1/1 criteria passed") != std::string::npos);
  CHECK(hgx_run("verify --only nope").code == 2);
}

TEST_CASE("usage errors") {
  CHECK(hgx_run("").code == 2);
  CHECK(hgx_run("frobnicate").code == 2);
  CHECK(hgx_run("seq --format xml").code == 2);
  CHECK(hgx_run("--help").code == 0);
}

TEST_CASE("output is deterministic") {
  const std::string args = "transform --ell 3 --t 1 --shift 3 --format json";
  CHECK(hgx_run(args).out == hgx_run(args).out);
}
