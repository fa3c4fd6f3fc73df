#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "hgx/gxtransform.hpp"
#include "hgx/pathcount.hpp"
#include "hgx/ratseries.hpp"

// JSON file formats shared by the command-line tool and the tests.
//
//   Scalar     "3/4", "1+t", "(1+t)/(1-t)"; plain JSON integers are accepted on input
//   Poly       ascending coefficient array, e.g. ["1","0","-1"]
//   RatSeries  {"num": Poly, "den": Poly}; "den" defaults to ["1"], a bare Poly is accepted
//   FE file    {"d","k","u","v"} or {"a","b","c"} (canonicalized on read)
//   LGV file   {"initials": [[x,y],...], "terminals": [[x,y],...], "ell": 1, "t": "t"}
namespace hgx::io {

using json = nlohmann::json;

class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json to_json(const Poly& p);
Poly poly_from_json(const json& j);

json to_json(const RatSeries& r);
RatSeries ratseries_from_json(const json& j);

json to_json(const gx::QuadFE& fe);
/// Accepts either FE form; the quadratic form goes through gx::canonicalize.
gx::QuadFE fe_from_json(const json& j);

json to_json(const gx::FactorChain& chain);
gx::FactorChain chain_from_json(const json& j);

json to_json(const gx::OrbitTrace& trace);

json sequence_to_json(std::span<const Scalar> seq);
std::vector<Scalar> sequence_from_json(const json& j);

struct LgvInput {
  paths::ITConfig config;
  paths::PathParams params;
};
LgvInput lgv_input_from_json(const json& j);
json to_json(const LgvInput& in);

json read_json_file(const std::filesystem::path& path);

}  // namespace hgx::io
