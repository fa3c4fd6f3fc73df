#include "hgx/io.hpp"

#include <fstream>

namespace hgx::io {

json to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw FormatError("expected a scalar string or integer, got " + j.dump());
}

json to_json(const Poly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("expected a coefficient array, got " + j.dump());
  std::vector<Scalar> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(scalar_from_json(e));
  return Poly(std::move(c));
}

json to_json(const RatSeries& r) { return {{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

RatSeries ratseries_from_json(const json& j) {
  if (j.is_array()) return RatSeries(poly_from_json(j));
  if (j.is_string() || j.is_number_integer()) return RatSeries(scalar_from_json(j));
  if (!j.is_object() || !j.contains("num")) throw FormatError("expected {\"num\":[...],\"den\":[...]}, got " + j.dump());
  Poly num = poly_from_json(j.at("num"));
  Poly den = j.contains("den") ? poly_from_json(j.at("den")) : Poly::constant(Scalar(1));
  return RatSeries(std::move(num), std::move(den));
}

json to_json(const gx::QuadFE& fe) {
  return {{"d", fe.d}, {"k", fe.k}, {"u", to_json(fe.u)}, {"v", to_json(fe.v)}};
}

gx::QuadFE fe_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("FE must be a JSON object");
  if (j.contains("a") || j.contains("b") || j.contains("c")) {
    if (!(j.contains("a") && j.contains("b") && j.contains("c")))
      throw FormatError("quadratic-form FE needs all of \"a\", \"b\", \"c\"");
    return gx::canonicalize(
        {ratseries_from_json(j.at("a")), ratseries_from_json(j.at("b")), ratseries_from_json(j.at("c"))});
  }
  for (const char* key : {"d", "k", "u", "v"})
    if (!j.contains(key)) throw FormatError(std::string("canonical FE is missing \"") + key + "\"");
  gx::QuadFE fe;
  fe.d = j.at("d").get<int>();
  fe.k = j.at("k").get<int>();
  fe.u = ratseries_from_json(j.at("u"));
  fe.v = ratseries_from_json(j.at("v"));
  fe.validate();
  return fe;
}

json to_json(const gx::FactorChain& chain) {
  json factors = json::array();
  for (const auto& f : chain.factors) factors.push_back({{"base", to_json(f.base)}, {"offset", f.offset}});
  return {{"delta", chain.delta}, {"sign", chain.sign}, {"factors", factors}};
}

gx::FactorChain chain_from_json(const json& j) {
  gx::FactorChain c;
  c.delta = j.at("delta").get<int>();
  c.sign = j.at("sign").get<int>();
  for (const auto& f : j.at("factors")) c.factors.push_back({scalar_from_json(f.at("base")), f.at("offset").get<int>()});
  return c;
}

json to_json(const gx::OrbitTrace& trace) {
  json states = json::array();
  for (const auto& s : trace.states) states.push_back(to_json(s));
  json steps = json::array();
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    json rec = {{"index", i},
                {"kind", gx::to_string(s.kind)},
                {"from", to_json(s.from)},
                {"to", to_json(s.to)},
                {"chain", to_json(s.chain)},
                {"relation", s.relation}};
    if (s.intermediate) rec["intermediate"] = to_json(*s.intermediate);
    steps.push_back(std::move(rec));
  }
  json out = {{"status", gx::to_string(trace.status)}, {"states", states}, {"steps", steps}};
  if (trace.cycle) {
    out["cycle"] = {{"from", trace.cycle->first}, {"to", trace.cycle->second}};
    out["prefix"] = to_json(trace.prefix);
    out["recurrence"] = to_json(trace.recurrence);
  }
  if (!trace.terminal_reason.empty()) out["reason"] = trace.terminal_reason;
  return out;
}

json sequence_to_json(std::span<const Scalar> seq) {
  json a = json::array();
  for (const auto& s : seq) a.push_back(to_json(s));
  return a;
}

std::vector<Scalar> sequence_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("expected a JSON array of scalars");
  std::vector<Scalar> out;
  for (const auto& e : j) out.push_back(scalar_from_json(e));
  return out;
}

namespace {

std::vector<paths::Point> points_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array of [x,y] pairs");
  std::vector<paths::Point> pts;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw FormatError(std::string(what) + ": each point must be [x,y]");
    pts.push_back({p[0].get<long>(), p[1].get<long>()});
  }
  return pts;
}

json points_to_json(const std::vector<paths::Point>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back({p.x, p.y});
  return a;
}

}  // namespace

LgvInput lgv_input_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("LGV config must be a JSON object");
  LgvInput in;
  in.config.initials = points_from_json(j.at("initials"), "initials");
  in.config.terminals = points_from_json(j.at("terminals"), "terminals");
  in.params.ell = j.value("ell", 1);
  in.params.t = j.contains("t") ? scalar_from_json(j.at("t")) : Scalar(1);
  in.params.validate();
  in.config.validate();
  return in;
}

json to_json(const LgvInput& in) {
  return {{"initials", points_to_json(in.config.initials)},
          {"terminals", points_to_json(in.config.terminals)},
          {"ell", in.params.ell},
          {"t", to_json(in.params.t)}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw FormatError("cannot open " + path.string());
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace hgx::io
