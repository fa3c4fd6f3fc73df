#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "hgx/gxtransform.hpp"
#include "hgx/hankel.hpp"
#include "hgx/io.hpp"
#include "hgx/pathcount.hpp"
#include "hgx/verify.hpp"

namespace {

using namespace hgx;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
  int ell = 1;
  std::string t = "1";
  std::size_t shift = 0;
  std::size_t n = 10;
  bool detect_period = false;
  std::string format = "plain";
  std::string fe_path;
  std::string config_path;
  std::optional<std::string> only;
  std::size_t max_steps = gx::kDefaultMaxSteps;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

paths::PathParams params_of(const Options& o) {
  paths::PathParams p{o.ell, Scalar::parse(o.t)};
  p.validate();
  return p;
}

int cmd_seq(const Options& o) {
  const auto f = paths::f_series(params_of(o), o.n);
  if (o.format == "json") {
    std::cout << io::sequence_to_json(f).dump() << '\n';
    return kExitOk;
  }
  if (o.format == "csv") std::cout << "n,f\n";
  const char* sep = o.format == "csv" ? "," : " ";
  for (std::size_t i = 0; i < f.size(); ++i) std::cout << i << sep << f[i] << '\n';
  return kExitOk;
}

int cmd_hankel(const Options& o) {
  const std::size_t needed = hankel::terms_needed(o.shift, o.n);
  std::vector<Scalar> seq;
  if (needed > 0) {
    if (!o.fe_path.empty())
      seq = gx::series_of_fe(io::fe_from_json(io::read_json_file(o.fe_path)), needed - 1);
    else
      seq = paths::f_series(params_of(o), needed - 1);
  }
  const auto dets = hankel::det_sequence(seq, o.shift, o.n);
  std::optional<hankel::Period> period;
  if (o.detect_period) period = hankel::detect_period(dets, dets.size() / 2);

  if (o.format == "json") {
    io::json out = {{"shift", o.shift}, {"dets", io::sequence_to_json(dets)}};
    if (o.detect_period)
      out["period"] = period ? io::json{{"period", period->period}, {"offset", period->offset}} : io::json(nullptr);
    std::cout << out.dump() << '\n';
    return kExitOk;
  }
  if (o.format == "csv") std::cout << "n,det\n";
  const char* sep = o.format == "csv" ? "," : " ";
  for (std::size_t i = 0; i < dets.size(); ++i) std::cout << i + 1 << sep << dets[i] << '\n';
  if (o.detect_period) {
    if (period)
      std::cout << "# period " << period->period << " offset " << period->offset << '\n';
    else
      std::cout << "# no period detected\n";
  }
  return kExitOk;
}

void print_trace(const gx::OrbitTrace& tr, std::size_t max_steps) {
  std::cout << "F0: " << tr.states.front().to_string() << '\n';
  for (std::size_t i = 0; i < tr.steps.size(); ++i) {
    const auto& s = tr.steps[i];
    std::cout << "step " << i + 1 << " (" << gx::to_string(s.kind) << "): " << s.relation << '\n';
    if (s.intermediate) std::cout << "  before shift: " << s.intermediate->to_string() << '\n';
    std::cout << "  " << s.chain.to_string() << '\n';
    std::cout << "F" << i + 1 << ": " << s.to.to_string() << '\n';
  }
  switch (tr.status) {
    case gx::OrbitStatus::Cycle:
      std::cout << "cycle: F" << tr.cycle->second << " = F" << tr.cycle->first << '\n';
      std::cout << "prefix: " << tr.prefix.to_string() << '\n';
      std::cout << "recurrence: " << tr.recurrence.to_string() << '\n';
      std::cout << "delta=" << tr.recurrence.delta << ", sign=" << tr.recurrence.sign << '\n';
      break;
    case gx::OrbitStatus::NoCycle:
      std::cout << "no cycle within " << max_steps << " steps\n";
      break;
    case gx::OrbitStatus::RationalTerminal:
      std::cout << "rational terminal: " << tr.terminal_reason << '\n';
      break;
  }
}

int cmd_transform(const Options& o) {
  if (o.format == "csv") throw UsageError("transform supports --format plain or json");
  gx::QuadFE fe =
      o.fe_path.empty() ? gx::path_fe(params_of(o)) : io::fe_from_json(io::read_json_file(o.fe_path));
  if (o.shift > 0) fe = gx::shift_out(fe, static_cast<int>(o.shift));
  const auto tr = gx::orbit(fe, o.max_steps);
  if (o.format == "json")
    std::cout << io::to_json(tr).dump(2) << '\n';
  else
    print_trace(tr, o.max_steps);
  return kExitOk;
}

int cmd_lgv(const Options& o) {
  if (o.config_path.empty()) throw UsageError("lgv requires --config <file>");
  const auto in = io::lgv_input_from_json(io::read_json_file(o.config_path));
  const auto res = paths::lgv_signed_sum(in.config, in.params);
  const Scalar det = hankel::det_exact(paths::path_weight_matrix(in.config, in.params));
  const bool match = res.signed_sum == det;
  if (o.format == "json") {
    std::cout << io::json{{"signed_sum", io::to_json(res.signed_sum)},
                          {"det", io::to_json(det)},
                          {"match", match},
                          {"nonintersecting_tuples", res.nonintersecting_tuples}}
                     .dump()
              << '\n';
  } else if (o.format == "csv") {
    std::cout << "signed_sum,det,match\n" << res.signed_sum << ',' << det << ',' << (match ? "MATCH" : "MISMATCH") << '\n';
  } else {
    std::cout << "signed sum: " << res.signed_sum << '\n';
    std::cout << "det: " << det << '\n';
    std::cout << "nonintersecting tuples: " << res.nonintersecting_tuples << '\n';
    std::cout << (match ? "MATCH" : "MISMATCH") << '\n';
  }
  return match ? kExitOk : kExitFailure;
}

int cmd_verify(const Options& o) {
  bool ok = true;
  double total = 0;
  std::size_t passed = 0;
  const auto results = verify::run_all(o.only);
  for (const auto& r : results) {
    std::cout << verify::format(r) << '\n';
    ok = ok && r.passed;
    passed += r.passed ? 1 : 0;
    total += r.seconds;
  }
  std::cout << passed << "/" << results.size() << " criteria passed in " << total << "s\n";
  return ok ? kExitOk : kExitFailure;
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"plain", "csv", "json"}));
}

void add_params(CLI::App* cmd, Options& o) {
  cmd->add_option("--ell", o.ell, "Horizontal step length");
  cmd->add_option("--t", o.t, "Horizontal step weight; 't' is symbolic");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hankel determinants of weighted lattice-path sequences"};
  app.require_subcommand(1);
  Options o;

  auto* seq = app.add_subcommand("seq", "Print f(0..n) for the path weights");
  add_params(seq, o);
  seq->add_option("--n", o.n, "Last index");
  add_format(seq, o);

  auto* hank = app.add_subcommand("hankel", "Print det H_n^shift for n = 1..N");
  add_params(hank, o);
  hank->add_option("--shift", o.shift, "Hankel shift");
  hank->add_option("--n", o.n, "Largest order");
  hank->add_option("--fe", o.fe_path, "Take the sequence from an FE file instead");
  hank->add_flag("--detect-period", o.detect_period, "Report the eventual period");
  add_format(hank, o);

  auto* tr = app.add_subcommand("transform", "Iterate the transformation on a quadratic equation");
  add_params(tr, o);
  tr->add_option("--fe", o.fe_path, "FE file; defaults to the path equation for --ell/--t");
  tr->add_option("--shift", o.shift, "Remove the first terms of the series first");
  tr->add_option("--max-steps", o.max_steps, "Step budget")->check(CLI::PositiveNumber);
  add_format(tr, o);

  auto* lgv = app.add_subcommand("lgv", "Compare the nonintersecting signed sum with the determinant");
  lgv->add_option("--config", o.config_path, "Configuration file");
  add_format(lgv, o);

  auto* ver = app.add_subcommand("verify", "Run the acceptance suite");
  ver->add_option("--only", o.only, "Run a single criterion by name or number");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*seq) return cmd_seq(o);
    if (*hank) return cmd_hankel(o);
    if (*tr) return cmd_transform(o);
    if (*lgv) return cmd_lgv(o);
    if (*ver) return cmd_verify(o);
  } catch (const paths::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
