#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>

#include "pathdepth/campaign.hpp"
#include "pathdepth/depth_oracle.hpp"
#include "pathdepth/errors.hpp"
#include "pathdepth/json.hpp"
#include "pathdepth/path_delta.hpp"
#include "pathdepth/witness.hpp"

using namespace pathdepth;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string weights;
  std::optional<int> t;
  std::optional<int> t_max;
  int n_min = 3;
  int n_max = 6;
  Exponent w_max = 3;
  std::size_t samples = 0;
  bool exhaustive = false;
  std::uint64_t seed = 42;
  std::size_t budget_degrees = OracleBudget{}.max_degrees;
  std::size_t budget_basis = OracleBudget{}.max_basis;
  std::string backend = "exact";
  std::string out;
  std::string format = "text";
  std::string checks = "all";
  std::string ideal;
  std::size_t vars = 0;
  bool nonempty_delta = false;
  bool timings = false;
  unsigned threads = 1;
  int oracle_max_vars = 9;
  bool corrupt_formula = false;
};

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw ParseError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

OracleOptions oracle_options(const Options& o) {
  OracleOptions opts;
  opts.budget = {o.budget_degrees, o.budget_basis};
  opts.backend = parse_backend(o.backend);
  opts.threads = o.threads;
  return opts;
}

int require_t(const Options& o) {
  if (!o.t) throw ParseError("--t is required");
  if (*o.t < 1) throw DomainError("t must be at least 1");
  return *o.t;
}

int cmd_table(const Options& o) {
  const WeightVector w = WeightVector::parse(o.weights);
  Output out(o.out);
  if (o.format == "json") {
    Json j = delta_profile(compute_delta(w));
    j["weights"] = w.to_string();
    Json seq = Json::array();
    for (int t = 1; t <= static_cast<int>(compute_delta(w).size()) + 1; ++t)
      seq.push_back(depth_formula(w, t));
    j["depth"] = seq;
    out.stream() << j.dump() << '\n';
  } else {
    out.stream() << format_table(w);
  }
  return 0;
}

int cmd_formula(const Options& o) {
  const WeightVector w = WeightVector::parse(o.weights);
  const int t = require_t(o);
  const int top = o.t_max.value_or(t);
  if (top < t) throw DomainError("--t-max below --t");
  Output out(o.out);
  for (int s = t; s <= top; ++s) {
    if (o.format == "json") {
      out.stream() << Json{{"weights", w.to_string()}, {"t", s}, {"depth", depth_formula(w, s)}}.dump()
                   << '\n';
    } else {
      out.stream() << "t=" << s << " depth=" << depth_formula(w, s) << '\n';
    }
  }
  return 0;
}

int cmd_oracle(const Options& o) {
  MonomialIdeal ideal(1);
  std::optional<int> predicted;
  if (!o.ideal.empty()) {
    if (o.vars == 0) throw ParseError("--ideal needs --vars");
    ideal = MonomialIdeal::parse(o.ideal, o.vars);
  } else {
    const WeightVector w = WeightVector::parse(o.weights);
    const int t = require_t(o);
    ideal = power(path_ideal(w), static_cast<unsigned>(t));
    predicted = depth_formula(w, t);
  }
  const DepthReport report = depth_oracle(ideal, oracle_options(o));
  Output out(o.out);
  if (o.format == "json") {
    Json j = report;
    if (predicted) {
      j["formula"] = *predicted;
      j["match"] = *predicted == report.depth;
    }
    out.stream() << j.dump() << '\n';
  } else {
    out.stream() << "depth = " << report.depth << "  (pd = " << report.projective_dimension
                 << ", N = " << report.nvars << ", degrees = " << report.degrees_examined
                 << ", " << report.elapsed_ms << " ms)\n";
    if (predicted) out.stream() << "formula = " << *predicted << '\n';
  }
  return predicted && *predicted != report.depth ? kExitMismatch : 0;
}

int cmd_witness(const Options& o) {
  const WeightVector w = WeightVector::parse(o.weights);
  const int t = require_t(o);
  const int dsize = static_cast<int>(compute_delta(w).size());
  if (t == 1) {
    throw DomainError("t = 1 has its own witness; run `pathdepth colon-check --t 1`");
  }
  if (t > dsize + 1) {
    throw DomainError("witness needs 2 <= t <= |delta|+1 = " + std::to_string(dsize + 1));
  }
  const WitnessReport report = witness_report(w, t);
  Output out(o.out);
  if (o.format == "json") {
    out.stream() << Json(report).dump() << '\n';
  } else {
    const auto& ws = report.witness;
    auto& os = out.stream();
    os << "g_" << t << " = " << ws.g.to_string() << '\n';
    for (std::size_t i = 0; i < ws.factors.size(); ++i)
      os << "D_" << i + 1 << " = " << ws.factors[i].monomial.to_string() << '\n';
    os << "lambda = {";
    for (std::size_t i = 0; i < ws.lambda.size(); ++i) os << (i ? "," : "") << ws.lambda[i];
    os << "}\neta:";
    for (auto [j, e] : ws.eta) os << " eta_" << j << "=" << e;
    os << "\nrho_" << t << " = " << ws.rho.to_string() << '\n';
    os << "predicted colon = " << report.predicted_colon.to_string() << '\n';
    os << "brute colon     = " << report.brute_colon.to_string() << '\n';
    os << "rho outside I^t = " << (report.rho_outside_power ? "true" : "false") << '\n';
    os << "match = " << (report.match() ? "true" : "false") << '\n';
  }
  return report.match() && report.rho_outside_power ? 0 : kExitMismatch;
}

CampaignConfig campaign_config(const Options& o, const std::string& mode) {
  CampaignConfig c;
  c.mode = mode;
  c.n_min = o.n_min;
  c.n_max = o.n_max;
  c.w_max = o.w_max;
  c.t_min = o.t.value_or(1);
  c.t_max = o.t_max;
  c.exhaustive = o.exhaustive || o.samples == 0;
  c.samples = o.samples;
  c.seed = o.seed;
  c.require_nonempty_delta = o.nonempty_delta;
  c.checks = parse_checks(o.checks);
  c.budget = {o.budget_degrees, o.budget_basis};
  c.backend = parse_backend(o.backend);
  c.oracle_max_vars = o.oracle_max_vars;
  c.threads = o.threads;
  c.record_timings = o.timings;
  c.corrupt_formula = o.corrupt_formula;
  return c;
}

void emit(const CampaignReport& report, const Options& o) {
  Output out(o.out);
  if (o.format == "csv") {
    write_csv_records(report, out.stream());
  } else {
    write_jsonl(report, out.stream());
  }
  if (!o.out.empty()) {
    std::ofstream summary(o.out + ".summary.csv");
    write_csv_summary(report, summary);
  }
  const auto& s = report.summary;
  std::cerr << "instances=" << s.instances << " matches=" << s.matches
            << " mismatches=" << s.mismatches << " skips=" << s.skips
            << " unverified=" << s.unverified << '\n';
}

int cmd_colon_check(const Options& o) {
  const WeightVector w = WeightVector::parse(o.weights);
  CampaignConfig c = campaign_config(o, "colon-check");
  if (o.checks == "all") c.checks = kCheckColon | kCheckFirstPower;
  const int t0 = o.t.value_or(1);
  if (t0 < 1) throw DomainError("t must be at least 1");
  const int top = o.t_max.value_or(o.t ? t0 : static_cast<int>(compute_delta(w).size()) + 1);
  CampaignReport report;
  report.config = c;
  for (int t = t0; t <= top; ++t) {
    auto rec = verify_instance(w, t, c);
    rec.index = report.records.size();
    report.records.push_back(std::move(rec));
  }
  for (const auto& rec : report.records) {
    auto& s = report.summary;
    ++s.instances;
    if (rec.mismatch()) ++s.mismatches;
    else if (rec.skipped()) ++s.skips;
    else ++s.matches;
  }
  if (o.format == "text") {
    Output out(o.out);
    if (report.records.front().t == 1 && !compute_delta(w).empty()) {
      const FirstPowerWitness fp = first_power_witness(w);
      out.stream() << "t=1 witness f = " << fp.f.to_string() << "\n(I : f) = "
                   << fp.brute.to_string() << '\n';
    }
    write_jsonl(report, out.stream());
  } else {
    emit(report, o);
  }
  return report.exit_status();
}

int cmd_verify(const Options& o) {
  const CampaignReport report = run_campaign(campaign_config(o, "verify"));
  emit(report, o);
  return report.exit_status();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Depth of powers of edge ideals of increasing weighted paths"};
  app.require_subcommand(1);
  Options o;

  auto add_weights = [&o](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--weights,-w", o.weights, "comma separated weights w_1..w_n");
    if (required) opt->required();
  };
  auto add_t = [&o](CLI::App* cmd) {
    cmd->add_option("--t", o.t, "power t (first power of a range)");
    cmd->add_option("--t-max", o.t_max, "last power of a range");
  };
  auto add_budget = [&o](CLI::App* cmd) {
    cmd->add_option("--budget-degrees", o.budget_degrees, "lcm closure size limit");
    cmd->add_option("--budget-basis", o.budget_basis, "total Koszul strand size limit");
    cmd->add_option("--backend", o.backend, "exact | hybrid | modp")
        ->check(CLI::IsMember({"exact", "hybrid", "modp"}));
    cmd->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  };
  auto add_output = [&o](CLI::App* cmd, std::vector<std::string> formats) {
    cmd->add_option("--out,-o", o.out, "output file (default stdout)");
    cmd->add_option("--format", o.format)->check(CLI::IsMember(formats));
  };

  auto* table = app.add_subcommand("table", "depth table from the closed formula");
  add_weights(table, true);
  add_output(table, {"text", "json"});

  auto* formula = app.add_subcommand("formula", "depth(S/I^t) from the closed formula");
  add_weights(formula, true);
  add_t(formula);
  add_output(formula, {"text", "json"});

  auto* oracle = app.add_subcommand("oracle", "depth(S/I) from Koszul homology");
  add_weights(oracle, false);
  add_t(oracle);
  oracle->add_option("--ideal", o.ideal, "generators, e.g. \"x1^2*x2, x3\"");
  oracle->add_option("--vars", o.vars, "number of variables for --ideal");
  add_budget(oracle);
  add_output(oracle, {"text", "json"});

  auto* witness = app.add_subcommand("witness", "witness g_t, rho_t and the colon (I^t : rho_t)");
  add_weights(witness, true);
  add_t(witness);
  add_output(witness, {"text", "json"});

  auto* colon = app.add_subcommand("colon-check", "closed-form colon identities for one path");
  add_weights(colon, true);
  add_t(colon);
  add_budget(colon);
  colon->add_option("--checks", o.checks, "formula,colon,first-power,all");
  add_output(colon, {"text", "json", "csv"});

  auto* verify = app.add_subcommand("verify", "exhaustive or sampled verification campaign");
  add_t(verify);
  verify->add_option("--n-min", o.n_min);
  verify->add_option("--n-max", o.n_max);
  verify->add_option("--w-max", o.w_max);
  verify->add_option("--samples", o.samples, "sampled instances (0 = exhaustive)");
  verify->add_flag("--exhaustive", o.exhaustive);
  verify->add_option("--seed", o.seed)->envname("PATHDEPTH_SEED");
  verify->add_flag("--nonempty-delta", o.nonempty_delta, "resample until delta is nonempty");
  verify->add_option("--checks", o.checks, "formula,colon,first-power,all");
  verify->add_option("--oracle-max-vars", o.oracle_max_vars);
  verify->add_flag("--timings", o.timings, "record per-instance wall time");
  verify->add_flag("--corrupt-formula", o.corrupt_formula)->group("");
  add_budget(verify);
  add_output(verify, {"json", "csv"});
  verify->callback([&o] {
    if (o.format == "text") o.format = "json";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*table) return cmd_table(o);
    if (*formula) return cmd_formula(o);
    if (*oracle) return cmd_oracle(o);
    if (*witness) return cmd_witness(o);
    if (*colon) return cmd_colon_check(o);
    if (*verify) return cmd_verify(o);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ExponentOverflow& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
