#include "pathdepth/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "pathdepth/errors.hpp"
#include "pathdepth/ideal.hpp"
#include "pathdepth/json.hpp"
#include "pathdepth/witness.hpp"

namespace pathdepth {

namespace {

std::string join(std::span<const int> xs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << '}';
  return os.str();
}

bool is_false(const std::optional<bool>& flag) { return flag.has_value() && !*flag; }

int oracle_depth(const MonomialIdeal& ideal, const CampaignConfig& config) {
  OracleOptions options;
  options.budget = config.budget;
  options.backend = config.backend;
  options.threads = 1;
  return depth_oracle(ideal, options).depth;
}

void run_checks(const WeightVector& w, int t, const IndexSet& delta,
                const CampaignConfig& config, InstanceRecord& rec) {
  const bool oracle_ok = static_cast<int>(w.nvars()) <= config.oracle_max_vars;
  const int dsize = static_cast<int>(delta.size());
  const MonomialIdeal ideal = path_ideal(w);
  const MonomialIdeal power_t = power(ideal, static_cast<unsigned>(t));

  if (config.checks & kCheckFormula) {
    if (oracle_ok) {
      rec.oracle = oracle_depth(power_t, config);
    } else {
      rec.unverified = true;
    }
  }

  if ((config.checks & kCheckColon) != 0) {
    if (dsize > 0 && t >= 2 && t <= dsize + 1) {
      rec.colon_g = colon_by_g(w, t) == colon(power_t, g_monomial(w, t).g);
      const WitnessReport report = witness_report(w, t);
      rec.colon_rho = report.match();
      rec.rho_outside_power = report.rho_outside_power;
      if ((config.checks & kCheckFormula) && oracle_ok && !report.brute_colon.is_unit()) {
        rec.rho_colon_depth = oracle_depth(report.brute_colon, config) == rec.formula;
      }
    }
    if (w.edges() >= 2 && w(1) == w(2)) rec.colon_x2 = colon_x2_identity(w, t);
    if (t >= 2) {
      rec.leaf_first = leaf_colon_identity(w, t, LeafEdge::First);
      const int n = w.edges();
      if (n == 1 || w(n) <= w(n - 1)) rec.leaf_last = leaf_colon_identity(w, t, LeafEdge::Last);
    }
  }

  if ((config.checks & kCheckFirstPower) != 0 && t == 1 && dsize > 0) {
    const FirstPowerWitness fp = first_power_witness(w);
    bool ok = fp.match();
    if (ok && (config.checks & kCheckFormula) && oracle_ok) {
      ok = oracle_depth(fp.brute, config) == block_counts(delta).k + 1;
    }
    rec.first_power = ok;
  }
}

}  // namespace

unsigned parse_checks(const std::string& list) {
  unsigned mask = 0;
  std::string item;
  std::istringstream is(list);
  while (std::getline(is, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item == "all") {
      mask |= kCheckAll;
    } else if (item == "formula") {
      mask |= kCheckFormula;
    } else if (item == "colon") {
      mask |= kCheckColon;
    } else if (item == "first-power") {
      mask |= kCheckFirstPower;
    } else {
      throw ParseError("unknown check '" + item + "' (use formula, colon, first-power, all)");
    }
  }
  if (mask == 0) throw ParseError("no checks selected");
  return mask;
}

bool InstanceRecord::mismatch() const {
  if (oracle && *oracle != formula) return true;
  return is_false(colon_g) || is_false(colon_rho) || is_false(rho_outside_power) ||
         is_false(rho_colon_depth) || is_false(colon_x2) || is_false(leaf_first) ||
         is_false(leaf_last) || is_false(first_power);
}

std::vector<WeightVector> enumerate_weights(int n_min, int n_max, Exponent w_max) {
  if (n_min < 1 || n_max < n_min || w_max < 1) {
    throw DomainError("enumeration needs 1 <= n_min <= n_max and w_max >= 1");
  }
  std::vector<WeightVector> out;
  for (int n = n_min; n <= n_max; ++n) {
    std::vector<Exponent> w(static_cast<std::size_t>(n), 1);
    while (true) {
      out.emplace_back(w);
      // next nondecreasing vector in lex order
      int i = n - 1;
      while (i >= 0 && w[static_cast<std::size_t>(i)] == w_max) --i;
      if (i < 0) break;
      const Exponent v = w[static_cast<std::size_t>(i)] + 1;
      for (int j = i; j < n; ++j) w[static_cast<std::size_t>(j)] = v;
    }
  }
  return out;
}

std::vector<WeightVector> sample_weights(int n_min, int n_max, Exponent w_max,
                                         std::size_t count, std::uint64_t seed,
                                         bool require_nonempty_delta) {
  if (n_min < 1 || n_max < n_min || w_max < 1) {
    throw DomainError("sampling needs 1 <= n_min <= n_max and w_max >= 1");
  }
  if (require_nonempty_delta && n_max < 2) {
    throw DomainError("a nonempty delta needs n_max >= 2");
  }
  std::mt19937_64 rng(seed);
  // number of trailing one bits: P(k) = 2^-(k+1)
  auto increment = [&rng](Exponent cap) {
    std::uint64_t bits = rng();
    Exponent k = 0;
    while ((bits & 1u) != 0 && k < cap) {
      ++k;
      bits >>= 1;
    }
    return k;
  };
  const auto span = static_cast<std::uint64_t>(n_max - n_min + 1);
  std::vector<WeightVector> out;
  out.reserve(count);
  while (out.size() < count) {
    const int n = n_min + static_cast<int>(rng() % span);
    std::vector<Exponent> w(static_cast<std::size_t>(n));
    Exponent current = 1 + increment(w_max - 1);
    for (auto& x : w) {
      x = current;
      current = std::min<Exponent>(w_max, current + increment(w_max));
    }
    WeightVector wv(std::move(w));
    if (require_nonempty_delta && compute_delta(wv).empty()) continue;
    out.push_back(std::move(wv));
  }
  return out;
}

InstanceRecord verify_instance(const WeightVector& w, int t, const CampaignConfig& config) {
  InstanceRecord rec;
  rec.weights = w;
  rec.t = t;
  rec.formula = depth_formula(w, t) + (config.corrupt_formula ? 1 : 0);
  const IndexSet delta = compute_delta(w);
  const auto start = std::chrono::steady_clock::now();
  try {
    run_checks(w, t, delta, config, rec);
  } catch (const BudgetExceeded& e) {
    rec.skip_reason = std::string("budget exceeded: ") + e.what();
    rec.oracle.reset();
    rec.rho_colon_depth.reset();
    rec.first_power.reset();
  }
  rec.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

CampaignReport run_campaign(const CampaignConfig& config) {
  if (config.t_min < 1) throw DomainError("t_min must be at least 1");
  if (config.t_max && *config.t_max < config.t_min) throw DomainError("t_max < t_min");

  const std::vector<WeightVector> weights =
      config.exhaustive
          ? enumerate_weights(config.n_min, config.n_max, config.w_max)
          : sample_weights(config.n_min, config.n_max, config.w_max, config.samples,
                           config.seed, config.require_nonempty_delta);

  std::vector<std::pair<std::size_t, int>> jobs;  // (weight index, t)
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (config.exhaustive && config.require_nonempty_delta && compute_delta(weights[i]).empty())
      continue;
    const int top = config.t_max.value_or(static_cast<int>(compute_delta(weights[i]).size()) + 2);
    for (int t = config.t_min; t <= top; ++t) jobs.emplace_back(i, t);
  }

  CampaignReport report;
  report.config = config;
  report.records.resize(jobs.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      try {
        auto& rec = report.records[j];
        rec = verify_instance(weights[jobs[j].first], jobs[j].second, config);
        rec.index = j;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = jobs.size();
      }
    }
  };
  const unsigned threads =
      std::max(1u, config.threads == 0 ? std::thread::hardware_concurrency() : config.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  auto& s = report.summary;
  s.instances = report.records.size();
  for (const auto& rec : report.records) {
    if (rec.mismatch()) {
      ++s.mismatches;
    } else if (rec.skipped()) {
      ++s.skips;
    } else if (rec.unverified && !rec.colon_g && !rec.first_power && !rec.colon_x2 &&
               !rec.leaf_first) {
      ++s.unverified;
    } else {
      ++s.matches;
    }
  }
  return report;
}

namespace {

Json config_json(const CampaignConfig& c) {
  Json j{{"type", "config"},
         {"mode", c.mode},
         {"n_min", c.n_min},
         {"n_max", c.n_max},
         {"w_max", c.w_max},
         {"t_min", c.t_min}};
  j["t_max"] = c.t_max ? Json(*c.t_max) : Json("delta+2");
  j["exhaustive"] = c.exhaustive;
  j["samples"] = c.samples;
  j["seed"] = c.seed;
  j["require_nonempty_delta"] = c.require_nonempty_delta;
  Json checks = Json::array();
  if (c.checks & kCheckFormula) checks.push_back("formula");
  if (c.checks & kCheckColon) checks.push_back("colon");
  if (c.checks & kCheckFirstPower) checks.push_back("first-power");
  j["checks"] = checks;
  j["budget_degrees"] = c.budget.max_degrees;
  j["budget_basis"] = c.budget.max_basis;
  j["backend"] = to_string(c.backend);
  j["oracle_max_vars"] = c.oracle_max_vars;
  if (c.corrupt_formula) j["corrupt_formula"] = true;
  return j;
}

Json record_json(const InstanceRecord& r, const CampaignConfig& c) {
  Json j{{"type", "instance"},
         {"index", r.index},
         {"weights", r.weights.to_string()},
         {"t", r.t},
         {"formula", r.formula}};
  j["oracle"] = r.oracle ? Json(*r.oracle) : Json(nullptr);
  auto flag = [&j](const char* name, const std::optional<bool>& v) {
    if (v) j[name] = *v;
  };
  flag("colon_g", r.colon_g);
  flag("colon_rho", r.colon_rho);
  flag("rho_outside_power", r.rho_outside_power);
  flag("rho_colon_depth", r.rho_colon_depth);
  flag("colon_x2", r.colon_x2);
  flag("leaf_first", r.leaf_first);
  flag("leaf_last", r.leaf_last);
  flag("first_power", r.first_power);
  const char* status = r.mismatch() ? "mismatch" : r.skipped() ? "skipped" : "match";
  j["status"] = status;
  if (r.unverified) j["unverified"] = true;
  if (r.skipped()) j["skip_reason"] = r.skip_reason;
  if (r.mismatch()) {
    j["repro"] = Json{{"weights", r.weights.to_string()}, {"t", r.t}, {"seed", c.seed}};
  }
  if (c.record_timings) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

Json summary_json(const CampaignReport& report) {
  const auto& s = report.summary;
  return Json{{"type", "summary"},         {"instances", s.instances},
              {"matches", s.matches},      {"mismatches", s.mismatches},
              {"skips", s.skips},          {"unverified", s.unverified},
              {"exit_status", report.exit_status()}};
}

std::string csv_flag(const std::optional<bool>& v) {
  return v ? (*v ? "1" : "0") : "";
}

}  // namespace

void write_jsonl(const CampaignReport& report, std::ostream& out) {
  out << config_json(report.config).dump() << '\n';
  for (const auto& rec : report.records) out << record_json(rec, report.config).dump() << '\n';
  out << summary_json(report).dump() << '\n';
}

void write_csv_records(const CampaignReport& report, std::ostream& out) {
  out << "index,weights,t,formula,oracle,colon_g,colon_rho,rho_outside_power,rho_colon_depth,"
         "colon_x2,leaf_first,leaf_last,first_power,status,seed";
  if (report.config.record_timings) out << ",elapsed_ms";
  out << '\n';
  for (const auto& r : report.records) {
    out << r.index << ",\"" << r.weights.to_string() << "\"," << r.t << ',' << r.formula << ','
        << (r.oracle ? std::to_string(*r.oracle) : "") << ',' << csv_flag(r.colon_g) << ','
        << csv_flag(r.colon_rho) << ',' << csv_flag(r.rho_outside_power) << ','
        << csv_flag(r.rho_colon_depth) << ',' << csv_flag(r.colon_x2) << ','
        << csv_flag(r.leaf_first) << ',' << csv_flag(r.leaf_last) << ','
        << csv_flag(r.first_power) << ','
        << (r.mismatch() ? "mismatch" : r.skipped() ? "skipped" : "match") << ','
        << report.config.seed;
    if (report.config.record_timings) out << ',' << r.elapsed_ms;
    out << '\n';
  }
}

void write_csv_summary(const CampaignReport& report, std::ostream& out) {
  const auto& s = report.summary;
  out << "instances,matches,mismatches,skips,unverified,seed,exit_status\n"
      << s.instances << ',' << s.matches << ',' << s.mismatches << ',' << s.skips << ','
      << s.unverified << ',' << report.config.seed << ',' << report.exit_status() << '\n';
}

std::string format_table(const WeightVector& w) {
  const DeltaProfile p = delta_profile(compute_delta(w));
  const int dsize = static_cast<int>(p.delta.size());
  std::ostringstream os;
  os << "weights: (" << w.to_string() << ")  n = " << w.edges() << '\n';
  os << "delta: " << join(p.delta) << "  |delta| = " << dsize << '\n';
  os << "blocks:";
  if (p.blocks.empty()) os << " none";
  for (const auto& b : p.blocks) {
    os << " [" << b.first << ".." << b.last << "]/type" << b.type();
  }
  os << '\n';
  os << "a = " << p.counts.a << ", b = " << p.counts.b << ", c = " << p.counts.c
     << ", k = " << p.counts.k << '\n';
  os << "A = " << join(p.partition.a_part) << "  B = " << join(p.partition.b_part)
     << "  C = " << join(p.partition.c_part) << '\n';
  os << "mu = (";
  for (std::size_t i = 0; i < p.mu.size(); ++i) os << (i ? "," : "") << p.mu[i];
  os << ")\n";
  os << "  t  depth\n";
  std::vector<int> seq;
  for (int t = 1; t <= dsize + 1; ++t) {
    const int d = depth_formula(w, t);
    seq.push_back(d);
    os << std::setw(3) << t << "  " << std::setw(5) << d << '\n';
  }
  os << "sequence: (";
  for (std::size_t i = 0; i < seq.size(); ++i) os << (i ? "," : "") << seq[i];
  os << ")\n";
  os << "depth = 1 for all t >= " << dsize + 1 << '\n';
  return os.str();
}

}  // namespace pathdepth
