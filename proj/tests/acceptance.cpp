// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "pathdepth/campaign.hpp"
#include "pathdepth/depth_oracle.hpp"
#include "pathdepth/path_delta.hpp"
#include "pathdepth/witness.hpp"

using namespace pathdepth;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
  Outcome out;
  const auto start = Clock::now();
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double ms = ms_since(start);
  std::printf("%s %d %s: %s [%.1f ms]\n", out.pass ? "PASS" : "FAIL", id, title,
              out.detail.c_str(), ms);
  std::fflush(stdout);
  if (!out.pass) ++failures;
}

IndexSet subset_of(unsigned mask, int bits) {
  IndexSet s;
  for (int i = 0; i < bits; ++i)
    if (mask >> i & 1u) s.push_back(i + 1);
  return s;
}

int oracle_depth(const MonomialIdeal& ideal) {
  OracleOptions o;
  o.threads = 1;
  return depth_oracle(ideal, o).depth;
}

Outcome golden_table() {
  const auto w = WeightVector::parse("1,1,2,2,2,3,3,3,4,4,5");
  const auto start = Clock::now();
  const IndexSet delta = compute_delta(w);
  const BlockCounts counts = block_counts(delta);
  std::vector<int> seq;
  for (int t = 1; t <= static_cast<int>(delta.size()) + 1; ++t) seq.push_back(depth_formula(w, t));
  const double ms = ms_since(start);
  const std::string table = format_table(w);
  std::ostringstream os;
  os << "delta size " << delta.size() << ", (a,b,c)=(" << counts.a << "," << counts.b << ","
     << counts.c << "), table computed in " << ms << " ms";
  const bool ok = delta == IndexSet{1, 3, 4, 6, 7, 9} && counts.a == 0 && counts.b == 3 &&
                  counts.c == 0 && seq == std::vector<int>{4, 4, 3, 3, 2, 2, 1} && ms < 1.0 &&
                  table.find("sequence: (4,4,3,3,2,2,1)") != std::string::npos;
  return {ok, os.str()};
}

Outcome golden_partition() {
  const IndexSet delta{1, 3, 4, 6, 8, 9, 11, 12, 13, 15};
  const auto p = abc_partition(delta);
  const auto mu = mu_labeling(p);
  const bool ok = p.a_part == IndexSet{15} && p.b_part == IndexSet{1, 3, 4, 6, 8, 9} &&
                  p.c_part == IndexSet{11, 12, 13} &&
                  mu == std::vector<int>{15, 9, 8, 6, 4, 3, 1, 13, 12, 11};
  return {ok, ok ? "A, B, C and mu match" : "partition differs"};
}

Outcome golden_uveo() {
  struct Case {
    const char* weights;
    int t;
    const char *d, *e, *o, *u, *v;
  };
  const Case cases[] = {
      {"1,1,2,2,2,3", 2, "x5^2*x6^4", "0", "x5^2", "x5^2, x7^3", "x4^2, x6"},
      {"1,1,1,1,3,3,3,4", 3, "x6^3*x7^6*x8^6", "0", "x5^3, x7^3", "x5^3, x7^3, x9^4",
       "x6^3, x8"},
      {"1,1,1,1,1,2,2,2,2,2,3", 6, "x5*x6^2*x7^2*x8^4*x9^4*x10^4*x11^4", "x4, x6, x8^2, x10^2",
       "x5", "x5, x7^2, x9^2, x11", "x4, x6, x8^2, x10^2, x12^3"},
  };
  int good = 0;
  for (const auto& c : cases) {
    const auto w = WeightVector::parse(c.weights);
    const std::size_t n = w.nvars();
    const auto g = g_monomial(w, c.t);
    if (g.factors.size() != 1 || g.factors[0].monomial != Monomial::parse(c.d, n)) continue;
    const auto f = uveo(w, g.factors[0]);
    if (f.e == MonomialIdeal::parse(c.e, n) && f.o == MonomialIdeal::parse(c.o, n) &&
        f.u == MonomialIdeal::parse(c.u, n) && f.v == MonomialIdeal::parse(c.v, n))
      ++good;
  }
  return {good == 3, std::to_string(good) + "/3 worked examples reproduced"};
}

Outcome exhaustive_oracle() {
  CampaignConfig c;
  c.mode = "verify";
  c.n_min = 3;
  c.n_max = 6;
  c.w_max = 3;
  c.exhaustive = true;
  c.checks = kCheckAll;
  const auto r = run_campaign(c);
  std::size_t compared = 0;
  for (const auto& rec : r.records)
    if (rec.oracle && *rec.oracle == rec.formula) ++compared;
  std::ostringstream os;
  os << r.summary.instances << " (w,t) instances, " << compared << " oracle==formula, "
     << r.summary.mismatches << " mismatches, " << r.summary.skips << " skips";
  return {r.summary.mismatches == 0 && r.summary.skips == 0 && compared == r.summary.instances,
          os.str()};
}

Outcome first_power() {
  const auto ws = sample_weights(3, 8, 4, 100, 42, true);
  int good = 0;
  std::string first_bad;
  for (const auto& w : ws) {
    const int k = block_counts(compute_delta(w)).k;
    const int d = oracle_depth(path_ideal(w));
    if (d == k + 1 && depth_formula(w, 1) == k + 1) ++good;
    else if (first_bad.empty()) first_bad = " first failure w=" + w.to_string();
  }
  return {good == 100, std::to_string(good) + "/100 seeded paths with depth = k+1" + first_bad};
}

Outcome colon_identities() {
  CampaignConfig c;
  c.exhaustive = false;
  c.samples = 200;
  c.seed = 42;
  c.n_min = 1;
  c.n_max = 8;
  c.w_max = 4;
  c.checks = kCheckColon | kCheckFirstPower;
  const auto r = run_campaign(c);
  std::size_t g = 0, rho = 0, x2 = 0, leaf = 0, fp = 0;
  std::string first_bad;
  for (const auto& rec : r.records) {
    if (rec.mismatch() && first_bad.empty()) {
      std::ostringstream bad;
      bad << "; first mismatch w=(" << rec.weights.to_string() << ") t=" << rec.t;
      first_bad = bad.str();
    }
    g += rec.colon_g.has_value();
    rho += rec.colon_rho.has_value();
    x2 += rec.colon_x2.has_value();
    leaf += rec.leaf_first.has_value() + rec.leaf_last.has_value();
    fp += rec.first_power.has_value();
  }
  std::ostringstream os;
  os << r.summary.instances << " (w,t) instances; checked g-colon " << g << ", rho-colon " << rho
     << ", x2-colon " << x2 << ", leaf " << leaf << ", first-power " << fp << "; "
     << r.summary.mismatches << " mismatches" << first_bad;
  return {r.summary.mismatches == 0 && g > 0 && rho > 0 && x2 > 0 && leaf > 0, os.str()};
}

Outcome combinatorics() {
  const auto start = Clock::now();
  std::size_t violations = 0, sets = 0;
  for (unsigned mask = 0; mask < (1u << 12); ++mask) {
    const IndexSet delta = subset_of(mask, 12);
    const int size = static_cast<int>(delta.size());
    const auto counts = block_counts(delta);
    const auto p = abc_partition(delta);
    bool ok = static_cast<int>(p.a_part.size()) == counts.a &&
              static_cast<int>(p.b_part.size()) == 2 * counts.b &&
              static_cast<int>(p.c_part.size()) == 3 * counts.c &&
              counts.a + 2 * counts.b + 3 * counts.c == size &&
              d_function(delta, 1) == counts.k + 1;
    for (int t = 1; t <= size + 4; ++t) {
      const int d = d_function(delta, t);
      if (d != oracle::naive_d(delta, t)) ok = false;
      if (t > 1 && d > d_function(delta, t - 1)) ok = false;
      if (t >= size + 1 && d != 1) ok = false;
    }
    violations += !ok;
    ++sets;
  }
  std::size_t triples = 0;
  for (unsigned mask = 1; mask < (1u << 10); ++mask) {
    const IndexSet delta = subset_of(mask, 10);
    for (int t = 2; t <= 12; ++t) {
      violations += !d_inequality_lemmas(delta, t).all_hold();
      ++triples;
    }
  }
  const double ms = ms_since(start);
  std::ostringstream os;
  os << sets << " subsets of [12], " << triples << " (delta,t) inequality cases, " << violations
     << " violations";
  return {violations == 0 && ms <= 60000.0, os.str()};
}

Outcome complete_intersections() {
  std::mt19937 rng(8);
  int checked = 0, good = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      const int g = std::popcount(mask);
      if (g > 4) continue;
      std::vector<Monomial> gens;
      for (std::size_t v = 0; v < n; ++v)
        if (mask >> v & 1u) gens.push_back(Monomial::variable(n, v + 1, 1 + rng() % 4));
      ++checked;
      good += oracle_depth(MonomialIdeal::minimalize(n, gens)) == static_cast<int>(n) - g;
    }
  }
  return {good == checked,
          std::to_string(good) + "/" + std::to_string(checked) + " pure-power ideals with depth N-g"};
}

Outcome stretch() {
  const auto w = WeightVector::parse("1,1,2,2,2,3,3,3,4,4,5");
  OracleOptions o;
  o.threads = 0;
  try {
    const auto r = depth_oracle(path_ideal(w), o);
    std::ostringstream os;
    os << "depth " << r.depth << " over " << r.degrees_examined << " multidegrees in "
       << r.elapsed_ms << " ms";
    return {r.depth == 4 && r.elapsed_ms <= 600000.0, os.str()};
  } catch (const BudgetExceeded& e) {
    return {true, std::string("skipped, BudgetExceeded: ") + e.what()};
  }
}

}  // namespace

int main() {
  report(1, "golden depth table (1,1,2,2,2,3,3,3,4,4,5)", golden_table);
  report(2, "golden A/B/C partition and mu", golden_partition);
  report(3, "golden U/V/E/O ideals", golden_uveo);
  report(4, "exhaustive oracle vs formula, n in [3,6], w in {1,2,3}, t <= |delta|+2",
         exhaustive_oracle);
  report(5, "first power depth k+1 on 100 seeded paths", first_power);
  report(6, "colon identities on 200 seeded paths", colon_identities);
  report(7, "combinatorial layer exhaustive", combinatorics);
  report(8, "complete intersections of pure powers", complete_intersections);
  report(9, "oracle on the eleven-edge golden path at t=1", stretch);
  std::printf("%s: %d failing criteria\n", failures == 0 ? "ALL PASS" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
