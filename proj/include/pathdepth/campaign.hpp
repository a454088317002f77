#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pathdepth/depth_oracle.hpp"
#include "pathdepth/path_delta.hpp"

namespace pathdepth {

/// Which verifications a campaign runs on each (weights, t) instance.
enum Check : unsigned {
  kCheckFormula = 1u << 0,     // oracle depth of S/I^t against the formula
  kCheckColon = 1u << 1,       // closed-form colon ideals against brute force
  kCheckFirstPower = 1u << 2,  // t = 1 witness f and depth of S/(I:f)
  kCheckAll = kCheckFormula | kCheckColon | kCheckFirstPower,
};

[[nodiscard]] unsigned parse_checks(const std::string& list);

struct CampaignConfig {
  std::string mode = "verify";
  int n_min = 3;
  int n_max = 6;
  Exponent w_max = 3;
  int t_min = 1;
  /// Largest power per instance; unset means |delta| + 2.
  std::optional<int> t_max;
  bool exhaustive = true;
  std::size_t samples = 0;
  std::uint64_t seed = 42;
  bool require_nonempty_delta = false;
  unsigned checks = kCheckAll;
  OracleBudget budget;
  RankBackend backend = RankBackend::Exact;
  /// The oracle only runs when N = n + 1 is at most this.
  int oracle_max_vars = 9;
  unsigned threads = 1;
  /// Writes per-instance wall time into the records (breaks byte identity).
  bool record_timings = false;
  /// Harness self-test: reports formula + 1 so every verified instance fails.
  bool corrupt_formula = false;
};

/// Outcome of one verification; empty when it did not apply.
struct InstanceRecord {
  std::size_t index = 0;
  WeightVector weights;
  int t = 0;
  int formula = 0;
  std::optional<int> oracle;
  std::optional<bool> colon_g;
  std::optional<bool> colon_rho;
  std::optional<bool> rho_outside_power;
  std::optional<bool> rho_colon_depth;  // depth(S/(I^t:rho_t)) = formula
  std::optional<bool> colon_x2;
  std::optional<bool> leaf_first;
  std::optional<bool> leaf_last;
  std::optional<bool> first_power;  // closed form (I:f) and its depth
  bool unverified = false;          // formula only: above the oracle size limit
  std::string skip_reason;          // non-empty when the oracle was over budget
  double elapsed_ms = 0.0;

  [[nodiscard]] bool mismatch() const;
  [[nodiscard]] bool skipped() const { return !skip_reason.empty(); }
};

struct CampaignSummary {
  std::size_t instances = 0;
  std::size_t matches = 0;
  std::size_t mismatches = 0;
  std::size_t skips = 0;
  std::size_t unverified = 0;
};

struct CampaignReport {
  CampaignConfig config;
  std::vector<InstanceRecord> records;
  CampaignSummary summary;

  /// 0 when nothing mismatched, 1 otherwise.
  [[nodiscard]] int exit_status() const { return summary.mismatches == 0 ? 0 : 1; }
};

/// All nondecreasing weight vectors with n_min <= n <= n_max and entries in
/// [1, w_max], ordered by n and then lexicographically.
[[nodiscard]] std::vector<WeightVector> enumerate_weights(int n_min, int n_max,
                                                          Exponent w_max);

/// Seeded stream: n uniform, then weights as prefix sums of small random
/// increments (geometric-like, capped at w_max).
[[nodiscard]] std::vector<WeightVector> sample_weights(int n_min, int n_max, Exponent w_max,
                                                       std::size_t count, std::uint64_t seed,
                                                       bool require_nonempty_delta);

/// Verifies a single instance with the checks selected in `config`.
[[nodiscard]] InstanceRecord verify_instance(const WeightVector& w, int t,
                                             const CampaignConfig& config);

[[nodiscard]] CampaignReport run_campaign(const CampaignConfig& config);

void write_jsonl(const CampaignReport& report, std::ostream& out);
void write_csv_records(const CampaignReport& report, std::ostream& out);
void write_csv_summary(const CampaignReport& report, std::ostream& out);

/// Human-readable depth table for `w`: delta, its blocks and counts, the
/// A/B/C split, mu and d(delta, t) for t = 1..|delta|+1.
[[nodiscard]] std::string format_table(const WeightVector& w);

}  // namespace pathdepth
