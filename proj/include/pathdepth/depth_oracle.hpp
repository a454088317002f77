#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathdepth/errors.hpp"
#include "pathdepth/ideal.hpp"
#include "pathdepth/monomial.hpp"

namespace pathdepth {

/// The instance needs more work than the configured budget allows. The
/// oracle never returns a partial answer.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// depth(S/I) is only computed for nonzero proper ideals.
class DegenerateIdeal : public DomainError {
 public:
  using DomainError::DomainError;
};

enum class RankBackend {
  Exact,   // every strand over Q
  Hybrid,  // strands over Z/p first, redone over Q when homology shows up
  ModP,    // everything over Z/p: depth over a field of characteristic p
};

[[nodiscard]] std::string to_string(RankBackend backend);
[[nodiscard]] RankBackend parse_backend(const std::string& name);

struct OracleBudget {
  std::size_t max_degrees = 2'000'000;  // size of the lcm closure
  std::size_t max_basis = 10'000'000;   // summed strand dimensions
};

/// Candidate multidegrees for nonzero Betti numbers: {0} and all lcms of
/// nonempty generator subsets. Stored flat, `nvars` exponents per entry, in
/// discovery order.
class MultidegreeSet {
 public:
  MultidegreeSet(std::size_t nvars, std::vector<Exponent> flat)
      : nvars_(nvars), flat_(std::move(flat)) {}

  [[nodiscard]] std::size_t nvars() const noexcept { return nvars_; }
  [[nodiscard]] std::size_t size() const noexcept {
    return nvars_ == 0 ? 0 : flat_.size() / nvars_;
  }
  [[nodiscard]] Monomial at(std::size_t i) const;
  [[nodiscard]] const Exponent* data(std::size_t i) const noexcept {
    return flat_.data() + i * nvars_;
  }
  [[nodiscard]] bool contains(const Monomial& m) const;

 private:
  std::size_t nvars_;
  std::vector<Exponent> flat_;
};

/// Throws BudgetExceeded once the closure would grow past `budget` entries.
[[nodiscard]] MultidegreeSet lcm_closure(const MonomialIdeal& ideal,
                                         std::size_t budget = OracleBudget{}.max_degrees);

/// dim Tor_i(k, S/I)_a for i = 0..N, as the homology of the degree-a strand
/// of the Koszul complex on x_1..x_N tensored with S/I.
[[nodiscard]] std::vector<std::size_t> koszul_homology_dims(
    const MonomialIdeal& ideal, const Monomial& a,
    RankBackend backend = RankBackend::Exact);

struct DepthReport {
  std::size_t nvars = 0;
  std::size_t num_gens = 0;
  int depth = 0;
  int projective_dimension = 0;
  /// betti_support[i] = number of multidegrees a with Tor_i(k, S/I)_a != 0.
  std::vector<std::size_t> betti_support;
  std::size_t degrees_examined = 0;
  std::size_t basis_total = 0;
  std::size_t exact_recomputations = 0;  // Hybrid only
  double elapsed_ms = 0.0;
  RankBackend backend = RankBackend::Exact;
};

struct OracleOptions {
  OracleBudget budget;
  RankBackend backend = RankBackend::Exact;
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// depth(S/I) = N - pd(S/I), with pd read off the Koszul strands over the
/// lcm closure.
[[nodiscard]] DepthReport depth_oracle(const MonomialIdeal& ideal,
                                       const OracleOptions& options = {});

}  // namespace pathdepth
