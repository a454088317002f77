#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pathdepth/ideal.hpp"
#include "pathdepth/monomial.hpp"

namespace pathdepth {

/// Sorted set of positive indices.
using IndexSet = std::vector<int>;

enum class Monotonicity { Nondecreasing, Strict };

/// Edge weights w_1..w_n of the path x_1 - x_2 - ... - x_{n+1}; edge e_i
/// joins x_i and x_{i+1}. Weights are positive and nondecreasing (strictly
/// increasing when validated with Monotonicity::Strict).
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<Exponent> weights,
                        Monotonicity mode = Monotonicity::Nondecreasing);
  /// "1,1,2,2,2,3"
  static WeightVector parse(std::string_view text,
                            Monotonicity mode = Monotonicity::Nondecreasing);

  [[nodiscard]] int edges() const noexcept { return static_cast<int>(w_.size()); }
  [[nodiscard]] std::size_t nvars() const noexcept { return w_.size() + 1; }
  /// w_i for 1 <= i <= n.
  [[nodiscard]] Exponent operator()(int i) const;
  [[nodiscard]] std::span<const Exponent> values() const noexcept { return w_; }
  [[nodiscard]] bool strictly_increasing() const noexcept;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<Exponent> w_;
};

/// f_i = (x_i x_{i+1})^{w_i}.
[[nodiscard]] Monomial edge_monomial(const WeightVector& w, int i);
/// Weighted edge ideal of the whole path.
[[nodiscard]] MonomialIdeal path_ideal(const WeightVector& w);
/// Edge ideal of the induced subpath on x_i..x_j, embedded in the full ring.
/// An empty or single-vertex subpath (i >= j) gives the zero ideal.
[[nodiscard]] MonomialIdeal induced_subpath_ideal(const WeightVector& w, int i,
                                                  int j);

/// { i in [n-2] : w_i = w_{i+1} }. The last pair (n-1, n) never contributes.
[[nodiscard]] IndexSet compute_delta(const WeightVector& w);

/// A maximal run [first, last] of consecutive integers.
struct Block {
  int first = 0;
  int last = 0;

  [[nodiscard]] int size() const noexcept { return last - first + 1; }
  /// |block| mod 3.
  [[nodiscard]] int type() const noexcept { return size() % 3; }
  friend bool operator==(const Block&, const Block&) = default;
};

/// Non-type-0 blocks at distance exactly 2 (`next` after `prev`).
[[nodiscard]] bool gluable(const Block& prev, const Block& next) noexcept;

[[nodiscard]] std::vector<Block> block_decomposition(std::span<const int> indices);

/// One part of the extended decomposition: a lone type-0 block, or a maximal
/// chain of consecutively gluable type-1/type-2 blocks.
struct ExtendedGroup {
  std::vector<Block> blocks;
  int ones = 0;     // number of type-1 blocks
  int twos = 0;     // number of type-2 blocks
  int residue = 0;  // ones mod 2

  friend bool operator==(const ExtendedGroup&, const ExtendedGroup&) = default;
};

[[nodiscard]] std::vector<ExtendedGroup> extended_decomposition(
    std::span<const Block> blocks);

struct BlockCounts {
  int a = 0;
  int b = 0;
  int c = 0;
  int k = 0;
  friend bool operator==(const BlockCounts&, const BlockCounts&) = default;
};

/// (a, b, c, k) from the extended decomposition.
[[nodiscard]] BlockCounts block_counts(std::span<const int> delta);

struct AbcPartition {
  IndexSet a_part;
  IndexSet b_part;
  IndexSet c_part;
  friend bool operator==(const AbcPartition&, const AbcPartition&) = default;
};

/// Recursive split of delta into the A, B and C parts used to order the
/// witness edges.
[[nodiscard]] AbcPartition abc_partition(std::span<const int> delta);

/// A descending, then B descending, then C descending.
[[nodiscard]] std::vector<int> mu_labeling(const AbcPartition& partition);

/// Everything derived from delta, with the block counts cross-checked against
/// the partition cardinalities (|A| = a, |B| = 2b, |C| = 3c).
struct DeltaProfile {
  IndexSet delta;
  std::vector<Block> blocks;
  std::vector<ExtendedGroup> groups;
  BlockCounts counts;
  AbcPartition partition;
  std::vector<int> mu;
};

[[nodiscard]] DeltaProfile delta_profile(std::span<const int> delta);

/// The four-branch depth function d(delta, t), t >= 1.
[[nodiscard]] int d_function(std::span<const int> delta, int t);
[[nodiscard]] int d_function(const BlockCounts& counts, int delta_size, int t);

/// Closed-form depth of S / I(P_w)^t.
[[nodiscard]] int depth_formula(const WeightVector& w, int t);

/// The three comparison inequalities on d used by the lower-bound induction.
/// An entry is empty where the inequality is not defined: the first needs
/// t >= 2, the other two need 1 in delta.
struct InequalityCheck {
  std::optional<bool> drop_min;    // d(D,t) <= min{d(D\{min D},t-1), d(D\{min D},t)+1}
  std::optional<bool> drop_below3; // d(D,t) <= d(D & [3,n], t) + 1
  std::optional<bool> drop_below4; // d(D,t) <= d(D & [4,n], t) + 1

  [[nodiscard]] bool all_hold() const noexcept {
    return drop_min.value_or(true) && drop_below3.value_or(true) &&
           drop_below4.value_or(true);
  }
};

[[nodiscard]] InequalityCheck d_inequality_lemmas(std::span<const int> delta,
                                                  int t);

}  // namespace pathdepth
