#include <doctest.h>

#include "oracles.hpp"
#include "pathdepth/errors.hpp"
#include "pathdepth/path_delta.hpp"

using namespace pathdepth;

namespace {
const WeightVector kGoldenPath = WeightVector::parse("1,1,2,2,2,3,3,3,4,4,5");
const IndexSet kTenDelta = {1, 3, 4, 6, 8, 9, 11, 12, 13, 15};

IndexSet subset_of(unsigned mask, int bits) {
  IndexSet s;
  for (int i = 0; i < bits; ++i)
    if (mask >> i & 1u) s.push_back(i + 1);
  return s;
}
}  // namespace

TEST_CASE("weight vectors") {
  CHECK(WeightVector::parse("1, 1,2").edges() == 3);
  CHECK(WeightVector::parse("1,1,2").nvars() == 4);
  CHECK(WeightVector::parse("1,1,2")(3) == 2);
  CHECK_THROWS_AS((void)WeightVector::parse("2,1"), DomainError);
  CHECK_THROWS_AS((void)WeightVector::parse("0,1"), DomainError);
  CHECK_THROWS_AS((void)WeightVector::parse("1,,2"), ParseError);
  CHECK_THROWS_AS((void)WeightVector::parse(""), ParseError);
  CHECK_THROWS_AS(WeightVector({1, 1}, Monotonicity::Strict), DomainError);
  CHECK(WeightVector::parse("1,2,3").strictly_increasing());
}

TEST_CASE("path ideals") {
  CHECK(path_ideal(WeightVector::parse("1,1,2")) ==
        MonomialIdeal::parse("x1*x2, x2*x3, x3^2*x4^2", 4));
  const auto big = path_ideal(kGoldenPath);
  CHECK(big.size() == 11);
  CHECK(big.contains(Monomial::parse("x3^2*x4^2", 12)));
  CHECK(big.contains(Monomial::parse("x11^5*x12^5", 12)));
  CHECK(path_ideal(WeightVector::parse("2")) == MonomialIdeal::parse("x1^2*x2^2", 2));
  const auto w = WeightVector::parse("1,1,2,2");
  CHECK(induced_subpath_ideal(w, 4, 5) == MonomialIdeal::parse("x4^2*x5^2", 5));
  CHECK(induced_subpath_ideal(w, 2, 2).is_zero());
  CHECK(induced_subpath_ideal(w, 1, 3) == MonomialIdeal::parse("x1*x2, x2*x3", 5));
}

TEST_CASE("delta and blocks") {
  CHECK(compute_delta(kGoldenPath) == IndexSet{1, 3, 4, 6, 7, 9});
  CHECK(compute_delta(WeightVector::parse("1,2,3,4")).empty());
  CHECK(compute_delta(WeightVector::parse("1,1")).empty());

  const auto blocks = block_decomposition(IndexSet{1, 3, 4, 6, 7, 9});
  REQUIRE(blocks.size() == 4);
  CHECK(blocks[0] == Block{1, 1});
  CHECK(blocks[1] == Block{3, 4});
  CHECK(blocks[2] == Block{6, 7});
  CHECK(blocks[3] == Block{9, 9});
  CHECK(blocks[0].type() == 1);
  CHECK(blocks[1].type() == 2);
  CHECK(blocks[3].type() == 1);
  CHECK(block_decomposition(IndexSet{2, 3, 4})[0].type() == 0);
  CHECK(block_decomposition(IndexSet{5})[0].type() == 1);
  CHECK_THROWS_AS((void)block_decomposition(IndexSet{3, 2}), DomainError);
  CHECK_THROWS_AS((void)block_decomposition(IndexSet{0}), DomainError);

  CHECK(gluable(Block{1, 1}, Block{3, 4}));
  CHECK_FALSE(gluable(Block{1, 1}, Block{4, 4}));
  CHECK_FALSE(gluable(Block{1, 3}, Block{5, 5}));
}

TEST_CASE("extended blocks") {
  const auto groups = extended_decomposition(block_decomposition(IndexSet{1, 3, 4, 6, 7, 9}));
  REQUIRE(groups.size() == 1);
  CHECK(groups[0].ones == 2);
  CHECK(groups[0].twos == 2);
  CHECK(groups[0].residue == 0);

  const auto zero = extended_decomposition(block_decomposition(IndexSet{2, 3, 4}));
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].ones == 0);
  CHECK(zero[0].twos == 0);

  const auto apart = extended_decomposition(block_decomposition(IndexSet{1, 4}));
  REQUIRE(apart.size() == 2);
  for (const auto& g : apart) {
    CHECK(g.ones == 1);
    CHECK(g.twos == 0);
    CHECK(g.residue == 1);
  }
}

TEST_CASE("block counts") {
  CHECK(block_counts(IndexSet{1, 3, 4, 6, 7, 9}) == BlockCounts{0, 3, 0, 3});
  CHECK(block_counts(IndexSet{1, 2, 3}) == BlockCounts{0, 0, 1, 1});
  CHECK(block_counts(kTenDelta) == BlockCounts{1, 3, 1, 5});
}

TEST_CASE("depth function") {
  const IndexSet ex = compute_delta(kGoldenPath);
  const std::vector<int> expected{4, 4, 3, 3, 2, 2, 1};
  for (int t = 1; t <= 7; ++t) CHECK(d_function(ex, t) == expected[static_cast<std::size_t>(t - 1)]);
  for (int t = 1; t <= 5; ++t) CHECK(d_function(IndexSet{}, t) == 1);
  CHECK(d_function(kTenDelta, 1) == 6);
  CHECK(d_function(kTenDelta, 8) == 2);
  CHECK(d_function(kTenDelta, 11) == 1);
  // hand evaluation, (a,b,c,k) = (1,3,1,5)
  const std::vector<int> full{6, 5, 5, 4, 4, 3, 3, 2, 2, 2, 1};
  for (int t = 1; t <= 11; ++t) CHECK(d_function(kTenDelta, t) == full[static_cast<std::size_t>(t - 1)]);
  CHECK_THROWS_AS((void)d_function(kTenDelta, 0), DomainError);

  CHECK(depth_formula(kGoldenPath, 3) == 3);
  CHECK(depth_formula(WeightVector::parse("1,2,4"), 5) == 1);
  CHECK(depth_formula(WeightVector::parse("1,1,2"), 1) == 2);
  CHECK(depth_formula(WeightVector::parse("1,1"), 1) == 1);
}

TEST_CASE("A/B/C partition and mu") {
  const auto p = abc_partition(kTenDelta);
  CHECK(p.a_part == IndexSet{15});
  CHECK(p.b_part == IndexSet{1, 3, 4, 6, 8, 9});
  CHECK(p.c_part == IndexSet{11, 12, 13});
  CHECK(mu_labeling(p) == std::vector<int>{15, 9, 8, 6, 4, 3, 1, 13, 12, 11});

  const auto base = abc_partition(IndexSet{2, 3});
  CHECK(base.a_part.empty());
  CHECK(base.b_part == IndexSet{2, 3});
  CHECK(base.c_part.empty());

  CHECK(mu_labeling(AbcPartition{{}, {}, {1, 2, 3}}) == std::vector<int>{3, 2, 1});

  const auto split = abc_partition(IndexSet{1, 3, 4, 5, 7, 9});
  CHECK(split.a_part == IndexSet{1});
  CHECK(split.b_part == IndexSet{7, 9});
  CHECK(split.c_part == IndexSet{3, 4, 5});
  CHECK(mu_labeling(split) == std::vector<int>{1, 9, 7, 5, 4, 3});
}

TEST_CASE("delta profile") {
  const auto p = delta_profile(kTenDelta);
  CHECK(p.counts.k == 5);
  CHECK(p.mu.size() == kTenDelta.size());
  CHECK(delta_profile(IndexSet{}).mu.empty());
}

TEST_CASE("combinatorics over all subsets of [12]") {
  for (unsigned mask = 0; mask < (1u << 12); ++mask) {
    const IndexSet delta = subset_of(mask, 12);
    const int size = static_cast<int>(delta.size());
    const auto counts = block_counts(delta);
    const auto naive = oracle::naive_counts(delta);
    REQUIRE(counts.a == naive.a);
    REQUIRE(counts.b == naive.b);
    REQUIRE(counts.c == naive.c);
    const auto p = abc_partition(delta);
    REQUIRE(static_cast<int>(p.a_part.size()) == counts.a);
    REQUIRE(static_cast<int>(p.b_part.size()) == 2 * counts.b);
    REQUIRE(static_cast<int>(p.c_part.size()) == 3 * counts.c);
    REQUIRE(counts.a + 2 * counts.b + 3 * counts.c == size);
    IndexSet all = p.a_part;
    all.insert(all.end(), p.b_part.begin(), p.b_part.end());
    all.insert(all.end(), p.c_part.begin(), p.c_part.end());
    std::sort(all.begin(), all.end());
    REQUIRE(all == delta);
    REQUIRE(d_function(delta, 1) == counts.k + 1);
    int prev = d_function(delta, 1);
    for (int t = 1; t <= size + 3; ++t) {
      const int d = d_function(delta, t);
      REQUIRE(d == oracle::naive_d(delta, t));
      REQUIRE(d <= prev);
      if (t >= size + 1) REQUIRE(d == 1);
      prev = d;
    }
  }
}

TEST_CASE("comparison inequalities over all nonempty subsets of [10]") {
  for (unsigned mask = 1; mask < (1u << 10); ++mask) {
    const IndexSet delta = subset_of(mask, 10);
    for (int t = 1; t <= 12; ++t) {
      const auto check = d_inequality_lemmas(delta, t);
      REQUIRE(check.drop_min.has_value() == (t >= 2));
      REQUIRE(check.drop_below3.has_value() == (delta.front() == 1));
      REQUIRE(check.all_hold());
    }
  }
  CHECK_THROWS_AS((void)d_inequality_lemmas(IndexSet{}, 2), DomainError);
}

TEST_CASE("hand-evaluated inequality") {
  // delta = {1,2}: a=0, b=1, k=1; d(delta,2) = 2, gamma = {2}: d = 2 and 1
  const auto check = d_inequality_lemmas(IndexSet{1, 2}, 2);
  REQUIRE(check.drop_min.has_value());
  CHECK(*check.drop_min);
  CHECK(d_function(IndexSet{1, 2}, 2) == 2);
}
