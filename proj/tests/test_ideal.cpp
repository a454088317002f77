#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "pathdepth/errors.hpp"
#include "pathdepth/ideal.hpp"

using namespace pathdepth;

namespace {
MonomialIdeal I(const char* s, std::size_t n = 4) { return MonomialIdeal::parse(s, n); }

oracle::Exps raw(const Monomial& m) {
  return oracle::Exps(m.exponents().begin(), m.exponents().end());
}
std::vector<oracle::Exps> raw(const MonomialIdeal& i) {
  std::vector<oracle::Exps> out;
  for (const auto& g : i.generators()) out.push_back(raw(g));
  return out;
}

std::vector<Monomial> random_gens(std::mt19937& rng, std::size_t n, unsigned hi, int count) {
  std::vector<Monomial> gens;
  for (int k = 0; k < count; ++k) {
    std::vector<Exponent> e(n);
    for (auto& x : e) x = rng() % (hi + 1);
    if (std::all_of(e.begin(), e.end(), [](Exponent x) { return x == 0; })) e[0] = 1;
    gens.emplace_back(e);
  }
  return gens;
}

// Box large enough to contain every minimal generator that can arise.
oracle::Exps box_of(std::initializer_list<const MonomialIdeal*> ideals, unsigned extra = 0) {
  oracle::Exps b((*ideals.begin())->nvars(), extra);
  for (const auto* i : ideals)
    for (const auto& g : i->generators())
      for (std::size_t v = 0; v < b.size(); ++v) b[v] = std::max<unsigned>(b[v], g[v] + extra);
  return b;
}

bool is_minimal(const MonomialIdeal& i) {
  const auto gens = i.generators();
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = 0; b < gens.size(); ++b)
      if (a != b && divides(gens[a], gens[b])) return false;
  return true;
}
}  // namespace

TEST_CASE("minimalization") {
  CHECK(I("x1, x1*x2") == I("x1"));
  CHECK(I("x1*x2, x2*x3").size() == 2);
  CHECK(I("1, x1").is_unit());
  CHECK(I("1, x1").size() == 1);
  CHECK(I("0").is_zero());
  CHECK(I("").is_zero());
  CHECK(I("0").to_string() == "(0)");
}

TEST_CASE("powers") {
  CHECK(power(I("x1*x2, x2*x3"), 2) == I("x1^2*x2^2, x1*x2^2*x3, x2^2*x3^2"));
  CHECK(power(I("x1*x2, x2*x3"), 1) == I("x1*x2, x2*x3"));
  CHECK(power(I("x1^2"), 3) == I("x1^6"));
  CHECK(power(I("x1"), 0).is_unit());
  CHECK(power(I("0"), 2).is_zero());
}

TEST_CASE("colon, intersection, sum") {
  const auto J = I("x1*x2, x2*x3");
  CHECK(colon(J, Monomial::parse("x2", 4)) == I("x1, x3"));
  CHECK(colon(J, Monomial(4)) == J);
  CHECK(intersection(I("x1, x3"), I("x2, x4^2")) == I("x1*x2, x1*x4^2, x2*x3, x3*x4^2"));
  CHECK(intersection(J, J) == J);
  CHECK(sum(I("x1"), I("x1*x2")) == I("x1"));
  CHECK(intersection(J, I("0")).is_zero());
  CHECK(colon(J, Monomial::parse("x1*x2", 4)).is_unit());
}

TEST_CASE("membership and equality") {
  const auto J = I("x1*x2, x2*x3");
  CHECK(J.contains(Monomial::parse("x1^2*x2", 4)));
  CHECK_FALSE(I("x1*x2").contains(Monomial::parse("x1", 4)));
  CHECK(I("x1, x1*x2") == I("x1"));
  CHECK(is_subset(I("x1*x2"), I("x1")));
  CHECK_FALSE(is_subset(I("x1"), I("x1*x2")));
  CHECK_THROWS_AS((void)J.contains(Monomial(3)), DimensionMismatch);
  CHECK_THROWS_AS((void)sum(J, I("x1", 3)), DimensionMismatch);
}

TEST_CASE("random ideal operations agree with brute-force membership") {
  std::mt19937 rng(2024);
  const std::size_t n = 4;
  for (int it = 0; it < 60; ++it) {
    const auto A = MonomialIdeal::minimalize(n, random_gens(rng, n, 3, 1 + rng() % 4));
    const auto B = MonomialIdeal::minimalize(n, random_gens(rng, n, 3, 1 + rng() % 4));
    const Monomial f = random_gens(rng, n, 3, 1)[0];
    const auto ra = raw(A), rb = raw(B);

    const auto C = colon(A, f), X = intersection(A, B), P = sum(A, B), Q = product(A, B);
    for (const auto* r : {&C, &X, &P, &Q}) CHECK(is_minimal(*r));

    oracle::Exps box = box_of({&A, &B}, 0);
    for (auto& x : box) x *= 2;
    oracle::for_box(box, [&](const oracle::Exps& m) {
      const Monomial mm(std::vector<Exponent>(m.begin(), m.end()));
      const bool in_a = oracle::member(ra, m), in_b = oracle::member(rb, m);
      CHECK(C.contains(mm) == oracle::member(ra, oracle::mul(m, raw(f))));
      CHECK(X.contains(mm) == (in_a && in_b));
      CHECK(P.contains(mm) == (in_a || in_b));
      bool in_q = false;
      for (const auto& a : ra)
        for (const auto& b : rb)
          if (oracle::divides(oracle::mul(a, b), m)) in_q = true;
      CHECK(Q.contains(mm) == in_q);
    });
  }
}

TEST_CASE("power matches the naive product and adds exponents") {
  std::mt19937 rng(99);
  for (int it = 0; it < 30; ++it) {
    const auto A = MonomialIdeal::minimalize(3, random_gens(rng, 3, 2, 1 + rng() % 3));
    for (unsigned t = 1; t <= 3; ++t) {
      const auto naive = oracle::naive_power(raw(A), t, 3);
      std::vector<Monomial> gens;
      for (const auto& e : naive) gens.emplace_back(std::vector<Exponent>(e.begin(), e.end()));
      CHECK(power(A, t) == MonomialIdeal::minimalize(3, gens));
    }
    CHECK(product(power(A, 2), power(A, 1)) == power(A, 3));
  }
}

TEST_CASE("minimalize is idempotent and order independent") {
  std::mt19937 rng(5);
  for (int it = 0; it < 100; ++it) {
    auto gens = random_gens(rng, 4, 3, 1 + rng() % 8);
    const auto once = MonomialIdeal::minimalize(4, gens);
    std::vector<Monomial> again(once.generators().begin(), once.generators().end());
    CHECK(MonomialIdeal::minimalize(4, again) == once);
    std::shuffle(gens.begin(), gens.end(), rng);
    const auto shuffled = MonomialIdeal::minimalize(4, gens);
    CHECK(shuffled == once);
    CHECK(std::equal(shuffled.generators().begin(), shuffled.generators().end(),
                     once.generators().begin(), once.generators().end()));
  }
}
