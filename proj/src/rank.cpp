#include "pathdepth/rank.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <optional>
#include <unordered_map>

namespace pathdepth {
namespace {

struct Overflow {};

// Checked 64-bit arithmetic; throws Overflow so the caller can switch to GMP.
struct CheckedInt {
  using value_type = std::int64_t;
  static value_type from(std::int64_t v) { return v; }
  static bool is_zero(value_type v) { return v == 0; }
  static value_type mul(value_type a, value_type b) {
    value_type out;
    if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
    return out;
  }
  static value_type sub(value_type a, value_type b) {
    value_type out;
    if (__builtin_sub_overflow(a, b, &out)) throw Overflow{};
    return out;
  }
  static value_type gcd(value_type a, value_type b) {
    if (a == INT64_MIN || b == INT64_MIN) throw Overflow{};
    return std::gcd(a, b);
  }
  static value_type div(value_type a, value_type b) { return a / b; }
};

struct BigInt {
  using value_type = mpz_class;
  static value_type from(std::int64_t v) { return mpz_class(static_cast<long>(v)); }
  static bool is_zero(const value_type& v) { return sgn(v) == 0; }
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type sub(const value_type& a, const value_type& b) { return a - b; }
  static value_type gcd(const value_type& a, const value_type& b) {
    mpz_class out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
  }
  static value_type div(const value_type& a, const value_type& b) { return a / b; }
};

template <class Num>
using Column = std::vector<std::pair<std::uint32_t, typename Num::value_type>>;

// c <- p*c - q*pivot where p, q are the entries at the shared lowest row.
template <class Num>
Column<Num> combine(const Column<Num>& c, const Column<Num>& pivot) {
  const auto& q = c.back().second;
  const auto& p = pivot.back().second;
  Column<Num> out;
  out.reserve(c.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < c.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < c.size() && c[i].first < pivot[j].first)) {
      out.emplace_back(c[i].first, Num::mul(p, c[i].second));
      ++i;
    } else if (i == c.size() || pivot[j].first < c[i].first) {
      out.emplace_back(pivot[j].first, Num::sub(Num::from(0), Num::mul(q, pivot[j].second)));
      ++j;
    } else {
      auto v = Num::sub(Num::mul(p, c[i].second), Num::mul(q, pivot[j].second));
      if (!Num::is_zero(v)) out.emplace_back(c[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  if (!out.empty()) {
    typename Num::value_type content = Num::from(0);
    for (const auto& [row, v] : out) content = Num::gcd(content, v);
    if (!Num::is_zero(content)) {
      for (auto& entry : out) entry.second = Num::div(entry.second, content);
    }
  }
  return out;
}

template <class Num>
std::size_t reduce(const SparseMatrix& m) {
  std::unordered_map<std::uint32_t, Column<Num>> pivots;
  std::size_t rank = 0;
  for (const auto& source : m.columns) {
    Column<Num> c;
    c.reserve(source.size());
    for (const auto& [row, v] : source) c.emplace_back(row, Num::from(v));
    while (!c.empty()) {
      auto it = pivots.find(c.back().first);
      if (it == pivots.end()) break;
      c = combine<Num>(c, it->second);
    }
    if (!c.empty()) {
      const auto low = c.back().first;
      pivots.emplace(low, std::move(c));
      ++rank;
    }
  }
  return rank;
}

}  // namespace

std::size_t rank_exact(const SparseMatrix& m) {
  try {
    return reduce<CheckedInt>(m);
  } catch (const Overflow&) {
    return reduce<BigInt>(m);
  }
}

std::size_t rank_mod_p(const SparseMatrix& m, std::uint64_t prime) {
  using Column = std::vector<std::pair<std::uint32_t, std::uint64_t>>;
  auto reduce_mod = [prime](std::int64_t v) {
    const auto r = v % static_cast<std::int64_t>(prime);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(prime) : r);
  };
  auto inverse = [prime](std::uint64_t a) {
    std::uint64_t result = 1, base = a, e = prime - 2;
    while (e > 0) {
      if (e & 1) result = result * base % prime;
      base = base * base % prime;
      e >>= 1;
    }
    return result;
  };

  std::unordered_map<std::uint32_t, Column> pivots;  // normalized: low entry 1
  std::size_t rank = 0;
  for (const auto& source : m.columns) {
    Column c;
    for (const auto& [row, v] : source) {
      if (auto r = reduce_mod(v); r != 0) c.emplace_back(row, r);
    }
    while (!c.empty()) {
      auto it = pivots.find(c.back().first);
      if (it == pivots.end()) break;
      const std::uint64_t q = c.back().second;
      const Column& pivot = it->second;
      Column out;
      std::size_t i = 0, j = 0;
      while (i < c.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < c.size() && c[i].first < pivot[j].first)) {
          out.push_back(c[i++]);
        } else if (i == c.size() || pivot[j].first < c[i].first) {
          out.emplace_back(pivot[j].first, (prime - q * pivot[j].second % prime) % prime);
          ++j;
        } else {
          const std::uint64_t v =
              (c[i].second + prime - q * pivot[j].second % prime) % prime;
          if (v != 0) out.emplace_back(c[i].first, v);
          ++i;
          ++j;
        }
      }
      c = std::move(out);
    }
    if (!c.empty()) {
      const std::uint64_t inv = inverse(c.back().second);
      for (auto& entry : c) entry.second = entry.second * inv % prime;
      pivots.emplace(c.back().first, std::move(c));
      ++rank;
    }
  }
  return rank;
}

}  // namespace pathdepth
