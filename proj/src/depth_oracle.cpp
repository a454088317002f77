#include "pathdepth/depth_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <mutex>
#include <thread>

#include "pathdepth/rank.hpp"

namespace pathdepth {
namespace {

constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();

std::uint64_t hash_exponents(const Exponent* e, std::size_t n) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= e[i];
    h *= 0x100000001b3ULL;
  }
  return h ^ (h >> 29);
}

// Open-addressing index over a flat exponent buffer.
class FlatIndex {
 public:
  explicit FlatIndex(std::size_t nvars) : nvars_(nvars), slots_(1024, kEmpty) {}

  // Returns true when `e` was new and has been appended to `flat`.
  bool insert(std::vector<Exponent>& flat, const Exponent* e) {
    const std::size_t count = flat.size() / nvars_;
    if (2 * (count + 1) > slots_.size()) rehash(flat, slots_.size() * 2);
    std::size_t mask = slots_.size() - 1;
    for (std::size_t pos = hash_exponents(e, nvars_) & mask;; pos = (pos + 1) & mask) {
      if (slots_[pos] == kEmpty) {
        slots_[pos] = static_cast<std::uint32_t>(count);
        flat.insert(flat.end(), e, e + nvars_);
        return true;
      }
      if (std::equal(e, e + nvars_, flat.data() + slots_[pos] * nvars_)) return false;
    }
  }

  bool contains(const std::vector<Exponent>& flat, const Exponent* e) const {
    std::size_t mask = slots_.size() - 1;
    for (std::size_t pos = hash_exponents(e, nvars_) & mask;; pos = (pos + 1) & mask) {
      if (slots_[pos] == kEmpty) return false;
      if (std::equal(e, e + nvars_, flat.data() + slots_[pos] * nvars_)) return true;
    }
  }

 private:
  void rehash(const std::vector<Exponent>& flat, std::size_t capacity) {
    slots_.assign(capacity, kEmpty);
    const std::size_t mask = capacity - 1;
    const std::size_t count = flat.size() / nvars_;
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t pos = hash_exponents(flat.data() + i * nvars_, nvars_) & mask;
      while (slots_[pos] != kEmpty) pos = (pos + 1) & mask;
      slots_[pos] = static_cast<std::uint32_t>(i);
    }
  }

  std::size_t nvars_;
  std::vector<std::uint32_t> slots_;
};

std::vector<Exponent> flatten(const MonomialIdeal& ideal) {
  std::vector<Exponent> out;
  out.reserve(ideal.size() * ideal.nvars());
  for (const auto& g : ideal.generators()) {
    out.insert(out.end(), g.exponents().begin(), g.exponents().end());
  }
  return out;
}

struct StrandResult {
  std::vector<std::size_t> dims;  // length nvars + 1
  std::size_t basis = 0;
  bool recomputed = false;
};

// Homology of the degree-a strand. `gens` is the flattened generator list.
StrandResult strand_homology(std::size_t nvars, const std::vector<Exponent>& gens,
                             const Exponent* a, RankBackend backend) {
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < nvars; ++j) {
    if (a[j] > 0) support.push_back(j);
  }
  const std::size_t m = support.size();
  const std::size_t masks = std::size_t{1} << m;

  // in_ideal[T]: x^{a - e_T} lies in I. A generator g | a covers exactly the
  // subsets of its slack set {k : g_k < a_k}, so mark those and close downward.
  std::vector<std::uint8_t> in_ideal(masks, 0);
  const std::size_t ngens = gens.size() / std::max<std::size_t>(nvars, 1);
  for (std::size_t gi = 0; gi < ngens; ++gi) {
    const Exponent* g = gens.data() + gi * nvars;
    bool divides_a = true;
    for (std::size_t j = 0; j < nvars && divides_a; ++j) divides_a = g[j] <= a[j];
    if (!divides_a) continue;
    std::size_t slack = 0;
    for (std::size_t k = 0; k < m; ++k) {
      if (g[support[k]] < a[support[k]]) slack |= std::size_t{1} << k;
    }
    in_ideal[slack] = 1;
  }
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t bit = std::size_t{1} << k;
    for (std::size_t mask = 0; mask < masks; ++mask) {
      if (!(mask & bit) && in_ideal[mask | bit]) in_ideal[mask] = 1;
    }
  }

  // Basis of C_i: subsets of size i outside the ideal, numbered per size.
  std::vector<std::vector<std::uint32_t>> basis(m + 1);
  std::vector<std::uint32_t> position(masks, 0);
  for (std::size_t mask = 0; mask < masks; ++mask) {
    if (in_ideal[mask]) continue;
    auto& level = basis[static_cast<std::size_t>(std::popcount(mask))];
    position[mask] = static_cast<std::uint32_t>(level.size());
    level.push_back(static_cast<std::uint32_t>(mask));
  }

  StrandResult out;
  out.dims.assign(nvars + 1, 0);
  for (const auto& level : basis) out.basis += level.size();

  auto boundary = [&](std::size_t i) {
    SparseMatrix d;
    d.rows = basis[i - 1].size();
    d.columns.reserve(basis[i].size());
    for (std::uint32_t mask : basis[i]) {
      std::vector<std::pair<std::uint32_t, std::int64_t>> column;
      int below = 0;
      for (std::size_t k = 0; k < m; ++k) {
        const std::uint32_t bit = std::uint32_t{1} << k;
        if (!(mask & bit)) continue;
        const std::uint32_t face = mask ^ bit;
        if (!in_ideal[face]) column.emplace_back(position[face], below % 2 == 0 ? 1 : -1);
        ++below;
      }
      std::sort(column.begin(), column.end());
      d.columns.push_back(std::move(column));
    }
    return d;
  };

  auto homology = [&](bool exact) {
    // ranks[i] = rank of d_i : C_i -> C_{i-1}, i = 1..m
    std::vector<std::size_t> ranks(m + 2, 0);
    for (std::size_t i = 1; i <= m; ++i) {
      if (basis[i].empty() || basis[i - 1].empty()) continue;
      const SparseMatrix d = boundary(i);
      ranks[i] = exact ? rank_exact(d) : rank_mod_p(d);
    }
    std::vector<std::size_t> dims(nvars + 1, 0);
    for (std::size_t i = 0; i <= m; ++i) {
      dims[i] = basis[i].size() - ranks[i] - ranks[i + 1];
    }
    return dims;
  };

  switch (backend) {
    case RankBackend::Exact:
      out.dims = homology(true);
      break;
    case RankBackend::ModP:
      out.dims = homology(false);
      break;
    case RankBackend::Hybrid: {
      // Ranks over Z/p never exceed ranks over Q, so vanishing mod p
      // certifies vanishing over Q.
      out.dims = homology(false);
      const bool vanishes = std::all_of(out.dims.begin(), out.dims.end(),
                                        [](std::size_t d) { return d == 0; });
      if (!vanishes) {
        out.dims = homology(true);
        out.recomputed = true;
      }
      break;
    }
  }
  return out;
}

}  // namespace

std::string to_string(RankBackend backend) {
  switch (backend) {
    case RankBackend::Exact: return "exact";
    case RankBackend::Hybrid: return "hybrid";
    case RankBackend::ModP: return "modp";
  }
  return "exact";
}

RankBackend parse_backend(const std::string& name) {
  if (name == "exact") return RankBackend::Exact;
  if (name == "hybrid") return RankBackend::Hybrid;
  if (name == "modp") return RankBackend::ModP;
  throw ParseError("unknown rank backend '" + name + "' (exact, hybrid, modp)");
}

Monomial MultidegreeSet::at(std::size_t i) const {
  const Exponent* p = data(i);
  return Monomial(std::vector<Exponent>(p, p + nvars_));
}

bool MultidegreeSet::contains(const Monomial& m) const {
  if (m.nvars() != nvars_) throw DimensionMismatch(nvars_, m.nvars());
  for (std::size_t i = 0; i < size(); ++i) {
    if (std::equal(m.exponents().begin(), m.exponents().end(), data(i))) return true;
  }
  return false;
}

MultidegreeSet lcm_closure(const MonomialIdeal& ideal, std::size_t budget) {
  const std::size_t n = ideal.nvars();
  if (ideal.is_zero() || ideal.is_unit()) {
    throw DegenerateIdeal("lcm closure needs a nonzero proper ideal");
  }
  const std::vector<Exponent> gens = flatten(ideal);
  const std::size_t ngens = ideal.size();

  std::vector<Exponent> flat;
  FlatIndex index(n);
  std::vector<Exponent> current(n, 0);
  std::vector<Exponent> joined(n);
  index.insert(flat, current.data());
  for (std::size_t done = 0; done < flat.size() / n; ++done) {
    std::copy_n(flat.data() + done * n, n, current.data());
    for (std::size_t gi = 0; gi < ngens; ++gi) {
      const Exponent* g = gens.data() + gi * n;
      for (std::size_t j = 0; j < n; ++j) joined[j] = std::max(current[j], g[j]);
      if (index.insert(flat, joined.data()) && flat.size() / n > budget) {
        throw BudgetExceeded("lcm closure exceeds " + std::to_string(budget) +
                             " multidegrees");
      }
    }
  }
  return MultidegreeSet(n, std::move(flat));
}

std::vector<std::size_t> koszul_homology_dims(const MonomialIdeal& ideal,
                                              const Monomial& a, RankBackend backend) {
  if (a.nvars() != ideal.nvars()) throw DimensionMismatch(ideal.nvars(), a.nvars());
  if (a.nvars() > 24) throw DomainError("Koszul strands limited to 24 variables");
  const std::vector<Exponent> gens = flatten(ideal);
  return strand_homology(ideal.nvars(), gens, a.exponents().data(), backend).dims;
}

DepthReport depth_oracle(const MonomialIdeal& ideal, const OracleOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (ideal.is_zero()) throw DegenerateIdeal("depth oracle: zero ideal");
  if (ideal.is_unit()) throw DegenerateIdeal("depth oracle: unit ideal");
  const std::size_t n = ideal.nvars();
  if (n > 24) throw DomainError("depth oracle limited to 24 variables");

  const MultidegreeSet degrees = lcm_closure(ideal, options.budget.max_degrees);
  const std::vector<Exponent> gens = flatten(ideal);

  struct Partial {
    std::vector<std::size_t> support;
    std::size_t basis = 0;
    std::size_t recomputed = 0;
  };
  unsigned threads = options.threads != 0 ? options.threads
                                          : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, degrees.size()));
  std::vector<Partial> partials(threads, Partial{std::vector<std::size_t>(n + 1, 0), 0, 0});
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> basis_total{0};
  std::atomic<bool> over_budget{false};
  constexpr std::size_t kChunk = 64;

  auto work = [&](Partial& local) {
    while (!over_budget.load(std::memory_order_relaxed)) {
      const std::size_t begin = next.fetch_add(kChunk);
      if (begin >= degrees.size()) return;
      const std::size_t end = std::min(begin + kChunk, degrees.size());
      for (std::size_t i = begin; i < end; ++i) {
        const StrandResult r = strand_homology(n, gens, degrees.data(i), options.backend);
        local.basis += r.basis;
        local.recomputed += r.recomputed ? 1 : 0;
        for (std::size_t k = 0; k <= n; ++k) {
          if (r.dims[k] != 0) ++local.support[k];
        }
        if (basis_total.fetch_add(r.basis) + r.basis > options.budget.max_basis) {
          over_budget = true;
          return;
        }
      }
    }
  };

  if (threads <= 1) {
    work(partials[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, std::ref(partials[t]));
    for (auto& th : pool) th.join();
  }
  if (over_budget) {
    throw BudgetExceeded("Koszul strands exceed " + std::to_string(options.budget.max_basis) +
                         " basis elements");
  }

  DepthReport report;
  report.nvars = n;
  report.num_gens = ideal.size();
  report.backend = options.backend;
  report.degrees_examined = degrees.size();
  report.betti_support.assign(n + 1, 0);
  for (const auto& p : partials) {
    report.basis_total += p.basis;
    report.exact_recomputations += p.recomputed;
    for (std::size_t k = 0; k <= n; ++k) report.betti_support[k] += p.support[k];
  }
  for (std::size_t k = 0; k <= n; ++k) {
    if (report.betti_support[k] != 0) report.projective_dimension = static_cast<int>(k);
  }
  report.depth = static_cast<int>(n) - report.projective_dimension;
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace pathdepth
