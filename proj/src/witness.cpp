#include "pathdepth/witness.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pathdepth {
namespace {

MonomialIdeal variables(std::size_t nvars,
                        const std::vector<std::pair<int, Exponent>>& powers) {
  std::vector<Monomial> gens;
  for (auto [j, e] : powers) {
    gens.push_back(Monomial::variable(nvars, static_cast<std::size_t>(j), e));
  }
  return MonomialIdeal::minimalize(nvars, std::move(gens));
}

void check_power_range(const IndexSet& delta, int t) {
  const int top = static_cast<int>(delta.size()) + 1;
  if (t < 2 || t > top) {
    throw DomainError("witness power t=" + std::to_string(t) +
                      " outside [2, |delta|+1] = [2, " + std::to_string(top) + "]");
  }
}

// B(delta) as consecutive pairs (b_{2i-1}, b_{2i}).
std::vector<std::pair<int, int>> b_pairs(const IndexSet& delta) {
  const auto b = abc_partition(delta).b_part;
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i + 1 < b.size(); i += 2) out.emplace_back(b[i], b[i + 1]);
  return out;
}

// Pairs whose second modified monomial is missing from g.
std::vector<std::pair<int, int>> active_pairs(const WeightVector& w, const IndexSet& delta,
                                              const Monomial& g) {
  std::vector<std::pair<int, int>> out;
  for (auto pair : b_pairs(delta)) {
    if (!divides(modified_edge_monomial(w, pair.second + 1), g)) out.push_back(pair);
  }
  return out;
}

}  // namespace

Monomial modified_edge_monomial(const WeightVector& w, int i) {
  const int n = w.edges();
  if (i < 1 || i > n - 1) {
    throw DomainError("modified edge monomial needs 1 <= i <= n-1, got " +
                      std::to_string(i));
  }
  Monomial f = edge_monomial(w, i);
  if (w(i) == w(i + 1)) return f;
  int last = i + 1;
  while (last + 1 <= n && w(last) < w(last + 1)) ++last;
  for (int j = i + 1; j <= last; ++j) {
    f.multiply_variable(static_cast<std::size_t>(j), w(j) - 1);
  }
  return f;
}

WitnessFactor make_factor(const WeightVector& w, std::vector<int> edges) {
  if (edges.empty()) throw DomainError("a witness factor needs at least one edge");
  std::sort(edges.begin(), edges.end());
  WitnessFactor out{std::move(edges), Monomial(w.nvars()), Monomial(w.nvars()), {}};
  for (int i : out.edges) {
    out.monomial *= modified_edge_monomial(w, i);
    out.plain *= edge_monomial(w, i);
  }
  out.extra_support = divide(out.monomial, out.plain).support();
  const auto support = out.monomial.support();
  if (support.back() - support.front() + 1 != static_cast<int>(support.size())) {
    throw DomainError("witness factor support is not a run of consecutive variables");
  }
  return out;
}

WitnessSet g_monomial(const WeightVector& w, int t) {
  const IndexSet delta = compute_delta(w);
  check_power_range(delta, t);
  const auto mu = mu_labeling(abc_partition(delta));

  WitnessSet out;
  out.weights = w;
  out.t = t;
  out.g = Monomial(w.nvars());
  std::vector<int> edges;
  for (int i = 0; i < t - 1; ++i) {
    edges.push_back(mu[static_cast<std::size_t>(i)] + 1);
    out.g *= modified_edge_monomial(w, edges.back());
  }

  // Each modified monomial has an interval support, so the maximal runs of
  // supp(g) are unions of whole supports.
  for (const Block& run : block_decomposition(out.g.support())) {
    std::vector<int> members;
    for (int e : edges) {
      const int first = modified_edge_monomial(w, e).support().front();
      if (first >= run.first && first <= run.last) members.push_back(e);
    }
    out.factors.push_back(make_factor(w, std::move(members)));
    const auto& f = out.factors.back();
    if (f.min_var() != run.first || f.max_var() != run.last) {
      throw std::logic_error("factor support is not a maximal run of supp(g)");
    }
  }
  return out;
}

MonomialIdeal FactorIdeals::gamma() const {
  return sum(sum(e, o), intersection(u, v));
}

MonomialIdeal FactorIdeals::upsilon() const {
  return sum(sum(e_sq, o_sq), intersection(u_sq, v_sq));
}

FactorIdeals uveo(const WeightVector& w, const WitnessFactor& factor) {
  const int n = w.edges();
  const std::size_t nvars = w.nvars();
  const int lo = factor.min_var() - 1;
  const int hi = factor.max_var() + 1;
  if (lo < 1 || hi > n + 1) throw DomainError("witness factor touches the path ends");

  FactorIdeals out;
  out.extra_support = factor.extra_support;
  for (int j : out.extra_support) {
    if (j % 2 == 1) out.odd = std::max(out.odd, j);
    if (j % 2 == 0) out.even = std::max(out.even, j);
  }
  auto in_extra = [&](int j) {
    return std::binary_search(out.extra_support.begin(), out.extra_support.end(), j);
  };
  auto exponent = [&](int j) -> Exponent {
    if (in_extra(j)) return 1;
    return j <= n ? w(j) : w(n);
  };

  std::vector<std::pair<int, Exponent>> u, v, e, o;
  for (int j = lo; j <= hi; ++j) {
    const bool odd = j % 2 == 1;
    (odd ? u : v).emplace_back(j, exponent(j));
    if (!odd && j <= out.odd - 1) e.emplace_back(j, exponent(j));
    if (odd && j <= out.even - 1) o.emplace_back(j, exponent(j));
  }
  auto squarefree = [](std::vector<std::pair<int, Exponent>> powers) {
    for (auto& p : powers) p.second = 1;
    return powers;
  };
  out.u = variables(nvars, u);
  out.v = variables(nvars, v);
  out.e = variables(nvars, e);
  out.o = variables(nvars, o);
  out.u_sq = variables(nvars, squarefree(u));
  out.v_sq = variables(nvars, squarefree(v));
  out.e_sq = variables(nvars, squarefree(e));
  out.o_sq = variables(nvars, squarefree(o));
  return out;
}

MonomialIdeal colon_by_g(const WeightVector& w, int t) {
  const WitnessSet witness = g_monomial(w, t);
  std::vector<MonomialIdeal> parts{path_ideal(w)};
  for (const auto& factor : witness.factors) parts.push_back(uveo(w, factor).gamma());
  return sum(w.nvars(), parts);
}

WitnessSet eta_and_rho(const WeightVector& w, int t) {
  WitnessSet out = g_monomial(w, t);
  const int n = w.edges();
  const IndexSet delta = compute_delta(w);
  const auto active = active_pairs(w, delta, out.g);

  IndexSet extra;
  for (const auto& f : out.factors) {
    extra.insert(extra.end(), f.extra_support.begin(), f.extra_support.end());
  }
  std::sort(extra.begin(), extra.end());

  auto hits = [&](int j, int offset) {
    return std::any_of(active.begin(), active.end(),
                       [&](auto pair) { return j == pair.first + offset; });
  };
  out.rho = out.g;
  for (int j = 1; j <= n + 1; ++j) {
    if (std::binary_search(extra.begin(), extra.end(), j)) continue;
    out.lambda.push_back(j);
    Exponent eta = 0;
    if (j == n + 1) {
      eta = w(j - 1) - 1;
    } else if (hits(j, 1)) {
      eta = w(j - 1);
    } else if (hits(j, 2)) {
      eta = w(j - 2) - 1;
    } else {
      eta = w(j) - 1;
    }
    out.eta.emplace_back(j, eta);
    out.rho.multiply_variable(static_cast<std::size_t>(j), eta);
  }
  return out;
}

MonomialIdeal colon_by_rho(const WeightVector& w, int t) {
  const WitnessSet witness = g_monomial(w, t);
  const int n = w.edges();
  const std::size_t nvars = w.nvars();
  const IndexSet delta = compute_delta(w);
  const auto active = active_pairs(w, delta, witness.g);

  std::vector<Monomial> gens;
  for (int j = 1; j <= n; ++j) {
    gens.push_back(Monomial::variable(nvars, static_cast<std::size_t>(j)) *
                   Monomial::variable(nvars, static_cast<std::size_t>(j + 1)));
  }
  for (auto [b1, b2] : active) {
    gens.push_back(Monomial::variable(nvars, static_cast<std::size_t>(b1)));
    gens.push_back(Monomial::variable(nvars, static_cast<std::size_t>(b1 + 2)));
  }
  for (int j = 1; j <= n - 1; ++j) {
    const bool skipped = std::any_of(active.begin(), active.end(),
                                     [&](auto pair) { return j == pair.first + 1; });
    if (w(j) < w(j + 1) && !skipped) {
      gens.push_back(Monomial::variable(nvars, static_cast<std::size_t>(j)));
    }
  }
  std::vector<MonomialIdeal> parts{MonomialIdeal::minimalize(nvars, std::move(gens))};
  for (const auto& factor : witness.factors) parts.push_back(uveo(w, factor).upsilon());
  return sum(nvars, parts);
}

bool leaf_colon_identity(const WeightVector& w, int t, LeafEdge leaf) {
  const int n = w.edges();
  if (t < 2) throw DomainError("leaf colon identity needs t >= 2");
  if (n < 1) throw DomainError("leaf colon identity needs at least one edge");
  int edge = 1;
  if (leaf == LeafEdge::Last) {
    edge = n;
    if (n >= 2 && w(n) > w(n - 1)) {
      throw DomainError("last leaf edge needs w_n <= w_{n-1}");
    }
  }
  const MonomialIdeal ideal = path_ideal(w);
  const auto tu = static_cast<unsigned>(t);
  return colon(power(ideal, tu), edge_monomial(w, edge)) == power(ideal, tu - 1);
}

MonomialIdeal colon_x2_closed_form(const WeightVector& w, int t) {
  const int n = w.edges();
  if (n < 2) throw DomainError("x2 colon identity needs n >= 2");
  if (w(1) != w(2)) throw DomainError("x2 colon identity needs w_1 = w_2");
  if (t < 1) throw DomainError("x2 colon identity needs t >= 1");
  const std::size_t nvars = w.nvars();
  const auto tu = static_cast<unsigned>(t);
  const MonomialIdeal ideal = path_ideal(w);
  const MonomialIdeal outer = MonomialIdeal::minimalize(
      nvars, {Monomial::variable(nvars, 1, w(1)), Monomial::variable(nvars, 3, w(1))});
  const MonomialIdeal tail = induced_subpath_ideal(w, 4, n + 1);
  return sum(product(outer, power(ideal, tu - 1)), power(tail, tu));
}

bool colon_x2_identity(const WeightVector& w, int t) {
  const MonomialIdeal predicted = colon_x2_closed_form(w, t);
  const MonomialIdeal brute = colon(power(path_ideal(w), static_cast<unsigned>(t)),
                                    Monomial::variable(w.nvars(), 2, w(1)));
  return predicted == brute;
}

FirstPowerWitness first_power_witness(const WeightVector& w) {
  const IndexSet delta = compute_delta(w);
  if (delta.empty()) throw DomainError("first-power witness needs a nonempty delta");
  const int n = w.edges();
  const std::size_t nvars = w.nvars();
  const int m = delta.back();

  FirstPowerWitness out;
  out.m = m;
  out.f = Monomial::variable(nvars, static_cast<std::size_t>(n + 1), w(n) - 1);
  for (int k = m + 2; k <= n; ++k) {
    out.f.multiply_variable(static_cast<std::size_t>(k), w(k - 1));
  }

  const MonomialIdeal head = induced_subpath_ideal(w, 1, m);
  std::vector<Monomial> gens(head.generators().begin(), head.generators().end());
  gens.push_back(Monomial::variable(nvars, static_cast<std::size_t>(m + 1), w(m + 1)));
  for (int k = m + 2; k <= n - 1; ++k) {
    gens.push_back(Monomial::variable(nvars, static_cast<std::size_t>(k), w(k) - w(k - 1)));
  }
  gens.push_back(Monomial::variable(nvars, static_cast<std::size_t>(n), w(n) - w(n - 1)) *
                 Monomial::variable(nvars, static_cast<std::size_t>(n + 1)));
  out.predicted = MonomialIdeal::minimalize(nvars, std::move(gens));
  out.brute = colon(path_ideal(w), out.f);
  return out;
}

WitnessReport witness_report(const WeightVector& w, int t) {
  WitnessReport out;
  out.witness = eta_and_rho(w, t);
  out.predicted_colon = colon_by_rho(w, t);
  const MonomialIdeal power_t = power(path_ideal(w), static_cast<unsigned>(t));
  out.brute_colon = colon(power_t, out.witness.rho);
  out.rho_outside_power = !power_t.contains(out.witness.rho);
  return out;
}

}  // namespace pathdepth
