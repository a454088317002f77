#pragma once

#include <utility>
#include <vector>

#include "pathdepth/ideal.hpp"
#include "pathdepth/monomial.hpp"
#include "pathdepth/path_delta.hpp"

namespace pathdepth {

/// f_i, multiplied by x_j^{w_j - 1} along the strictly increasing weight run
/// that starts at edge i (no change when w_i = w_{i+1}). Defined for
/// 1 <= i <= n-1.
[[nodiscard]] Monomial modified_edge_monomial(const WeightVector& w, int i);

/// A product of modified edge monomials whose support is one run of
/// consecutive variables.
struct WitnessFactor {
  std::vector<int> edges;  // edge indices i of the modified monomials used
  Monomial monomial;       // product of the modified monomials
  Monomial plain;          // product of the plain edge monomials f_i
  IndexSet extra_support;  // supp(monomial / plain)

  [[nodiscard]] int min_var() const { return monomial.support().front(); }
  [[nodiscard]] int max_var() const { return monomial.support().back(); }
};

[[nodiscard]] WitnessFactor make_factor(const WeightVector& w,
                                        std::vector<int> edges);

/// The witness g_t and, once completed by eta_and_rho, the monomial rho_t.
struct WitnessSet {
  WeightVector weights;
  int t = 0;
  Monomial g;
  std::vector<WitnessFactor> factors;  // ordered by position along the path
  IndexSet lambda;                                  // [n+1] \ esupp(g)
  std::vector<std::pair<int, Exponent>> eta;        // j -> eta_j, j in lambda
  Monomial rho;
};

/// g_t = prod_{i<t} modified_edge_monomial(mu_i + 1), split into factors on
/// the maximal runs of its support. Requires 2 <= t <= |delta| + 1.
[[nodiscard]] WitnessSet g_monomial(const WeightVector& w, int t);

/// The ideals attached to one factor D (variables j in [min D - 1, max D + 1]).
struct FactorIdeals {
  IndexSet extra_support;
  int odd = 1;   // largest odd index of extra_support, 1 if none
  int even = 0;  // largest even index of extra_support, 0 if none
  MonomialIdeal u, v, e, o;
  MonomialIdeal u_sq, v_sq, e_sq, o_sq;  // same variables, exponent 1

  /// E + O + (U cap V)
  [[nodiscard]] MonomialIdeal gamma() const;
  /// E' + O' + (U' cap V')
  [[nodiscard]] MonomialIdeal upsilon() const;
};

[[nodiscard]] FactorIdeals uveo(const WeightVector& w, const WitnessFactor& factor);

/// Closed form of (I^t : g_t): I plus the gamma ideal of every factor.
[[nodiscard]] MonomialIdeal colon_by_g(const WeightVector& w, int t);

/// Completes g_monomial with lambda, eta and rho_t = g_t prod x_j^{eta_j}.
[[nodiscard]] WitnessSet eta_and_rho(const WeightVector& w, int t);

/// Closed form of (I^t : rho_t):
///   (x_j x_{j+1} : j in [n]) + Phi_t + Psi + sum of the upsilon ideals.
/// Phi_t and the exclusions in Psi only use the B-pairs (b_{2i-1}, b_{2i})
/// whose modified monomial at b_{2i}+1 does not divide g_t. Psi ranges over
/// j in [n-1].
[[nodiscard]] MonomialIdeal colon_by_rho(const WeightVector& w, int t);

enum class LeafEdge { First, Last };

/// Checks (I^t : f_leaf) == I^{t-1}, t >= 2. The last edge qualifies only
/// when w_{n-1} = w_n (or n = 1).
[[nodiscard]] bool leaf_colon_identity(const WeightVector& w, int t, LeafEdge leaf);

/// (x_1^{w_1}, x_3^{w_1}) I^{t-1} + J^t with J the edge ideal of the subpath
/// on x_4..x_{n+1}. Requires n >= 2, w_1 = w_2, t >= 1.
[[nodiscard]] MonomialIdeal colon_x2_closed_form(const WeightVector& w, int t);
/// Checks (I^t : x_2^{w_1}) against colon_x2_closed_form.
[[nodiscard]] bool colon_x2_identity(const WeightVector& w, int t);

/// Witness for the first power: f with depth(S/(I:f)) = k(delta) + 1.
struct FirstPowerWitness {
  int m = 0;  // max(delta)
  Monomial f;
  MonomialIdeal predicted;
  MonomialIdeal brute;
  [[nodiscard]] bool match() const { return predicted == brute; }
};

/// Requires delta nonempty.
[[nodiscard]] FirstPowerWitness first_power_witness(const WeightVector& w);

/// Everything the witness subcommand prints.
struct WitnessReport {
  WitnessSet witness;
  MonomialIdeal predicted_colon;
  MonomialIdeal brute_colon;
  bool rho_outside_power = false;  // rho_t not in I^t
  [[nodiscard]] bool match() const { return predicted_colon == brute_colon; }
};

[[nodiscard]] WitnessReport witness_report(const WeightVector& w, int t);

}  // namespace pathdepth
