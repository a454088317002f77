#include "pathdepth/json.hpp"

namespace pathdepth {

void to_json(Json& j, const Monomial& m) {
  j = Json::array();
  for (Exponent e : m.exponents()) j.push_back(e);
}

void from_json(const Json& j, Monomial& m) {
  if (!j.is_array()) throw ParseError("monomial JSON must be an array of exponents");
  std::vector<Exponent> exps;
  for (const auto& e : j) {
    if (!e.is_number_unsigned()) throw ParseError("exponents must be nonnegative integers");
    exps.push_back(e.get<Exponent>());
  }
  m = Monomial(std::move(exps));
}

void to_json(Json& j, const MonomialIdeal& ideal) {
  j = Json::array();
  for (const auto& g : ideal.generators()) j.push_back(g);
}

MonomialIdeal ideal_from_json(const Json& j, std::size_t nvars) {
  if (!j.is_array()) throw ParseError("ideal JSON must be an array of monomials");
  std::vector<Monomial> gens;
  for (const auto& item : j) gens.push_back(item.get<Monomial>());
  return MonomialIdeal::minimalize(nvars, std::move(gens));
}

void to_json(Json& j, const Block& block) {
  j = Json{{"first", block.first}, {"last", block.last}, {"type", block.type()}};
}

void to_json(Json& j, const ExtendedGroup& group) {
  j = Json{{"blocks", group.blocks},
           {"type1", group.ones},
           {"type2", group.twos},
           {"residue", group.residue}};
}

void to_json(Json& j, const DeltaProfile& p) {
  j = Json{{"delta", p.delta},
           {"blocks", p.blocks},
           {"extended", p.groups},
           {"a", p.counts.a},
           {"b", p.counts.b},
           {"c", p.counts.c},
           {"k", p.counts.k},
           {"A", p.partition.a_part},
           {"B", p.partition.b_part},
           {"C", p.partition.c_part},
           {"mu", p.mu}};
}

void to_json(Json& j, const DepthReport& r) {
  Json support = Json::array();
  for (std::size_t i = 0; i < r.betti_support.size(); ++i) {
    if (r.betti_support[i] != 0) support.push_back(Json::array({i, r.betti_support[i]}));
  }
  j = Json{{"n_vars", r.nvars},
           {"num_gens", r.num_gens},
           {"depth", r.depth},
           {"pd", r.projective_dimension},
           {"betti_support", support},
           {"degrees_examined", r.degrees_examined},
           {"elapsed_ms", r.elapsed_ms},
           {"backend", to_string(r.backend)}};
}

void to_json(Json& j, const WitnessReport& r) {
  const auto& w = r.witness;
  Json factors = Json::array();
  for (const auto& f : w.factors) factors.push_back(f.monomial.to_string());
  Json eta = Json::object();
  for (auto [index, value] : w.eta) eta[std::to_string(index)] = value;
  j = Json{{"weights", w.weights.to_string()},
           {"t", w.t},
           {"g", w.g.to_string()},
           {"factors", factors},
           {"lambda", w.lambda},
           {"eta", eta},
           {"rho", w.rho.to_string()},
           {"predicted_colon", r.predicted_colon.to_string()},
           {"brute_colon", r.brute_colon.to_string()},
           {"rho_outside_power", r.rho_outside_power},
           {"match", r.match()}};
}

}  // namespace pathdepth
