#pragma once

#include <json.hpp>

#include "pathdepth/depth_oracle.hpp"
#include "pathdepth/ideal.hpp"
#include "pathdepth/monomial.hpp"
#include "pathdepth/path_delta.hpp"
#include "pathdepth/witness.hpp"

namespace pathdepth {

using Json = nlohmann::ordered_json;

// Monomials serialize as exponent arrays, ideals as arrays of those.
void to_json(Json& j, const Monomial& m);
void from_json(const Json& j, Monomial& m);
void to_json(Json& j, const MonomialIdeal& ideal);
void to_json(Json& j, const Block& block);
void to_json(Json& j, const ExtendedGroup& group);
void to_json(Json& j, const DeltaProfile& profile);
void to_json(Json& j, const DepthReport& report);
void to_json(Json& j, const WitnessReport& report);

/// Reads an ideal from its generator array; `nvars` must match each entry.
[[nodiscard]] MonomialIdeal ideal_from_json(const Json& j, std::size_t nvars);

}  // namespace pathdepth
