#pragma once

// JSON wire formats for fans, boundary sums, Kapranov classes and degree
// reports. Field names are part of the command-line contract.

#include <json.hpp>

#include "m0n/fan.hpp"
#include "m0n/kapranov.hpp"
#include "m0n/permutohedral.hpp"
#include "m0n/picard.hpp"
#include "m0n/plucker.hpp"

namespace m0n {

using json = nlohmann::ordered_json;

/// {"dim": d, "rays": [[ints]], "max_cones": [[ray indices]]}
json to_json(const Fan &fan);
Fan fan_from_json(const json &j);

/// Fan JSON plus "labels": [[members]] parallel to "rays".
json to_json(const LabeledFan &fan);
LabeledFan labeled_fan_from_json(const json &j, int n);

/// {"n": n, "coeffs": [{"side": [members], "c": coeff}]}, nonzero entries
/// only, canonical sides in lexicographic order.
json to_json(const BoundarySum &d);
BoundarySum boundary_sum_from_json(const json &j);

/// {"h": h, "e": [{"J": [members], "c": coeff}]}, nonzero exceptional terms
/// only, in basis order.
json to_json(const KapranovClassM &c);

/// {"n", "J", "monomials", "h0", "relation_dim", "plucker_rank", "verified"}
json to_json(const DegreeReport &r);

json to_json(const FanReport &r);

json members_json(LabelSet s);

}  // namespace m0n
