#pragma once

// JSON encodings. Rationals are always "p/q" strings.

#include <json.hpp>

#include "symcone/cone.hpp"
#include "symcone/diag_cone.hpp"
#include "symcone/diagonals.hpp"
#include "symcone/partitions.hpp"
#include "symcone/taut_ring.hpp"

namespace symcone {

using Json = nlohmann::ordered_json;

Json to_json(const VectorXq& v);
VectorXq vector_from_json(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

/// { "g", "d", "codim", "coeffs": ["p/q", ...] }
Json to_json(const TautClass& c);
TautClass taut_class_from_json(const Json& j);

/// { "g", "d", "codim", "terms": [[theta_exponent, "p/q"], ...] }
MonomialSum monomial_sum_from_json(const Json& j);

/// { "g", "d", "parts": [...] }
Json to_json(const DiagonalSpec& s);
DiagonalSpec diagonal_spec_from_json(const Json& j);

/// { "r", "a": [a0, a2, ..., ar] }
Json to_json(const SymAffineForm& f);
SymAffineForm sym_affine_form_from_json(const Json& j);

/// { "dim", "generators": [[...], ...] }
Json to_json(const RationalCone& k);
RationalCone cone_from_json(const Json& j, ConeLimits limits = {});

Json to_json(const FaceDescriptor& f);
Json to_json(const Edges1Report& r);
Json to_json(const DiagConeReport& r);
Json to_json(const PolytopeReport& r);

}  // namespace symcone
