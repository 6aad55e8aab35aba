#pragma once

#include <string>

#include "hgp/canonical.hpp"
#include "hgp/code.hpp"
#include "hgp/partition.hpp"
#include "hgp/pieceable.hpp"

// vendored single-header nlohmann/json
#include "json.hpp"

namespace hgp {

inline constexpr int kSchemaVersion = 1;

/// All emitters produce deterministic, insertion-ordered JSON with 1-based
/// qubit indices.
using Json = nlohmann::ordered_json;

Json params_json(const CodeParams& params);
Json basis_json(const HgpCode& code, const CanonicalBasis& basis);
Json partition_json(const HgpCode& code, const QubitPartition& p);
Json partition_distance_json(const PartitionDistance& d);
Json logical_action_json(const LogicalAction& action);
Json circuit_json(const Circuit& c);
Json schedule_json(const Schedule& s, const TimeCost& cost);
Json gadget_json(const GadgetSpec& g);

/// Per-step grid diagrams: one character cell per qubit, step gates
/// labelled a, b, c, ... on both endpoints.
std::string render_schedule_text(const HgpCode& code, const Schedule& s);

}  // namespace hgp
