#pragma once

#include "pmforce/generators.hpp"
#include "pmforce/graph.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace pmforce {

using Json = nlohmann::ordered_json;

/// Invariant names accepted by compute_report, in the order they are listed
/// in help output. Hex-only names throw Inapplicable on a plain graph.
const std::vector<std::string>& invariant_names();
[[nodiscard]] bool is_hex_only(std::string_view name);

/// Report document:
///   {"instance": {id, kind, vertices, edges, hash},
///    "invariants": [{name, value, witness, runtime_ms}, ...]}
/// Errors propagate: UnknownName, Inapplicable, LimitExceeded, NoPerfectMatching.
Json compute_report(const Instance& x, std::string_view id, std::span<const std::string> names,
                    const Limits& limits = {});

Json instance_header(const Instance& x, std::string_view id);

/// Re-checks every witness in `report` against `x`; returns one message per problem.
std::vector<std::string> validate_witnesses(const Instance& x, const Json& report);

} // namespace pmforce
