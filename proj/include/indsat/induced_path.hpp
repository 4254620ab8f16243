#pragma once
// Induced-path detection. A vertex sequence is an induced path when its
// vertices are distinct, consecutive ones are adjacent, and every other
// pair is non-adjacent.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "indsat/graph.hpp"

namespace indsat {

using WitnessPath = std::vector<int>;

/// Certificate check; out-of-range vertices and the empty sequence yield
/// false rather than an error.
bool is_induced_path(const Graph& g, std::span<const int> seq);

/// First induced path on exactly k vertices, or nullopt. Depth-first
/// extension of partial paths: a candidate must be adjacent to the last
/// path vertex and non-adjacent to all earlier ones (kept as a forbidden
/// bit mask). Start vertices and neighbor candidates are tried in
/// ascending order, so the result is deterministic. Exponential in the
/// worst case; intended for desk-scale graphs.
std::optional<WitnessPath> find_induced_path(const Graph& g, int k);

/// Existence-only variant of find_induced_path; same contract.
bool has_induced_path(const Graph& g, int k);

/// Maximum order of an induced path, with the first witness of that order
/// under the same deterministic enumeration. Requires a nonempty graph.
std::pair<int, WitnessPath> longest_induced_path(const Graph& g);

}  // namespace indsat
