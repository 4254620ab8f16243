#pragma once
// Induced-saturation verification. A graph g is h-induced-saturated when
// g contains no induced copy of h, deleting any edge of g creates one, and
// adding any edge of the complement creates one. For the family G_n the
// target is the path P_n and every edge perturbation additionally has a
// closed-form witness derived from a case analysis over the edge type;
// case_witness evaluates those formulas and validates the result.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "indsat/construction.hpp"
#include "indsat/graph.hpp"
#include "indsat/induced_path.hpp"

namespace indsat {

enum class EdgeMode { Delete, Add };

// Deletion cases: S1 cycle edge, S2 spoke, S3/S3'/S3'' w-edges by gap.
// Addition cases: T1 w-pair, T2/T2' v-pairs, T3/T3'/T3'' v-w pairs.
enum class WitnessCase { S1, S2, S3, S3p, S3pp, T1, T2, T2p, T3, T3p, T3pp };

std::string_view case_name(WitnessCase c);  // "S1", "S3'", "T3''", ...

struct EdgeCase {
    WitnessCase kind;
    int canonical_j;   // index parameter of the case; the canonical edge is
                       // v_1 v_{n-1} (S1), v_1 w_1 (S2), w_1 w_j (S3*),
                       // w_1 w_{n-1} (T1), v_1 v_j (T2*), v_1 w_j (T3*)
    DihedralMap map;   // rotation carrying the canonical edge back onto e
};

/// Sorts an edge (delete mode) or non-edge (add mode) of G_n into its case
/// and records the rotation that canonicalizes it. Defined for n >= 6.
EdgeCase classify_edge(const LabeledGn& g, Edge e, EdgeMode mode);

/// Witness made executable: builds the case's canonical vertex set, maps it
/// back onto e through the classification rotation, perturbs the graph, and
/// orders the set into a path by walking from a degree-one endpoint of the
/// induced subgraph. Throws internal_consistency_error if the set fails to
/// induce a path on exactly n vertices (a formula bug, never an input
/// property).
WitnessPath case_witness(const LabeledGn& g, Edge e, EdgeMode mode);

/// Backtracking injective embedding with induced (edge and non-edge)
/// constraints and degree pruning. Returns the image indexed by pattern
/// vertex, or nullopt. Intended for small patterns.
std::optional<std::vector<int>> find_induced_copy(const Graph& g, const Graph& h);

/// Certificate check for find_induced_copy results.
bool is_induced_copy(const Graph& g, const Graph& h, std::span<const int> image);

struct EdgeOutcome {
    Edge edge;
    std::optional<WitnessPath> witness;
};

// Field names are stable in both serializations: target_order, graph_order,
// free_ok, free_counterexample, deletions (edge, witness), additions
// (edge, witness), verdict. Edge lists are ordered ascending.
struct VerificationReport {
    int target_order = 0;
    int graph_order = 0;
    bool free_ok = false;
    std::optional<WitnessPath> counterexample;  // induced copy inside g
    std::vector<EdgeOutcome> deletion_results;
    std::vector<EdgeOutcome> addition_results;
    bool verdict = false;

    using VertexNamer = std::function<std::string(int)>;
    std::string to_text(const VertexNamer& namer = {}) const;
    std::string to_json(const VertexNamer& namer = {}) const;
};

/// Three-clause check of the definition, exhaustive over E(g) and E(g^c).
/// Witnesses come from find_induced_path when h is a path (certificates are
/// path sequences) and from find_induced_copy otherwise (certificates are
/// embedding images). Per-edge checks run under OpenMP when available;
/// `threads` <= 0 picks the runtime default. Results do not depend on the
/// thread count.
VerificationReport verify_h_is(const Graph& g, const Graph& h, int threads = 0);

/// Plain single-threaded reference for verify_h_is, kept for testing and
/// benchmarking against the parallel kernel.
VerificationReport verify_h_is_serial(const Graph& g, const Graph& h);

/// Specialization to the family: target P_n for a built G_n.
VerificationReport verify_pn_is(const LabeledGn& g, int threads = 0);
VerificationReport verify_pn_is_serial(const LabeledGn& g);

/// Existence-only verdict with early exit, cheapest clause first
/// (freeness, then additions, then deletions). The hot kernel behind
/// corpus scans.
bool is_h_induced_saturated(const Graph& g, const Graph& h);

}  // namespace indsat
