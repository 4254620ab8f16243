#pragma once
// The graph family G_n on 2(n-1) vertices v_1..v_{n-1}, w_1..w_{n-1}:
//
//   v_i -- w_j   iff  i == j
//   v_i -- v_j   iff  i - j == +-1  (mod n-1)
//   w_i -- w_j   iff  i != j and i - j != +-1  (mod n-1)
//
// so the v's form a cycle with a pendant matching into the w's, and the w's
// carry the complement of that cycle. Index arithmetic uses representatives
// 1..n-1 throughout. The vertex ordering is fixed (vertex i-1 is v_i, vertex
// (n-1)+i-1 is w_i), which keeps every serialization deterministic.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "indsat/graph.hpp"

namespace indsat {

struct GnLabel {
    enum class Side { V, W };
    Side side;
    int index;  // 1..n-1
    friend bool operator==(const GnLabel&, const GnLabel&) = default;
};

std::string to_string(GnLabel label);
std::optional<GnLabel> parse_gn_label(std::string_view text);  // "v3", "w12"

// Index map i -> i+rotation (or i -> rotation-i when reflected), mod n-1
// with representatives 1..n-1, applied to v- and w-indices simultaneously.
// Every such map is an automorphism of G_n.
struct DihedralMap {
    int rotation = 0;
    bool reflected = false;
    int apply_index(int i, int modulus) const;
    DihedralMap inverse(int modulus) const;
};

class LabeledGn {
  public:
    int n() const noexcept { return n_; }
    const Graph& graph() const noexcept { return graph_; }
    int vertex_of(GnLabel label) const;
    GnLabel label_of(int vertex) const;

  private:
    friend LabeledGn build_gn(int n);
    LabeledGn(int n, Graph g) : n_(n), graph_(std::move(g)) {}
    int n_;
    Graph graph_;
};

/// Builds G_n for 4 <= n <= 32. Values below 6 are constructible but are
/// not induced-saturated; the verifier reports that, not the builder.
LabeledGn build_gn(int n);

/// Vertex permutation realizing the map; perm[x] is the image of vertex x.
std::vector<int> apply_automorphism(const LabeledGn& g, const DihedralMap& map);

/// The Petersen graph in its standard presentation: outer 5-cycle 0..4,
/// spokes to 5..9, inner pentagram on 5..9. Equals G_6 up to isomorphism.
Graph petersen_graph();

}  // namespace indsat
