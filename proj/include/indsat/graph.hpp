#pragma once
// Undirected simple graphs on up to 64 vertices.
//
// Bit convention: one 64-bit adjacency row per vertex, bit j of row i set
// iff {i,j} is an edge. Rows stay symmetric, loop-free, and zero at
// positions >= order. Graphs are immutable values: every mutation-shaped
// operation returns a new graph, so they are safe to share across threads.

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "indsat/errors.hpp"

namespace indsat {

inline constexpr int kMaxOrder = 64;

/// Unordered pair of distinct vertices, normalized so u < v.
struct Edge {
    int u;
    int v;
    Edge(int a, int b);
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::ostream& operator<<(std::ostream& os, const Edge& e);

class Graph {
  public:
    Graph() = default;
    explicit Graph(int order);
    static Graph from_edges(int order, std::span<const Edge> edges);
    static Graph from_edges(int order, std::initializer_list<Edge> edges);

    int order() const noexcept { return order_; }
    std::uint64_t row(int u) const noexcept { return rows_[u]; }
    bool has_edge(int u, int v) const noexcept;
    int degree(int u) const noexcept;
    int edge_count() const noexcept;
    std::vector<Edge> edges() const;      // ascending (u, v)
    std::vector<Edge> non_edges() const;  // ascending (u, v)

    /// Copy of this graph with edge e set to `present`.
    Graph with_edge(Edge e, bool present) const;
    Graph complement() const;

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    void set_edge(Edge e, bool present);
    int order_ = 0;
    std::array<std::uint64_t, kMaxOrder> rows_{};
};

Graph path_graph(int k);
Graph cycle_graph(int k);
Graph complete_graph(int k);

/// Order of g when g is a path graph under any labeling (a single vertex
/// counts), else nullopt.
std::optional<int> path_graph_order(const Graph& g);

// graph6 interchange format: order prefix, then the upper triangle read
// column by column, packed 6 bits per printable character offset by 63.
std::string emit_graph6(const Graph& g);
Graph parse_graph6(std::string_view text);

/// Exact isomorphism test. Backtracking over iteratively refined vertex
/// classes; supports orders up to 16.
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace indsat
