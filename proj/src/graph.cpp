#include "indsat/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <ostream>

namespace indsat {

namespace {

constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

constexpr std::uint64_t low_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : bit(n) - 1;
}

}  // namespace

Edge::Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b)
        throw std::domain_error("invalid edge: endpoints must differ, got {" +
                                std::to_string(a) + "," + std::to_string(b) + "}");
}

std::ostream& operator<<(std::ostream& os, const Edge& e) {
    return os << "{" << e.u << "," << e.v << "}";
}

Graph::Graph(int order) : order_(order) {
    if (order < 0) throw std::domain_error("graph order must be nonnegative");
    if (order > kMaxOrder)
        throw capacity_error("graph order " + std::to_string(order) +
                             " exceeds the " + std::to_string(kMaxOrder) +
                             "-vertex capacity");
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
    Graph g(order);
    for (const Edge& e : edges) g.set_edge(e, true);
    return g;
}

Graph Graph::from_edges(int order, std::initializer_list<Edge> edges) {
    return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
}

bool Graph::has_edge(int u, int v) const noexcept {
    if (u < 0 || v < 0 || u >= order_ || v >= order_) return false;
    return (rows_[u] >> v) & 1;
}

int Graph::degree(int u) const noexcept { return std::popcount(rows_[u]); }

int Graph::edge_count() const noexcept {
    int total = 0;
    for (int u = 0; u < order_; ++u) total += std::popcount(rows_[u]);
    return total / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order_; ++u) {
        std::uint64_t above = rows_[u] & ~low_mask(u + 1);
        while (above) {
            const int v = std::countr_zero(above);
            above &= above - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

std::vector<Edge> Graph::non_edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order_; ++u) {
        std::uint64_t above = ~rows_[u] & low_mask(order_) & ~low_mask(u + 1);
        while (above) {
            const int v = std::countr_zero(above);
            above &= above - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

void Graph::set_edge(Edge e, bool present) {
    if (e.u < 0 || e.v >= order_)
        throw std::domain_error("edge {" + std::to_string(e.u) + "," +
                                std::to_string(e.v) + "} out of range for order " +
                                std::to_string(order_));
    if (present) {
        rows_[e.u] |= bit(e.v);
        rows_[e.v] |= bit(e.u);
    } else {
        rows_[e.u] &= ~bit(e.v);
        rows_[e.v] &= ~bit(e.u);
    }
}

Graph Graph::with_edge(Edge e, bool present) const {
    Graph g = *this;
    g.set_edge(e, present);
    return g;
}

Graph Graph::complement() const {
    Graph g(order_);
    for (int u = 0; u < order_; ++u)
        g.rows_[u] = ~rows_[u] & low_mask(order_) & ~bit(u);
    return g;
}

Graph path_graph(int k) {
    Graph g(k);
    for (int i = 0; i + 1 < k; ++i) g.set_edge(Edge(i, i + 1), true);
    return g;
}

Graph cycle_graph(int k) {
    if (k < 3) throw std::domain_error("cycle graph needs at least 3 vertices");
    Graph g = path_graph(k);
    g.set_edge(Edge(0, k - 1), true);
    return g;
}

Graph complete_graph(int k) {
    Graph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.set_edge(Edge(u, v), true);
    return g;
}

std::optional<int> path_graph_order(const Graph& g) {
    const int n = g.order();
    if (n == 0) return std::nullopt;
    if (n == 1) return 1;
    if (g.edge_count() != n - 1) return std::nullopt;
    int deg1 = 0;
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        if (d == 1)
            ++deg1;
        else if (d != 2)
            return std::nullopt;
    }
    if (deg1 != 2) return std::nullopt;
    std::uint64_t reached = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            const int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.row(v);
        }
        frontier = next & ~reached;
        reached |= next;
    }
    return std::popcount(reached) == n ? std::optional<int>(n) : std::nullopt;
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, have = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++have == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                have = 0;
            }
        }
    }
    if (have > 0) out.push_back(static_cast<char>(63 + (acc << (6 - have))));
    return out;
}

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw parse_error("empty graph6 record", 0);
    std::size_t pos = 0;
    auto need = [&](const char* what) -> int {
        if (pos >= text.size())
            throw parse_error(std::string("truncated graph6 record while reading ") + what,
                              pos);
        const unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126) throw parse_error("invalid graph6 character", pos);
        ++pos;
        return c - 63;
    };

    long order = need("order");
    if (order == 63) {  // '~': long-form order
        if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126)
            throw capacity_error("graph6 order exceeds the 64-vertex capacity");
        const long a = need("order"), b = need("order"), c = need("order");
        order = (a << 12) | (b << 6) | c;
    }
    if (order > kMaxOrder)
        throw capacity_error("graph6 order " + std::to_string(order) +
                             " exceeds the 64-vertex capacity");

    std::vector<Edge> edges;
    int acc = 0, have = 0;
    for (int j = 1; j < order; ++j) {
        for (int i = 0; i < j; ++i) {
            if (have == 0) {
                acc = need("adjacency bits");
                have = 6;
            }
            --have;
            if ((acc >> have) & 1) edges.emplace_back(i, j);
        }
    }
    if (have > 0 && (acc & ((1 << have) - 1)) != 0)
        throw parse_error("nonzero padding bits in graph6 record", pos - 1);
    if (pos != text.size()) throw parse_error("trailing data after graph6 record", pos);
    return Graph::from_edges(static_cast<int>(order), edges);
}

namespace {

// Iterative refinement: start from degree ranks, then repeatedly split
// classes by the multiset of neighbor classes. The result depends only on
// the isomorphism type, so matching classes across two graphs is sound.
std::vector<int> refined_colors(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(n, 0);
    {
        std::vector<int> degs(n), uniq;
        for (int v = 0; v < n; ++v) degs[v] = g.degree(v);
        uniq = degs;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(
                std::lower_bound(uniq.begin(), uniq.end(), degs[v]) - uniq.begin());
    }
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            std::uint64_t nb = g.row(v);
            std::vector<int> neigh;
            while (nb) {
                neigh.push_back(color[std::countr_zero(nb)]);
                nb &= nb - 1;
            }
            std::sort(neigh.begin(), neigh.end());
            sig[v].insert(sig[v].end(), neigh.begin(), neigh.end());
        }
        std::vector<int> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(),
                  [&](int a, int b) { return sig[a] < sig[b]; });
        std::vector<int> next(n, 0);
        int c = 0;
        for (int t = 0; t < n; ++t) {
            if (t > 0 && sig[idx[t]] != sig[idx[t - 1]]) ++c;
            next[idx[t]] = c;
        }
        if (next == color) break;
        color.swap(next);
    }
    return color;
}

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() > 16 || b.order() > 16)
        throw capacity_error("isomorphism test supports graphs of order <= 16");
    const int n = a.order();
    if (n != b.order() || a.edge_count() != b.edge_count()) return false;

    const std::vector<int> ca = refined_colors(a);
    const std::vector<int> cb = refined_colors(b);
    {
        std::vector<int> sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }

    int ncolors = 0;
    for (int c : ca) ncolors = std::max(ncolors, c + 1);
    std::vector<std::vector<int>> class_b(ncolors);
    for (int w = 0; w < n; ++w) class_b[cb[w]].push_back(w);

    // Assign most-constrained vertices first.
    std::vector<int> order_a(n);
    std::iota(order_a.begin(), order_a.end(), 0);
    std::sort(order_a.begin(), order_a.end(), [&](int x, int y) {
        const std::size_t cx = class_b[ca[x]].size(), cy = class_b[ca[y]].size();
        if (cx != cy) return cx < cy;
        if (a.degree(x) != a.degree(y)) return a.degree(x) > a.degree(y);
        return x < y;
    });

    std::vector<int> image(n, -1);
    std::uint32_t used = 0;
    std::function<bool(int)> assign = [&](int t) -> bool {
        if (t == n) return true;
        const int v = order_a[t];
        for (int w : class_b[ca[v]]) {
            if (used & (1u << w)) continue;
            bool ok = true;
            for (int s = 0; s < t; ++s) {
                const int x = order_a[s];
                if (a.has_edge(v, x) != b.has_edge(w, image[x])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[v] = w;
            used |= 1u << w;
            if (assign(t + 1)) return true;
            used &= ~(1u << w);
            image[v] = -1;
        }
        return false;
    };
    return assign(0);
}

}  // namespace indsat
