#include "indsat/induced_path.hpp"

#include <bit>
#include <stdexcept>

namespace indsat {

namespace {

constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

// banned = path vertices plus all neighbors of path vertices except the
// last one; a legal extension is a neighbor of the last vertex outside it.
bool extend(const Graph& g, int* path, int len, int k, std::uint64_t banned) {
    if (len == k) return true;
    const int last = path[len - 1];
    std::uint64_t cands = g.row(last) & ~banned;
    const std::uint64_t next_banned = banned | g.row(last);
    while (cands) {
        const int x = std::countr_zero(cands);
        cands &= cands - 1;
        path[len] = x;
        if (extend(g, path, len + 1, k, next_banned | bit(x))) return true;
    }
    return false;
}

bool search(const Graph& g, int k, int* path) {
    if (k < 1 || k > g.order())
        throw std::domain_error("induced path order " + std::to_string(k) +
                                " out of range 1.." + std::to_string(g.order()));
    for (int s = 0; s < g.order(); ++s) {
        path[0] = s;
        if (extend(g, path, 1, k, bit(s))) return true;
    }
    return false;
}

void longest_rec(const Graph& g, int* path, int len, std::uint64_t banned,
                 int& best_len, int* best) {
    if (len > best_len) {
        best_len = len;
        for (int i = 0; i < len; ++i) best[i] = path[i];
    }
    if (best_len == g.order()) return;
    const int last = path[len - 1];
    std::uint64_t cands = g.row(last) & ~banned;
    const std::uint64_t next_banned = banned | g.row(last);
    while (cands) {
        const int x = std::countr_zero(cands);
        cands &= cands - 1;
        path[len] = x;
        longest_rec(g, path, len + 1, next_banned | bit(x), best_len, best);
        if (best_len == g.order()) return;
    }
}

}  // namespace

bool is_induced_path(const Graph& g, std::span<const int> seq) {
    const int k = static_cast<int>(seq.size());
    if (k == 0) return false;
    std::uint64_t seen = 0;
    for (int u : seq) {
        if (u < 0 || u >= g.order()) return false;
        if (seen & bit(u)) return false;
        seen |= bit(u);
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(seq[i], seq[j]) != (j == i + 1)) return false;
    return true;
}

std::optional<WitnessPath> find_induced_path(const Graph& g, int k) {
    int path[kMaxOrder];
    if (!search(g, k, path)) return std::nullopt;
    return WitnessPath(path, path + k);
}

bool has_induced_path(const Graph& g, int k) {
    int path[kMaxOrder];
    return search(g, k, path);
}

std::pair<int, WitnessPath> longest_induced_path(const Graph& g) {
    if (g.order() < 1)
        throw std::domain_error("longest_induced_path requires a nonempty graph");
    int path[kMaxOrder], best[kMaxOrder];
    int best_len = 0;
    for (int s = 0; s < g.order() && best_len < g.order(); ++s) {
        path[0] = s;
        longest_rec(g, path, 1, bit(s), best_len, best);
    }
    return {best_len, WitnessPath(best, best + best_len)};
}

}  // namespace indsat
