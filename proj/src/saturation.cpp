#include "indsat/saturation.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "threading.hpp"

namespace indsat {

namespace {

constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

int mod0(int x, int m) { return ((x % m) + m) % m; }

int path_order_of(const Graph& h) { return path_graph_order(h).value_or(-1); }

}  // namespace

std::string_view case_name(WitnessCase c) {
    switch (c) {
        case WitnessCase::S1: return "S1";
        case WitnessCase::S2: return "S2";
        case WitnessCase::S3: return "S3";
        case WitnessCase::S3p: return "S3'";
        case WitnessCase::S3pp: return "S3''";
        case WitnessCase::T1: return "T1";
        case WitnessCase::T2: return "T2";
        case WitnessCase::T2p: return "T2'";
        case WitnessCase::T3: return "T3";
        case WitnessCase::T3p: return "T3'";
        case WitnessCase::T3pp: return "T3''";
    }
    return "?";
}

EdgeCase classify_edge(const LabeledGn& g, Edge e, EdgeMode mode) {
    const int n = g.n();
    const int m = n - 1;
    if (n < 6)
        throw std::domain_error("edge case analysis is defined for n >= 6, got n = " +
                                std::to_string(n));
    const GnLabel a = g.label_of(e.u);  // e.u < e.v, so a is the v-side label
    const GnLabel b = g.label_of(e.v);  // whenever the sides differ
    const bool present = g.graph().has_edge(e.u, e.v);
    if (mode == EdgeMode::Delete && !present)
        throw std::domain_error("cannot delete " + to_string(a) + to_string(b) +
                                ": edge not present");
    if (mode == EdgeMode::Add && present)
        throw std::domain_error("cannot add " + to_string(a) + to_string(b) +
                                ": edge already present");

    const int i = a.index, j = b.index;
    using Side = GnLabel::Side;
    // Rotation by i-1 sends the canonical index 1 onto i; for the cycle
    // cases the pair is {x, x+1} and rotation by x sends {n-1, 1} onto it.
    const auto shift = [m](int r) { return DihedralMap{mod0(r, m), false}; };

    if (a.side == Side::V && b.side == Side::V) {
        if (mode == EdgeMode::Delete) {
            const int x = (j == i + 1) ? i : j;  // {1, m} wraps
            return {WitnessCase::S1, n - 1, shift(x)};
        }
        const int jp = (j - i) + 1;  // 3..n-2 for any non-edge gap
        return {jp == 3 ? WitnessCase::T2p : WitnessCase::T2, jp, shift(i - 1)};
    }
    if (a.side == Side::V && b.side == Side::W) {
        if (mode == EdgeMode::Delete) return {WitnessCase::S2, 1, shift(i - 1)};
        const int jp = ((j - i) % m + m) % m + 1;  // 2..n-1 since i != j
        WitnessCase kind = WitnessCase::T3;
        if (jp == n - 2)
            kind = WitnessCase::T3p;
        else if (jp == n - 1)
            kind = WitnessCase::T3pp;
        return {kind, jp, shift(i - 1)};
    }
    // both on the w side
    if (mode == EdgeMode::Delete) {
        const int jp = (j - i) + 1;  // 3..n-2 for any w-edge gap
        WitnessCase kind = WitnessCase::S3;
        if (jp == 3)
            kind = WitnessCase::S3p;
        else if (jp == n - 2)
            kind = WitnessCase::S3pp;
        return {kind, jp, shift(i - 1)};
    }
    const int x = (j == i + 1) ? i : j;
    return {WitnessCase::T1, n - 1, shift(x)};
}

namespace {

std::vector<GnLabel> canonical_witness_labels(WitnessCase kind, int j, int n) {
    using Side = GnLabel::Side;
    std::vector<GnLabel> out;
    const auto w = [&](int idx) { out.push_back({Side::W, idx}); };
    const auto v_range = [&](int lo, int hi) {
        for (int i = lo; i <= hi; ++i) out.push_back({Side::V, i});
    };
    switch (kind) {
        case WitnessCase::S1:
            w(1);
            v_range(1, n - 1);
            break;
        case WitnessCase::S2:
            w(1), w(n - 2);
            v_range(1, n - 2);
            break;
        case WitnessCase::S3:
            w(1), w(j - 1), w(j), w(n - 1);
            v_range(1, j - 2);
            v_range(j, n - 3);
            break;
        case WitnessCase::S3p:
            w(1), w(3);
            v_range(1, 1);
            v_range(3, n - 1);
            break;
        case WitnessCase::S3pp:
            w(1), w(n - 2);
            v_range(1, n - 2);
            break;
        case WitnessCase::T1:
            w(1), w(n - 1);
            v_range(1, n - 2);
            break;
        case WitnessCase::T2:
            w(j - 2), w(j - 1), w(n - 1);
            v_range(1, j - 2);
            v_range(j, n - 2);
            break;
        case WitnessCase::T2p:
            w(2), w(n - 2), w(n - 1);
            v_range(1, 1);
            v_range(3, n - 2);
            break;
        case WitnessCase::T3:
            w(j - 1), w(j), w(j + 1);
            v_range(1, j - 1);
            v_range(j + 1, n - 2);
            break;
        case WitnessCase::T3p:
            w(n - 3), w(n - 2), w(n - 1);
            v_range(1, n - 3);
            break;
        case WitnessCase::T3pp:
            w(n - 2), w(n - 1);
            v_range(1, n - 2);
            break;
    }
    return out;
}

// Arrange a vertex set into path order inside `host` by walking from its
// smallest degree-one vertex. Throws when the set does not induce a path.
WitnessPath order_as_path(const Graph& host, const std::vector<int>& verts,
                          const std::string& what) {
    std::uint64_t in_set = 0;
    for (int v : verts) in_set |= bit(v);
    if (std::popcount(in_set) != static_cast<int>(verts.size()))
        throw internal_consistency_error(what + ": witness set has repeated vertices");
    int start = -1;
    for (int v : verts) {
        const int d = std::popcount(host.row(v) & in_set);
        if (d == 1 && (start == -1 || v < start)) start = v;
    }
    if (start == -1)
        throw internal_consistency_error(what + ": witness set has no path endpoint");
    WitnessPath path;
    std::uint64_t visited = 0;
    int cur = start;
    while (true) {
        path.push_back(cur);
        visited |= bit(cur);
        const std::uint64_t next = host.row(cur) & in_set & ~visited;
        if (next == 0) break;
        if ((next & (next - 1)) != 0)
            throw internal_consistency_error(what + ": witness set branches");
        cur = std::countr_zero(next);
    }
    if (path.size() != verts.size())
        throw internal_consistency_error(what + ": witness set is disconnected");
    return path;
}

}  // namespace

WitnessPath case_witness(const LabeledGn& g, Edge e, EdgeMode mode) {
    const EdgeCase ec = classify_edge(g, e, mode);
    const int n = g.n();
    const int m = n - 1;
    const std::string what =
        std::string("case ") + std::string(case_name(ec.kind)) + " witness for " +
        to_string(g.label_of(e.u)) + to_string(g.label_of(e.v));

    std::vector<int> verts;
    for (const GnLabel& l : canonical_witness_labels(ec.kind, ec.canonical_j, n))
        verts.push_back(g.vertex_of({l.side, ec.map.apply_index(l.index, m)}));

    const Graph perturbed = g.graph().with_edge(e, mode == EdgeMode::Add);
    WitnessPath path = order_as_path(perturbed, verts, what);
    if (static_cast<int>(path.size()) != n || !is_induced_path(perturbed, path))
        throw internal_consistency_error(what + ": set does not induce a path on " +
                                         std::to_string(n) + " vertices");
    return path;
}

std::optional<std::vector<int>> find_induced_copy(const Graph& g, const Graph& h) {
    const int hn = h.order();
    const int gn = g.order();
    if (hn == 0) return std::vector<int>{};
    if (hn > gn) return std::nullopt;

    // Assign high-degree pattern vertices first.
    std::vector<int> order(hn);
    for (int i = 0; i < hn; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (h.degree(x) != h.degree(y)) return h.degree(x) > h.degree(y);
        return x < y;
    });

    std::vector<int> image(hn, -1);
    std::uint64_t used = 0;
    std::function<bool(int)> assign = [&](int t) -> bool {
        if (t == hn) return true;
        const int u = order[t];
        for (int w = 0; w < gn; ++w) {
            if (used & bit(w)) continue;
            if (g.degree(w) < h.degree(u)) continue;
            bool ok = true;
            for (int s = 0; s < t && ok; ++s) {
                const int u2 = order[s];
                ok = h.has_edge(u, u2) == g.has_edge(w, image[u2]);
            }
            if (!ok) continue;
            image[u] = w;
            used |= bit(w);
            if (assign(t + 1)) return true;
            used &= ~bit(w);
            image[u] = -1;
        }
        return false;
    };
    if (!assign(0)) return std::nullopt;
    return image;
}

bool is_induced_copy(const Graph& g, const Graph& h, std::span<const int> image) {
    if (static_cast<int>(image.size()) != h.order()) return false;
    std::uint64_t seen = 0;
    for (int w : image) {
        if (w < 0 || w >= g.order()) return false;
        if (seen & bit(w)) return false;
        seen |= bit(w);
    }
    for (int u = 0; u < h.order(); ++u)
        for (int v = u + 1; v < h.order(); ++v)
            if (h.has_edge(u, v) != g.has_edge(image[u], image[v])) return false;
    return true;
}

namespace {

// One search, dispatched on whether the target is a path.
std::optional<WitnessPath> find_copy_of(const Graph& host, const Graph& h, int pk) {
    if (pk >= 0) {
        if (pk > host.order()) return std::nullopt;
        return find_induced_path(host, pk);
    }
    return find_induced_copy(host, h);
}

VerificationReport verify_impl(const Graph& g, const Graph& h, int threads,
                               bool parallel) {
    if (h.order() == 0)
        throw std::domain_error("target graph must have at least one vertex");
    const int pk = path_order_of(h);

    VerificationReport r;
    r.target_order = h.order();
    r.graph_order = g.order();
    r.counterexample = find_copy_of(g, h, pk);
    r.free_ok = !r.counterexample.has_value();

    const std::vector<Edge> dels = g.edges();
    const std::vector<Edge> adds = g.non_edges();
    for (const Edge& e : dels) r.deletion_results.push_back({e, std::nullopt});
    for (const Edge& e : adds) r.addition_results.push_back({e, std::nullopt});

    if (parallel) {
        const int nthreads = detail::resolve_threads(threads);
        const auto ndel = static_cast<long long>(dels.size());
        const auto nadd = static_cast<long long>(adds.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
#endif
        for (long long i = 0; i < ndel; ++i)
            r.deletion_results[i].witness = find_copy_of(g.with_edge(dels[i], false), h, pk);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
#endif
        for (long long i = 0; i < nadd; ++i)
            r.addition_results[i].witness = find_copy_of(g.with_edge(adds[i], true), h, pk);
        (void)nthreads;
    } else {
        for (auto& out : r.deletion_results)
            out.witness = find_copy_of(g.with_edge(out.edge, false), h, pk);
        for (auto& out : r.addition_results)
            out.witness = find_copy_of(g.with_edge(out.edge, true), h, pk);
    }

    bool all = r.free_ok;
    for (const auto& out : r.deletion_results) all = all && out.witness.has_value();
    for (const auto& out : r.addition_results) all = all && out.witness.has_value();
    r.verdict = all;
    return r;
}

}  // namespace

VerificationReport verify_h_is(const Graph& g, const Graph& h, int threads) {
    return verify_impl(g, h, threads, true);
}

VerificationReport verify_h_is_serial(const Graph& g, const Graph& h) {
    return verify_impl(g, h, 1, false);
}

VerificationReport verify_pn_is(const LabeledGn& g, int threads) {
    return verify_h_is(g.graph(), path_graph(g.n()), threads);
}

VerificationReport verify_pn_is_serial(const LabeledGn& g) {
    return verify_h_is_serial(g.graph(), path_graph(g.n()));
}

bool is_h_induced_saturated(const Graph& g, const Graph& h) {
    if (h.order() == 0)
        throw std::domain_error("target graph must have at least one vertex");
    const int pk = path_order_of(h);
    const auto contains = [&](const Graph& host) -> bool {
        if (pk >= 0) return pk <= host.order() && has_induced_path(host, pk);
        return find_induced_copy(host, h).has_value();
    };
    if (contains(g)) return false;
    const int n = g.order();
    for (int u = 0; u < n; ++u) {
        std::uint64_t miss = ~g.row(u) & ((n >= 64 ? ~std::uint64_t{0} : bit(n) - 1));
        miss &= ~(bit(u) | (bit(u) - 1));  // v > u only
        while (miss) {
            const int v = std::countr_zero(miss);
            miss &= miss - 1;
            if (!contains(g.with_edge(Edge(u, v), true))) return false;
        }
    }
    for (int u = 0; u < n; ++u) {
        std::uint64_t nb = g.row(u) & ~(bit(u) | (bit(u) - 1));
        while (nb) {
            const int v = std::countr_zero(nb);
            nb &= nb - 1;
            if (!contains(g.with_edge(Edge(u, v), false))) return false;
        }
    }
    return true;
}

namespace {

std::string name_vertex(const VerificationReport::VertexNamer& namer, int v) {
    return namer ? namer(v) : std::to_string(v);
}

std::string join_path(const VerificationReport::VertexNamer& namer,
                      const WitnessPath& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ' ';
        out += name_vertex(namer, p[i]);
    }
    return out;
}

}  // namespace

std::string VerificationReport::to_text(const VertexNamer& namer) const {
    std::ostringstream os;
    long long del_ok = 0, add_ok = 0;
    for (const auto& out : deletion_results) del_ok += out.witness.has_value();
    for (const auto& out : addition_results) add_ok += out.witness.has_value();
    os << "target_order: " << target_order << "\n";
    os << "graph_order: " << graph_order << "\n";
    os << "free_ok: " << (free_ok ? "true" : "false") << "\n";
    if (counterexample)
        os << "free_counterexample: " << join_path(namer, *counterexample) << "\n";
    os << "deletions_ok: " << del_ok << "/" << deletion_results.size() << "\n";
    os << "additions_ok: " << add_ok << "/" << addition_results.size() << "\n";
    os << "verdict: " << (verdict ? "true" : "false") << "\n";
    for (const auto& out : deletion_results) {
        os << "delete " << name_vertex(namer, out.edge.u) << ","
           << name_vertex(namer, out.edge.v) << ": ";
        os << (out.witness ? join_path(namer, *out.witness) : "NO WITNESS") << "\n";
    }
    for (const auto& out : addition_results) {
        os << "add " << name_vertex(namer, out.edge.u) << ","
           << name_vertex(namer, out.edge.v) << ": ";
        os << (out.witness ? join_path(namer, *out.witness) : "NO WITNESS") << "\n";
    }
    return os.str();
}

std::string VerificationReport::to_json(const VertexNamer& namer) const {
    nlohmann::json j;
    j["target_order"] = target_order;
    j["graph_order"] = graph_order;
    j["free_ok"] = free_ok;
    j["free_counterexample"] =
        counterexample ? nlohmann::json(*counterexample) : nlohmann::json(nullptr);
    const auto outcomes = [&](const std::vector<EdgeOutcome>& outs) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& out : outs) {
            nlohmann::json o;
            o["edge"] = {out.edge.u, out.edge.v};
            o["witness"] = out.witness ? nlohmann::json(*out.witness)
                                       : nlohmann::json(nullptr);
            arr.push_back(std::move(o));
        }
        return arr;
    };
    j["deletions"] = outcomes(deletion_results);
    j["additions"] = outcomes(addition_results);
    j["verdict"] = verdict;
    if (namer) {
        nlohmann::json labels = nlohmann::json::array();
        for (int v = 0; v < graph_order; ++v) labels.push_back(namer(v));
        j["vertex_labels"] = std::move(labels);
    }
    return j.dump(2);
}

}  // namespace indsat
