#include "indsat/construction.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace indsat {

namespace {

// Representative of x mod m in 1..m.
int norm_index(int x, int m) {
    int r = x % m;
    if (r <= 0) r += m;
    return r;
}

}  // namespace

std::string to_string(GnLabel label) {
    return (label.side == GnLabel::Side::V ? "v" : "w") + std::to_string(label.index);
}

std::optional<GnLabel> parse_gn_label(std::string_view text) {
    if (text.size() < 2) return std::nullopt;
    GnLabel::Side side;
    if (text[0] == 'v')
        side = GnLabel::Side::V;
    else if (text[0] == 'w')
        side = GnLabel::Side::W;
    else
        return std::nullopt;
    int index = 0;
    const char* first = text.data() + 1;
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, index);
    if (ec != std::errc{} || ptr != last || index < 1) return std::nullopt;
    return GnLabel{side, index};
}

int DihedralMap::apply_index(int i, int modulus) const {
    return norm_index(reflected ? rotation - i : i + rotation, modulus);
}

DihedralMap DihedralMap::inverse(int modulus) const {
    if (reflected) return *this;  // reflections are involutions
    return DihedralMap{((modulus - rotation) % modulus + modulus) % modulus, false};
}

int LabeledGn::vertex_of(GnLabel label) const {
    const int m = n_ - 1;
    if (label.index < 1 || label.index > m)
        throw std::domain_error("label index " + std::to_string(label.index) +
                                " out of range 1.." + std::to_string(m));
    return label.side == GnLabel::Side::V ? label.index - 1 : m + label.index - 1;
}

GnLabel LabeledGn::label_of(int vertex) const {
    const int m = n_ - 1;
    if (vertex < 0 || vertex >= 2 * m)
        throw std::domain_error("vertex " + std::to_string(vertex) +
                                " out of range for G_" + std::to_string(n_));
    if (vertex < m) return {GnLabel::Side::V, vertex + 1};
    return {GnLabel::Side::W, vertex - m + 1};
}

LabeledGn build_gn(int n) {
    if (n < 4 || n > 32)
        throw std::domain_error("build_gn requires 4 <= n <= 32, got " +
                                std::to_string(n));
    const int m = n - 1;
    std::vector<Edge> edges;
    for (int i = 1; i <= m; ++i) edges.emplace_back(i - 1, m + i - 1);  // v_i w_i
    for (int i = 1; i <= m; ++i) {
        const int j = i % m + 1;  // cycle edge v_i v_{i+1}, wrapping to v_1
        edges.emplace_back(i - 1, j - 1);
    }
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            const int gap = j - i;
            if (gap != 1 && gap != m - 1) edges.emplace_back(m + i - 1, m + j - 1);
        }
    return LabeledGn(n, Graph::from_edges(2 * m, edges));
}

std::vector<int> apply_automorphism(const LabeledGn& g, const DihedralMap& map) {
    const int m = g.n() - 1;
    std::vector<int> perm(2 * m);
    for (int i = 1; i <= m; ++i) {
        const int f = map.apply_index(i, m);
        perm[i - 1] = f - 1;
        perm[m + i - 1] = m + f - 1;
    }
    return perm;
}

Graph petersen_graph() {
    return Graph::from_edges(10, {{0, 1},
                                  {1, 2},
                                  {2, 3},
                                  {3, 4},
                                  {0, 4},
                                  {0, 5},
                                  {1, 6},
                                  {2, 7},
                                  {3, 8},
                                  {4, 9},
                                  {5, 7},
                                  {7, 9},
                                  {6, 9},
                                  {6, 8},
                                  {5, 8}});
}

}  // namespace indsat
