#include "kneser/hypergraph.hpp"

#include <algorithm>

namespace kneser {

KneserInstance KneserInstance::make(int n, int k, int r, const StabilityVariant& v) {
    if (r < 2) throw std::invalid_argument("uniformity r must be >= 2");
    KneserInstance inst;
    inst.n = n;
    inst.k = k;
    inst.r = r;
    inst.variant = v;
    inst.vertices = enumerate_stable_masks(n, k, v);
    return inst;
}

int KneserInstance::vertex_index(SetMask m) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), m);
    if (it == vertices.end() || *it != m) return -1;
    return static_cast<int>(it - vertices.begin());
}

Coloring Coloring::constant(std::size_t n_vertices, int color, int t) {
    if (color < 1 || color > t) throw std::invalid_argument("constant color out of range");
    return Coloring{t, std::vector<int>(n_vertices, color)};
}

int Coloring::max_color_used() const {
    int m = 0;
    for (int c : colors) m = std::max(m, c);
    return m;
}

namespace {

// DFS in ascending index order; first tuple found is lexicographically first.
bool packing_dfs(std::span<const SetMask> sets, std::size_t from, int need, SetMask used,
                 std::vector<std::size_t>& picked) {
    if (need == 0) return true;
    for (std::size_t i = from; i + static_cast<std::size_t>(need) <= sets.size(); ++i) {
        if ((sets[i] & used) != 0) continue;
        picked.push_back(i);
        if (packing_dfs(sets, i + 1, need - 1, used | sets[i], picked)) return true;
        picked.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_disjoint_indices(std::span<const SetMask> sets,
                                                              int r) {
    if (r < 2) throw std::invalid_argument("packing size r must be >= 2");
    std::vector<std::size_t> picked;
    picked.reserve(static_cast<std::size_t>(r));
    if (packing_dfs(sets, 0, r, 0, picked)) return picked;
    return std::nullopt;
}

std::optional<WitnessEdge> find_disjoint_tuple(const std::vector<KSubset>& vertices, int r) {
    std::vector<SetMask> masks;
    masks.reserve(vertices.size());
    int n = vertices.empty() ? 0 : vertices.front().n;
    for (const auto& v : vertices) {
        if (v.n != n) throw std::invalid_argument("mixed ground sets");
        masks.push_back(v.mask());
    }
    auto idx = find_disjoint_indices(masks, r);
    if (!idx) return std::nullopt;
    WitnessEdge e;
    for (auto i : *idx) e.vertices.push_back(vertices[i]);
    return e;
}

std::optional<WitnessEdge> monochromatic_edge(const KneserInstance& inst, const Coloring& c) {
    if (c.colors.size() != inst.vertex_count())
        throw std::invalid_argument("coloring must be total on instance vertices");
    for (int col : c.colors)
        if (col < 1 || col > c.t) throw std::invalid_argument("color outside [1, t]");
    for (int color = 1; color <= c.t; ++color) {
        std::vector<SetMask> cls;
        std::vector<std::size_t> orig;
        for (std::size_t i = 0; i < c.colors.size(); ++i) {
            if (c.colors[i] == color) {
                cls.push_back(inst.vertices[i]);
                orig.push_back(i);
            }
        }
        if (static_cast<int>(cls.size()) < inst.r) continue;
        if (auto idx = find_disjoint_indices(cls, inst.r)) {
            WitnessEdge e;
            e.color = color;
            for (auto i : *idx) e.vertices.push_back(inst.vertex(orig[i]));
            return e;
        }
    }
    return std::nullopt;
}

bool is_proper(const KneserInstance& inst, const Coloring& c) {
    return !monochromatic_edge(inst, c).has_value();
}

}  // namespace kneser
