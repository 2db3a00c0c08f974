#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kneser/core.hpp"

namespace kneser {

/// Implicit KG^r instance: vertices are materialized (colex order), edges are
/// never stored; every query runs a set-packing search against bitmasks.
struct KneserInstance {
    int n = 0;
    int k = 0;
    int r = 2;
    StabilityVariant variant;
    std::vector<SetMask> vertices;  // colex ascending

    static KneserInstance make(int n, int k, int r, const StabilityVariant& v);

    std::size_t vertex_count() const { return vertices.size(); }
    KSubset vertex(std::size_t i) const { return KSubset::from_mask(n, vertices[i]); }
    /// Index of a vertex mask in colex order, or -1 if not a vertex.
    int vertex_index(SetMask m) const;
};

/// Total color assignment, colors[i] in [1, t] for vertex i.
struct Coloring {
    int t = 1;
    std::vector<int> colors;

    static Coloring constant(std::size_t n_vertices, int color, int t);
    int max_color_used() const;
};

struct WitnessEdge {
    std::vector<KSubset> vertices;  // r pairwise disjoint instance vertices
    std::optional<int> color;
};

/// Indices of the lexicographically first r-tuple of pairwise disjoint
/// members (ascending positions in the given list), or nullopt.
std::optional<std::vector<std::size_t>> find_disjoint_indices(std::span<const SetMask> sets, int r);

/// Same search, packaged over KSubsets. r < 2 is rejected.
std::optional<WitnessEdge> find_disjoint_tuple(const std::vector<KSubset>& vertices, int r);

bool is_proper(const KneserInstance& inst, const Coloring& c);

/// Monochromatic edge of smallest color, colex-first packing; nullopt iff proper.
std::optional<WitnessEdge> monochromatic_edge(const KneserInstance& inst, const Coloring& c);

}  // namespace kneser
