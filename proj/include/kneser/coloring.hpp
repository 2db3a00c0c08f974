#pragma once

#include "kneser/hypergraph.hpp"

namespace kneser {

/// ceil((n - (k-1)r) / (r-1)), the chromatic number of KG^r([n],k).
/// Only defined for n >= rk; for r=2 this is n-2k+2.
int chi_formula(int n, int k, int r);

/// Block coloring attaining chi_formula: color 1 for max(S) <= rk-1, then
/// blocks of r-1 consecutive maxima. Proper on KG^r([n],k) and on every
/// vertex-restricted instance.
int erdos_color(int k, int r, const KSubset& S);
int erdos_color_mask(int k, int r, SetMask S);

/// erdos_color applied to every instance vertex; t = chi_formula(n,k,r).
Coloring erdos_coloring(const KneserInstance& inst);

/// Colex-order greedy: smallest color whose class stays free of r-packings.
Coloring greedy_coloring(const KneserInstance& inst);

}  // namespace kneser
