#pragma once

#include <functional>

#include "kneser/hypergraph.hpp"

namespace kneser {

bool is_prime(int p);

/// Prime factors in nondecreasing order, with multiplicity.
std::vector<int> prime_factors(int r);

/// Number of prime divisors counted with multiplicity; mu(1) = 0.
int mu(int r);

/// S = { A[i] : i in B }, re-indexing B through the sorted elements of A.
/// Gaps compose multiplicatively: A almost s1-stable and B almost s2-stable
/// give an almost s1*s2-stable image.
KSubset index_map(const KSubset& A, const KSubset& B);

struct CompositionFactor {
    int r = 2;
    int s = 1;
};

struct CompositionPlan {
    std::vector<CompositionFactor> factors;

    int r() const;
    int s() const;
    /// Prime factors of r in nondecreasing order, each with s_i = 2.
    static CompositionPlan corollary(int r);
};

/// Colors a k-subset; must be total on the family a finder enumerates.
using SubsetColoring = std::function<int(const KSubset&)>;

/// Finds r pairwise-disjoint same-colored members of V(n,k,s) under a
/// <= t coloring, or nullopt. The default is complete direct search.
using BaseFinder = std::function<std::optional<std::vector<KSubset>>(
    int r, int s, int n, int k, int t, const SubsetColoring&)>;

BaseFinder direct_search_finder();

struct CompositionTrace {
    int depth = 0;                 // recursion levels actually taken
    std::vector<int> level_scales; // n1 per level
};

/// Witness-composition recursion: r1*...*rL pairwise disjoint same-colored
/// members of V(n,k,s1*...*sL). Each factor's packing search runs against
/// its own stability level; the head factor acts at the innermost scale.
WitnessEdge compose_witness(const CompositionPlan& plan, int n, int k, int t,
                            const SubsetColoring& coloring,
                            const BaseFinder& base_finder = direct_search_finder(),
                            CompositionTrace* trace = nullptr);

/// ceil((n-(k-1)r)/(r-1)): the chromatic number asserted for the
/// almost-2^mu(r)-stable instance.
int corollary_lower_bound(int n, int k, int r);

}  // namespace kneser
