#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "kneser/hypergraph.hpp"

namespace kneser {

enum class Parallelism { serial, parallel };

struct TuckerParams {
    int p = 2;      // prime group order
    int n = 1;      // ground set / vector length
    int k = 1;      // subset size
    int colors = 1; // colors available to the coloring under test

    TuckerParams(int p, int n, int k, int colors);
    int alpha() const { return p * (k - 1); }
    int m() const { return alpha() + colors; }
};

/// Codomain element of the Z_p lambda map: group part in [p], level in [m].
struct LambdaLabel {
    int part = 0;
    int level = 0;
    bool operator==(const LambdaLabel&) const = default;
};

LambdaLabel shift_label(const LambdaLabel& l, int a, int p);

/// X^(1) subseteq ... subseteq X^(p) in the subvector order, none zero.
struct Chain {
    std::vector<SignVector> links;
};

/// The Z_p-equivariant lambda map. inst must be the almost-2-stable
/// instance V(n,k,2); c a total coloring with values in [params.colors].
/// Low levels encode alt and the first non-zero part; high levels encode
/// the color of the colex-smallest stable subset lying inside one part.
LambdaLabel lambda_zp(const SignVector& X, const TuckerParams& params,
                      const KneserInstance& inst, const Coloring& c);

/// alpha + (m - alpha)(p - 1) >= n: the Z_p-Tucker conclusion for params.
bool zp_tucker_conclusion(const TuckerParams& params);

struct ChainSampler {
    bool exhaustive = true;      // full scan of vectors / pairs / chains
    std::uint64_t samples = 10000;  // used when exhaustive is false
    std::uint64_t seed = 0;
};

struct ZpSuiteReport {
    std::uint64_t vectors_checked = 0;
    std::uint64_t pairs_checked = 0;
    std::uint64_t chains_checked = 0;
    bool equivariance_ok = true;
    bool low_level_ok = true;
    bool high_level_ok = true;
    std::optional<Chain> violation;      // p-chain with equal high levels, distinct parts
    std::optional<WitnessEdge> witness;  // disjoint monochromatic vertices it yields
    bool ok() const { return equivariance_ok && low_level_ok && high_level_ok; }
};

/// Verifies equivariance, the low-level 2-chain property and the high-level
/// p-chain property of lambda_zp against the given coloring. For a proper
/// coloring all three must hold; an improper one may surface a violating
/// chain, from which p disjoint same-colored vertices are extracted.
ZpSuiteReport check_zp_properties(const TuckerParams& params, const KneserInstance& inst,
                                  const Coloring& c, const ChainSampler& sampler,
                                  Parallelism par = Parallelism::parallel);

/// Recovers the p disjoint monochromatic vertices behind a violating chain.
WitnessEdge chain_witness(const Chain& chain, const TuckerParams& params,
                          const KneserInstance& inst, const Coloring& c);

/// The signed (p=2) map on {+,-,0}^n \ {0}. inst must be the cyclic
/// 2-stable instance; colors restricted to [n-2k+1]. Antipodal by
/// construction: lambda_signed(-X) = -lambda_signed(X).
int lambda_signed(const SignVector& X, int n, int k, const KneserInstance& inst,
                  const Coloring& c);

using SignedLambdaFn = std::function<int(const SignVector&)>;

/// Exhaustive search for A subseteq B with lambda(A) = -lambda(B).
/// Deterministic: B ascending in base-3 code order, A in a fixed submask
/// order of B's support. n beyond the exhaustive budget is rejected.
std::optional<std::pair<SignVector, SignVector>> find_complementary_pair(
    const SignedLambdaFn& lambda, int n, Parallelism par = Parallelism::parallel,
    int max_n = 13);

/// Two disjoint same-colored cyclic 2-stable k-subsets under a coloring
/// with n-2k+1 colors. Tries the complementary-pair route first, then the
/// direct packing search (always succeeds at desk scale).
WitnessEdge schrijver_witness(int n, int k, const Coloring& c,
                              Parallelism par = Parallelism::parallel);

}  // namespace kneser
