#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kneser {

/// Subset of [n] packed as a bitmask: bit (i-1) set <=> element i present.
/// Numeric order on masks coincides with colexicographic order on subsets,
/// which is the canonical vertex order everywhere in this library.
using SetMask = std::uint64_t;

inline constexpr int kMaxGroundSet = 62;

struct invariant_violation : std::logic_error {
    using std::logic_error::logic_error;
};

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t binomial(int n, int k);

enum class Stability { Unrestricted, AlmostStable, CyclicStable };

struct StabilityVariant {
    Stability kind = Stability::Unrestricted;
    int s = 1;

    static StabilityVariant unrestricted() { return {Stability::Unrestricted, 1}; }
    static StabilityVariant almost(int s) { return {Stability::AlmostStable, s}; }
    static StabilityVariant cyclic(int s) { return {Stability::CyclicStable, s}; }

    bool operator==(const StabilityVariant&) const = default;
};

std::string to_string(const StabilityVariant& v);
StabilityVariant parse_variant(const std::string& kind, int s);

/// Sorted k-subset of [n].
struct KSubset {
    int n = 0;
    std::vector<int> elements;  // strictly increasing, values in [1, n]

    KSubset() = default;
    KSubset(int n, std::vector<int> elems);
    static KSubset from_mask(int n, SetMask m);

    int k() const { return static_cast<int>(elements.size()); }
    SetMask mask() const;
    std::string to_string() const;

    bool operator==(const KSubset&) const = default;
};

bool is_stable(const KSubset& S, const StabilityVariant& v);
bool mask_is_stable(SetMask m, int n, const StabilityVariant& v);

/// All stable k-subsets of [n] in colexicographic order.
std::vector<KSubset> enumerate_stable(int n, int k, const StabilityVariant& v);
std::vector<SetMask> enumerate_stable_masks(int n, int k, const StabilityVariant& v);

/// Closed-form count, equal to enumerate_stable(n,k,v).size().
std::uint64_t count_stable(int n, int k, const StabilityVariant& v);

/// Element of (Z_p u {0})^n. entries[i] == 0 means position i+1 unused;
/// entries[i] == j in [1,p] means omega^j at position i+1.
struct SignVector {
    int p = 2;
    std::vector<std::uint8_t> entries;

    SignVector() = default;
    SignVector(int p, std::vector<std::uint8_t> e);

    /// p=2 shorthand: '+' -> 1, '-' -> 2, '0' -> 0.
    static SignVector from_signs(const std::string& signs);

    int n() const { return static_cast<int>(entries.size()); }
    bool is_zero() const;
    SetMask support() const;
    /// Positions carrying omega^j, as a mask.
    SetMask part(int j) const;
    /// Exponent of the first non-zero entry; 0 if the vector is zero.
    int first_nonzero_value() const;
    SignVector negated() const;  // p=2 only: swap +/-
    std::string to_string() const;

    bool operator==(const SignVector&) const = default;
};

/// Length of the longest alternating subsequence of non-zero entries
/// (consecutive chosen entries differ). Equals the number of maximal runs
/// of the non-zero value sequence.
int alt(const SignVector& X);

/// X subseteq Y in the subvector order: every non-zero entry of X agrees with Y.
bool is_subvector(const SignVector& X, const SignVector& Y);

/// Action of omega^a: each non-zero exponent j -> ((j-1+a) mod p)+1.
SignVector omega_shift(const SignVector& X, int a);

}  // namespace kneser
