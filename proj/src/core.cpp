#include "kneser/core.hpp"

#include <algorithm>
#include <bit>

namespace kneser {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

std::string to_string(const StabilityVariant& v) {
    switch (v.kind) {
        case Stability::Unrestricted: return "unrestricted";
        case Stability::AlmostStable: return "almost-" + std::to_string(v.s) + "-stable";
        case Stability::CyclicStable: return "cyclic-" + std::to_string(v.s) + "-stable";
    }
    return "?";
}

StabilityVariant parse_variant(const std::string& kind, int s) {
    if (s < 1) throw std::invalid_argument("stability gap s must be >= 1");
    if (kind == "unrestricted" || kind == "none") return StabilityVariant::unrestricted();
    if (kind == "almost") return StabilityVariant::almost(s);
    if (kind == "cyclic") return StabilityVariant::cyclic(s);
    throw std::invalid_argument("unknown stability variant: " + kind);
}

KSubset::KSubset(int n_, std::vector<int> elems) : n(n_), elements(std::move(elems)) {
    if (n < 0 || n > kMaxGroundSet) throw std::invalid_argument("ground set size out of range");
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i] < 1 || elements[i] > n) throw std::invalid_argument("element out of [1,n]");
        if (i > 0 && elements[i] <= elements[i - 1])
            throw std::invalid_argument("elements must be strictly increasing");
    }
}

KSubset KSubset::from_mask(int n, SetMask m) {
    std::vector<int> elems;
    for (SetMask rest = m; rest != 0; rest &= rest - 1) {
        elems.push_back(std::countr_zero(rest) + 1);
    }
    return KSubset(n, std::move(elems));
}

SetMask KSubset::mask() const {
    SetMask m = 0;
    for (int e : elements) m |= SetMask{1} << (e - 1);
    return m;
}

std::string KSubset::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(elements[i]);
    }
    s += '}';
    return s;
}

bool is_stable(const KSubset& S, const StabilityVariant& v) {
    const auto& e = S.elements;
    switch (v.kind) {
        case Stability::Unrestricted:
            return true;
        case Stability::AlmostStable:
            // pairwise |i-j| >= s <=> all consecutive gaps >= s
            for (std::size_t i = 1; i < e.size(); ++i)
                if (e[i] - e[i - 1] < v.s) return false;
            return true;
        case Stability::CyclicStable:
            for (std::size_t i = 1; i < e.size(); ++i)
                if (e[i] - e[i - 1] < v.s) return false;
            // wrap-around gap covers the n-s upper limit for every pair
            if (e.size() >= 2 && S.n - (e.back() - e.front()) < v.s) return false;
            return true;
    }
    return false;
}

bool mask_is_stable(SetMask m, int n, const StabilityVariant& v) {
    if (v.kind == Stability::Unrestricted || m == 0) return true;
    int first = std::countr_zero(m) + 1;
    int prev = first;
    int last = first;
    for (SetMask rest = m & (m - 1); rest != 0; rest &= rest - 1) {
        int e = std::countr_zero(rest) + 1;
        if (e - prev < v.s) return false;
        prev = e;
        last = e;
    }
    if (v.kind == Stability::CyclicStable && last != first && n - (last - first) < v.s)
        return false;
    return true;
}

std::vector<SetMask> enumerate_stable_masks(int n, int k, const StabilityVariant& v) {
    if (n < 1 || n > kMaxGroundSet) throw std::invalid_argument("n out of range");
    if (k < 1 || k > n) throw std::invalid_argument("k out of [1,n]");
    std::vector<SetMask> out;
    // Gosper's hack walks k-subsets in increasing mask order = colex order.
    SetMask m = (SetMask{1} << k) - 1;
    const SetMask limit = (n == 64) ? ~SetMask{0} : (SetMask{1} << n) - 1;
    while (m <= limit) {
        if (mask_is_stable(m, n, v)) out.push_back(m);
        SetMask c = m & -m;
        SetMask r = m + c;
        if (r > limit || r == 0) break;
        m = (((r ^ m) >> 2) / c) | r;
    }
    return out;
}

std::vector<KSubset> enumerate_stable(int n, int k, const StabilityVariant& v) {
    std::vector<KSubset> out;
    for (SetMask m : enumerate_stable_masks(n, k, v)) out.push_back(KSubset::from_mask(n, m));
    return out;
}

std::uint64_t count_stable(int n, int k, const StabilityVariant& v) {
    if (n < 1 || n > kMaxGroundSet) throw std::invalid_argument("n out of range");
    if (k < 1 || k > n) throw std::invalid_argument("k out of [1,n]");
    if (k == 1) return static_cast<std::uint64_t>(n);  // no pair constraint
    switch (v.kind) {
        case Stability::Unrestricted:
            return binomial(n, k);
        case Stability::AlmostStable:
            return binomial(n - (k - 1) * (v.s - 1), k);
        case Stability::CyclicStable: {
            const int m = n - k * (v.s - 1);
            if (m <= 0) return 0;
            // (n/m) * C(m,k) = n * C(m-1,k-1) / k, always integral
            const std::uint64_t num = static_cast<std::uint64_t>(n) * binomial(m - 1, k - 1);
            return num / static_cast<std::uint64_t>(k);
        }
    }
    return 0;
}

SignVector::SignVector(int p_, std::vector<std::uint8_t> e) : p(p_), entries(std::move(e)) {
    if (p < 2) throw std::invalid_argument("group order p must be >= 2");
    if (entries.size() > kMaxGroundSet) throw std::invalid_argument("vector too long");
    for (auto x : entries)
        if (x > p) throw std::invalid_argument("entry exceeds group order");
}

SignVector SignVector::from_signs(const std::string& signs) {
    std::vector<std::uint8_t> e;
    e.reserve(signs.size());
    for (char c : signs) {
        if (c == '0')
            e.push_back(0);
        else if (c == '+')
            e.push_back(1);
        else if (c == '-')
            e.push_back(2);
        else
            throw std::invalid_argument("sign string must be over {+,-,0}");
    }
    return SignVector(2, std::move(e));
}

bool SignVector::is_zero() const {
    for (auto x : entries)
        if (x != 0) return false;
    return true;
}

SetMask SignVector::support() const {
    SetMask m = 0;
    for (int i = 0; i < n(); ++i)
        if (entries[i] != 0) m |= SetMask{1} << i;
    return m;
}

SetMask SignVector::part(int j) const {
    SetMask m = 0;
    for (int i = 0; i < n(); ++i)
        if (entries[i] == j) m |= SetMask{1} << i;
    return m;
}

int SignVector::first_nonzero_value() const {
    for (auto x : entries)
        if (x != 0) return x;
    return 0;
}

SignVector SignVector::negated() const {
    if (p != 2) throw std::invalid_argument("negation only defined for p=2");
    return omega_shift(*this, 1);
}

std::string SignVector::to_string() const {
    std::string s;
    s.reserve(entries.size());
    for (auto x : entries) {
        if (p == 2)
            s += (x == 0 ? '0' : x == 1 ? '+' : '-');
        else
            s += static_cast<char>('0' + x);
    }
    return s;
}

int alt(const SignVector& X) {
    int runs = 0;
    std::uint8_t prev = 0;
    for (auto x : X.entries) {
        if (x == 0) continue;
        if (x != prev) ++runs;
        prev = x;
    }
    return runs;
}

bool is_subvector(const SignVector& X, const SignVector& Y) {
    if (X.p != Y.p) throw std::invalid_argument("subvector order needs equal p");
    if (X.n() != Y.n()) throw std::invalid_argument("subvector order needs equal n");
    for (int i = 0; i < X.n(); ++i)
        if (X.entries[i] != 0 && X.entries[i] != Y.entries[i]) return false;
    return true;
}

SignVector omega_shift(const SignVector& X, int a) {
    if (a < 0 || a >= X.p) throw std::invalid_argument("shift exponent must be in [0,p)");
    SignVector Y = X;
    for (auto& x : Y.entries)
        if (x != 0) x = static_cast<std::uint8_t>((x - 1 + a) % X.p + 1);
    return Y;
}

}  // namespace kneser
