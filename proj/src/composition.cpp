#include "kneser/composition.hpp"

#include <algorithm>
#include <map>

#include "kneser/coloring.hpp"

namespace kneser {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<int> prime_factors(int r) {
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    std::vector<int> fs;
    for (int d = 2; d * d <= r; ++d) {
        while (r % d == 0) {
            fs.push_back(d);
            r /= d;
        }
    }
    if (r > 1) fs.push_back(r);
    return fs;
}

int mu(int r) { return static_cast<int>(prime_factors(r).size()); }

KSubset index_map(const KSubset& A, const KSubset& B) {
    const int n1 = A.k();
    if (B.n != n1) throw std::invalid_argument("B must live on [|A|]");
    std::vector<int> elems;
    elems.reserve(B.elements.size());
    for (int i : B.elements) elems.push_back(A.elements[static_cast<std::size_t>(i - 1)]);
    return KSubset(A.n, std::move(elems));
}

int CompositionPlan::r() const {
    int prod = 1;
    for (const auto& f : factors) prod *= f.r;
    return prod;
}

int CompositionPlan::s() const {
    int prod = 1;
    for (const auto& f : factors) prod *= f.s;
    return prod;
}

CompositionPlan CompositionPlan::corollary(int r) {
    if (r < 2) throw std::invalid_argument("corollary plan needs r >= 2");
    CompositionPlan plan;
    for (int p : prime_factors(r)) plan.factors.push_back({p, 2});
    return plan;
}

BaseFinder direct_search_finder() {
    return [](int r, int s, int n, int k, int t,
              const SubsetColoring& coloring) -> std::optional<std::vector<KSubset>> {
        auto vertices = enumerate_stable(n, k, StabilityVariant::almost(s));
        std::map<int, std::vector<std::size_t>> classes;  // color -> vertex positions
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            const int c = coloring(vertices[i]);
            if (c < 1 || c > t) throw std::invalid_argument("coloring value out of [1,t]");
            classes[c].push_back(i);
        }
        for (const auto& [color, members] : classes) {  // ascending color
            std::vector<SetMask> masks;
            masks.reserve(members.size());
            for (auto i : members) masks.push_back(vertices[i].mask());
            if (static_cast<int>(masks.size()) < r) continue;
            if (auto idx = find_disjoint_indices(masks, r)) {
                std::vector<KSubset> out;
                for (auto i : *idx) out.push_back(vertices[members[i]]);
                return out;
            }
        }
        return std::nullopt;
    };
}

namespace {

struct Composer {
    const BaseFinder& base;
    CompositionTrace* trace;

    // Returns r(plan) disjoint same-colored members of V(n,k,s(plan)).
    std::vector<KSubset> run(std::span<const CompositionFactor> plan, int n, int k, int t,
                             const SubsetColoring& coloring, int level) {
        if (trace) trace->depth = std::max(trace->depth, level + 1);
        const auto& head = plan.front();
        if (plan.size() == 1) {
            auto found = base(head.r, head.s, n, k, t, coloring);
            if (!found)
                throw invariant_violation(
                    "no monochromatic packing at scale n=" + std::to_string(n) +
                    ", k=" + std::to_string(k) + ", r=" + std::to_string(head.r));
            return *found;
        }

        // Inner scale for the head factor.
        const int n1 = head.r * k + (t - 1) * (head.r - 1);
        if (trace) trace->level_scales.push_back(n1);

        // h~(A): common color of head.r disjoint members of V(n1,k,head.s)
        // under the coloring induced by re-indexing through A. Lazy per A.
        struct Inner {
            std::vector<KSubset> packing;
            int color = 0;
        };
        const auto tail = plan.subspan(1);

        std::map<SetMask, Inner> memo;
        SubsetColoring h_tilde = [&](const KSubset& A) -> int {
            auto it = memo.find(A.mask());
            if (it == memo.end()) {
                SubsetColoring induced = [&coloring, A](const KSubset& B) {
                    return coloring(index_map(A, B));
                };
                auto found = base(head.r, head.s, n1, k, t, induced);
                if (!found)
                    throw invariant_violation("inner packing missing for A=" + A.to_string() +
                                              " at n1=" + std::to_string(n1));
                Inner inner;
                inner.packing = std::move(*found);
                inner.color = coloring(index_map(A, inner.packing.front()));
                it = memo.emplace(A.mask(), std::move(inner)).first;
            }
            return it->second.color;
        };

        auto outer = run(tail, n, n1, t, h_tilde, level + 1);

        std::vector<KSubset> result;
        for (const auto& A : outer) {
            const auto& inner = memo.at(A.mask());
            for (const auto& B : inner.packing) result.push_back(index_map(A, B));
        }
        return result;
    }
};

}  // namespace

WitnessEdge compose_witness(const CompositionPlan& plan, int n, int k, int t,
                            const SubsetColoring& coloring, const BaseFinder& base_finder,
                            CompositionTrace* trace) {
    if (plan.factors.empty()) throw std::invalid_argument("empty composition plan");
    const int r = plan.r();
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    if (n < (t - 1) * (r - 1) + r * k)
        throw std::invalid_argument("composition requires n >= (t-1)(r-1)+rk");

    Composer composer{base_finder, trace};
    auto sets = composer.run(std::span<const CompositionFactor>(plan.factors), n, k, t, coloring, 0);

    WitnessEdge edge;
    edge.color = coloring(sets.front());
    edge.vertices = std::move(sets);
    return edge;
}

int corollary_lower_bound(int n, int k, int r) { return chi_formula(n, k, r); }

}  // namespace kneser
