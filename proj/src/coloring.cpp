#include "kneser/coloring.hpp"

#include <algorithm>
#include <bit>

namespace kneser {

int chi_formula(int n, int k, int r) {
    if (r < 2) throw std::invalid_argument("uniformity r must be >= 2");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (n < r * k) throw std::invalid_argument("chi_formula requires n >= rk");
    const int num = n - (k - 1) * r;
    return (num + r - 2) / (r - 1);
}

int erdos_color_mask(int k, int r, SetMask S) {
    if (S == 0) throw std::invalid_argument("empty set has no color");
    const int maxel = std::bit_width(S);  // largest element of S
    const int first_block = r * k - 1;
    if (maxel <= first_block) return 1;
    return 1 + (maxel - first_block + r - 2) / (r - 1);
}

int erdos_color(int k, int r, const KSubset& S) { return erdos_color_mask(k, r, S.mask()); }

Coloring erdos_coloring(const KneserInstance& inst) {
    const int t = chi_formula(inst.n, inst.k, inst.r);
    Coloring c;
    c.t = t;
    c.colors.reserve(inst.vertex_count());
    for (SetMask m : inst.vertices) c.colors.push_back(erdos_color_mask(inst.k, inst.r, m));
    return c;
}

namespace {

// Would class members + v contain an r-packing through v?
bool creates_packing(const std::vector<SetMask>& members, SetMask v, int r) {
    std::vector<SetMask> avail;
    for (SetMask m : members)
        if ((m & v) == 0) avail.push_back(m);
    if (static_cast<int>(avail.size()) < r - 1) return false;
    if (r == 2) return true;  // one disjoint member suffices
    auto idx = find_disjoint_indices(avail, r - 1);
    return idx.has_value();
}

}  // namespace

Coloring greedy_coloring(const KneserInstance& inst) {
    std::vector<std::vector<SetMask>> classes;
    Coloring c;
    c.colors.reserve(inst.vertex_count());
    for (SetMask v : inst.vertices) {
        int chosen = -1;
        for (std::size_t j = 0; j < classes.size(); ++j) {
            if (!creates_packing(classes[j], v, inst.r)) {
                chosen = static_cast<int>(j);
                break;
            }
        }
        if (chosen < 0) {
            chosen = static_cast<int>(classes.size());
            classes.emplace_back();
        }
        classes[static_cast<std::size_t>(chosen)].push_back(v);
        c.colors.push_back(chosen + 1);
    }
    c.t = std::max<int>(1, static_cast<int>(classes.size()));
    return c;
}

}  // namespace kneser
