#include "kneser/tucker.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "kneser/composition.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kneser {

namespace {

constexpr int kMaxScanN = 16;
constexpr int kMaxScanP = 8;
constexpr std::int64_t kExhaustiveCap = std::int64_t{1} << 28;

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > kExhaustiveCap * 2) return kExhaustiveCap * 2;
        r *= b;
    }
    return r;
}

}  // namespace

TuckerParams::TuckerParams(int p_, int n_, int k_, int colors_)
    : p(p_), n(n_), k(k_), colors(colors_) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (n < 1 || n > kMaxGroundSet) throw std::invalid_argument("n out of range");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (colors < 1) throw std::invalid_argument("colors must be >= 1");
}

LambdaLabel shift_label(const LambdaLabel& l, int a, int p) {
    return LambdaLabel{(l.part - 1 + a) % p + 1, l.level};
}

bool zp_tucker_conclusion(const TuckerParams& params) {
    return params.alpha() + (params.m() - params.alpha()) * (params.p - 1) >= params.n;
}

namespace {

/// Raw-array lambda evaluation shared by the scan kernels.
struct ZpCtx {
    int p;
    int n;
    int alpha;
    const std::vector<SetMask>* verts;  // V(n,k,2), colex ascending
    const std::vector<int>* colors;

    // {part, level} of a non-zero entry array; also reports the vertex chosen
    // in the high case (-1 in the low case).
    LambdaLabel label(const std::uint8_t* e, int* chosen_vertex = nullptr) const {
        int runs = 0;
        std::uint8_t prev = 0;
        int first = 0;
        for (int i = 0; i < n; ++i) {
            const auto x = e[i];
            if (x == 0) continue;
            if (first == 0) first = x;
            if (x != prev) ++runs;
            prev = x;
        }
        if (runs == 0) throw std::invalid_argument("lambda undefined on the zero vector");
        if (chosen_vertex) *chosen_vertex = -1;
        if (runs <= alpha) return LambdaLabel{first, runs};

        std::array<SetMask, kMaxScanP + 1> part{};
        for (int i = 0; i < n; ++i)
            if (e[i] != 0) part[e[i]] |= SetMask{1} << i;
        for (std::size_t vi = 0; vi < verts->size(); ++vi) {
            const SetMask vm = (*verts)[vi];
            for (int j = 1; j <= p; ++j) {
                if ((vm & ~part[j]) == 0) {
                    if (chosen_vertex) *chosen_vertex = static_cast<int>(vi);
                    return LambdaLabel{j, (*colors)[vi] + alpha};
                }
            }
        }
        throw invariant_violation(
            "pigeonhole failure: alt(X) > p(k-1) but no part contains a stable k-subset");
    }
};

ZpCtx make_ctx(const TuckerParams& params, const KneserInstance& inst, const Coloring& c) {
    if (inst.n != params.n || inst.k != params.k)
        throw std::invalid_argument("instance does not match Tucker parameters");
    if (inst.variant != StabilityVariant::almost(2))
        throw std::invalid_argument("lambda_zp needs the almost-2-stable vertex set");
    if (c.colors.size() != inst.vertex_count())
        throw std::invalid_argument("coloring must be total on instance vertices");
    for (int col : c.colors)
        if (col < 1 || col > params.colors)
            throw std::invalid_argument("coloring value outside [1, colors]");
    return ZpCtx{params.p, params.n, params.alpha(), &inst.vertices, &c.colors};
}

SignVector vector_from(const std::uint8_t* e, int n, int p) {
    return SignVector(p, std::vector<std::uint8_t>(e, e + n));
}

}  // namespace

LambdaLabel lambda_zp(const SignVector& X, const TuckerParams& params, const KneserInstance& inst,
                      const Coloring& c) {
    if (X.p != params.p || X.n() != params.n)
        throw std::invalid_argument("sign vector does not match Tucker parameters");
    ZpCtx ctx = make_ctx(params, inst, c);
    return ctx.label(X.entries.data());
}

namespace {

struct ChainViolation {
    std::vector<std::uint64_t> rank;           // (x1 code, extension codes...)
    std::vector<std::array<std::uint8_t, kMaxScanN>> links;

    bool before(const ChainViolation& other) const { return rank < other.rank; }
};

/// Depth-first extension of a partial chain. Links after the first are
/// encoded by filling the previous link's zero positions. Only extensions
/// keeping the high level equal and the parts pairwise distinct are walked;
/// everything pruned cannot be part of a violation.
struct ChainScan {
    const ZpCtx& ctx;
    int p;
    std::uint64_t chains_checked = 0;

    bool extend(std::array<std::uint8_t, kMaxScanN>& cur, int depth, int level,
                std::uint32_t parts_used,
                std::vector<std::array<std::uint8_t, kMaxScanN>>& links,
                std::vector<std::uint64_t>& rank, ChainViolation& out) {
        if (depth == p) {
            out.rank = rank;
            out.links = links;
            return true;
        }
        std::array<int, kMaxScanN> zeros{};
        int z = 0;
        for (int i = 0; i < ctx.n; ++i)
            if (cur[i] == 0) zeros[z++] = i;
        const std::int64_t total = ipow(p + 1, z);
        std::array<std::uint8_t, kMaxScanN> next = cur;
        for (std::int64_t code = 0; code < total; ++code) {
            std::int64_t rest = code;
            for (int zi = 0; zi < z; ++zi) {
                next[zeros[zi]] = static_cast<std::uint8_t>(rest % (p + 1));
                rest /= p + 1;
            }
            const LambdaLabel lab = ctx.label(next.data());
            ++chains_checked;  // one chain extension evaluated
            if (lab.level != level) continue;
            if (parts_used & (1u << lab.part)) continue;
            links.push_back(next);
            rank.push_back(static_cast<std::uint64_t>(code));
            if (extend(next, depth + 1, level, parts_used | (1u << lab.part), links, rank, out))
                return true;
            rank.pop_back();
            links.pop_back();
        }
        return false;
    }

    // Searches all chains with minimal link X1 (given by its code); returns
    // the first violation in extension order, if any.
    std::optional<ChainViolation> from_x1(std::uint64_t x1_code) {
        std::array<std::uint8_t, kMaxScanN> e1{};
        std::uint64_t rest = x1_code;
        bool zero = true;
        for (int i = 0; i < ctx.n; ++i) {
            e1[i] = static_cast<std::uint8_t>(rest % static_cast<std::uint64_t>(p + 1));
            if (e1[i] != 0) zero = false;
            rest /= static_cast<std::uint64_t>(p + 1);
        }
        if (zero) return std::nullopt;
        int runs = 0;
        std::uint8_t prev = 0;
        for (int i = 0; i < ctx.n; ++i) {
            if (e1[i] == 0) continue;
            if (e1[i] != prev) ++runs;
            prev = e1[i];
        }
        if (runs <= ctx.alpha) return std::nullopt;
        const LambdaLabel lab1 = ctx.label(e1.data());
        std::vector<std::array<std::uint8_t, kMaxScanN>> links{e1};
        std::vector<std::uint64_t> rank{x1_code};
        ChainViolation out;
        if (extend(e1, 1, lab1.level, 1u << lab1.part, links, rank, out))
            return out;
        return std::nullopt;
    }
};

struct ScanOutcome {
    std::uint64_t count = 0;
    std::optional<ChainViolation> violation;
};

/// Runs `body` over [0, total) either serially (early exit at first hit) or
/// in ascending blocks with an OpenMP inner loop; the merged result is the
/// one the serial order would have found first.
template <typename Body>
ScanOutcome ordered_scan(std::int64_t total, Parallelism par, const Body& body) {
    ScanOutcome out;
    if (par == Parallelism::serial) {
        for (std::int64_t code = 0; code < total; ++code) {
            auto hit = body(code, out.count);
            if (hit) {
                out.violation = std::move(hit);
                break;
            }
        }
        return out;
    }
    const std::int64_t block = std::int64_t{1} << 18;
    for (std::int64_t b0 = 0; b0 < total && !out.violation; b0 += block) {
        const std::int64_t b1 = std::min(total, b0 + block);
        std::optional<ChainViolation> best;
        std::uint64_t count = 0;
#ifdef _OPENMP
#pragma omp parallel
        {
            std::optional<ChainViolation> local;
            std::uint64_t local_count = 0;
#pragma omp for schedule(dynamic, 1024) nowait
            for (std::int64_t code = b0; code < b1; ++code) {
                // full block scan keeps counters deterministic across runs
                auto hit = body(code, local_count);
                if (hit && (!local || hit->before(*local))) local = std::move(hit);
            }
#pragma omp critical
            {
                count += local_count;
                if (local && (!best || local->before(*best))) best = std::move(local);
            }
        }
#else
        for (std::int64_t code = b0; code < b1 && !best; ++code) {
            auto hit = body(code, count);
            if (hit) best = std::move(hit);
        }
#endif
        out.count += count;
        if (best) out.violation = std::move(best);
    }
    return out;
}

}  // namespace

WitnessEdge chain_witness(const Chain& chain, const TuckerParams& params,
                          const KneserInstance& inst, const Coloring& c) {
    ZpCtx ctx = make_ctx(params, inst, c);
    if (chain.links.size() != static_cast<std::size_t>(params.p))
        throw std::invalid_argument("chain must have p links");
    WitnessEdge edge;
    std::uint32_t parts = 0;
    int level = -1;
    SetMask all = 0;
    for (const auto& link : chain.links) {
        int vi = -1;
        const LambdaLabel lab = ctx.label(link.entries.data(), &vi);
        if (lab.level <= params.alpha() || vi < 0)
            throw std::invalid_argument("chain link not in the high-level case");
        if (level < 0) level = lab.level;
        if (lab.level != level) throw std::invalid_argument("chain levels are not equal");
        if (parts & (1u << lab.part))
            throw std::invalid_argument("chain parts are not pairwise distinct");
        parts |= 1u << lab.part;
        const SetMask vm = inst.vertices[static_cast<std::size_t>(vi)];
        if ((vm & all) != 0)
            throw invariant_violation("extracted vertices are not pairwise disjoint");
        all |= vm;
        edge.vertices.push_back(inst.vertex(static_cast<std::size_t>(vi)));
    }
    edge.color = level - params.alpha();
    return edge;
}

ZpSuiteReport check_zp_properties(const TuckerParams& params, const KneserInstance& inst,
                                  const Coloring& c, const ChainSampler& sampler,
                                  Parallelism par) {
    ZpCtx ctx = make_ctx(params, inst, c);
    ZpSuiteReport report;
    const int p = params.p;
    const int n = params.n;

    auto to_chain = [&](const ChainViolation& v) {
        Chain chain;
        for (const auto& link : v.links) chain.links.push_back(vector_from(link.data(), n, p));
        return chain;
    };

    if (sampler.exhaustive) {
        const std::int64_t n_vectors = ipow(p + 1, n);
        if (n_vectors > kExhaustiveCap || ipow(2 * p + 1, n) > kExhaustiveCap)
            throw budget_error("exhaustive scan too large; use sampled mode");

        // (a) equivariance over every non-zero vector.
        auto equi = ordered_scan(n_vectors, par,
                                 [&](std::int64_t code, std::uint64_t& count)
                                     -> std::optional<ChainViolation> {
            std::array<std::uint8_t, kMaxScanN> e{};
            std::int64_t rest = code;
            bool zero = true;
            for (int i = 0; i < n; ++i) {
                e[i] = static_cast<std::uint8_t>(rest % (p + 1));
                if (e[i] != 0) zero = false;
                rest /= p + 1;
            }
            if (zero) return std::nullopt;
            ++count;
            const LambdaLabel base = ctx.label(e.data());
            std::array<std::uint8_t, kMaxScanN> shifted{};
            for (int a = 1; a < p; ++a) {
                for (int i = 0; i < n; ++i)
                    shifted[i] = e[i] == 0 ? 0 : static_cast<std::uint8_t>((e[i] - 1 + a) % p + 1);
                if (!(ctx.label(shifted.data()) == shift_label(base, a, p))) {
                    ChainViolation v;
                    v.rank = {static_cast<std::uint64_t>(code), static_cast<std::uint64_t>(a)};
                    v.links = {e, shifted};
                    return v;
                }
            }
            return std::nullopt;
        });
        report.vectors_checked = equi.count;
        if (equi.violation) report.equivariance_ok = false;

        // (b) the low-level property over every 2-chain X subseteq Y.
        // Digit per position: 0 = zero in both, 1..p = in Y only, p+1..2p = in both.
        const std::int64_t n_pairs = ipow(2 * p + 1, n);
        auto low = ordered_scan(n_pairs, par,
                                [&](std::int64_t code, std::uint64_t& count)
                                    -> std::optional<ChainViolation> {
            std::array<std::uint8_t, kMaxScanN> ex{}, ey{};
            std::int64_t rest = code;
            bool x_zero = true;
            for (int i = 0; i < n; ++i) {
                const int d = static_cast<int>(rest % (2 * p + 1));
                rest /= 2 * p + 1;
                if (d == 0) {
                    ex[i] = ey[i] = 0;
                } else if (d <= p) {
                    ex[i] = 0;
                    ey[i] = static_cast<std::uint8_t>(d);
                } else {
                    ex[i] = ey[i] = static_cast<std::uint8_t>(d - p);
                    x_zero = false;
                }
            }
            if (x_zero) return std::nullopt;
            ++count;
            const LambdaLabel lx = ctx.label(ex.data());
            if (lx.level > params.alpha()) return std::nullopt;
            const LambdaLabel ly = ctx.label(ey.data());
            if (ly.level != lx.level) return std::nullopt;
            if (ly.part == lx.part) return std::nullopt;
            ChainViolation v;
            v.rank = {static_cast<std::uint64_t>(code)};
            v.links = {ex, ey};
            return v;
        });
        report.pairs_checked = low.count;
        if (low.violation) report.low_level_ok = false;

        // (c) the high-level property over every p-chain, pruned to the
        // extensions that could still violate it.
        std::uint64_t chains_total = 0;
        auto high = ordered_scan(n_vectors, par,
                                 [&](std::int64_t code, std::uint64_t& count)
                                     -> std::optional<ChainViolation> {
            ChainScan scan{ctx, p};
            auto hit = scan.from_x1(static_cast<std::uint64_t>(code));
            count += scan.chains_checked;
            return hit;
        });
        chains_total = high.count;
        report.chains_checked = chains_total;
        if (high.violation) {
            report.high_level_ok = false;
            report.violation = to_chain(*high.violation);
            report.witness = chain_witness(*report.violation, params, inst, c);
        }
        return report;
    }

    // Sampled mode: seeded random chains, serial and deterministic.
    std::mt19937_64 rng(sampler.seed);
    const std::uint64_t codes = static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(p) + 1;
    for (std::uint64_t it = 0; it < sampler.samples; ++it) {
        std::vector<std::array<std::uint8_t, kMaxScanN>> links(
            static_cast<std::size_t>(p), std::array<std::uint8_t, kMaxScanN>{});
        bool first_nonzero = false;
        while (!first_nonzero) {
            for (auto& link : links) link.fill(0);
            for (int i = 0; i < n; ++i) {
                const std::uint64_t d = rng() % codes;
                if (d == 0) continue;
                const int value = static_cast<int>((d - 1) / static_cast<std::uint64_t>(p)) + 1;
                const int enter = static_cast<int>((d - 1) % static_cast<std::uint64_t>(p)) + 1;
                for (int l = enter; l <= p; ++l)
                    links[static_cast<std::size_t>(l - 1)][i] = static_cast<std::uint8_t>(value);
            }
            first_nonzero = false;
            for (int i = 0; i < n; ++i) first_nonzero |= links[0][i] != 0;
        }
        ++report.chains_checked;

        std::vector<LambdaLabel> labels;
        std::array<std::uint8_t, kMaxScanN> shifted{};
        for (const auto& link : links) {
            ++report.vectors_checked;
            const LambdaLabel base = ctx.label(link.data());
            labels.push_back(base);
            for (int a = 1; a < p; ++a) {
                for (int i = 0; i < n; ++i)
                    shifted[i] =
                        link[i] == 0 ? 0 : static_cast<std::uint8_t>((link[i] - 1 + a) % p + 1);
                if (!(ctx.label(shifted.data()) == shift_label(base, a, p)))
                    report.equivariance_ok = false;
            }
        }
        for (int l = 0; l + 1 < p; ++l) {
            ++report.pairs_checked;
            if (labels[l].level == labels[l + 1].level && labels[l].level <= params.alpha() &&
                labels[l].part != labels[l + 1].part)
                report.low_level_ok = false;
        }
        bool all_high_equal = labels[0].level > params.alpha();
        for (int l = 1; l < p; ++l) all_high_equal &= labels[l].level == labels[0].level;
        if (all_high_equal) {
            bool distinct = true;
            for (int a = 0; a < p && distinct; ++a)
                for (int b = a + 1; b < p && distinct; ++b)
                    distinct = labels[a].part != labels[b].part;
            if (distinct && !report.violation) {
                report.high_level_ok = false;
                Chain chain;
                for (const auto& link : links)
                    chain.links.push_back(vector_from(link.data(), n, p));
                report.violation = chain;
                report.witness = chain_witness(chain, params, inst, c);
            }
        }
    }
    return report;
}

namespace {

struct SignedSelection {
    int vertex = -1;
    int cls = 0;  // +1 if inside X+, -1 if inside X-
    int color = 0;
};

// Smallest (color, colex rank, X- before X+) stable subset inside a sign class.
std::optional<SignedSelection> signed_selection(const SignVector& X, const KneserInstance& inst,
                                                const Coloring& c) {
    const SetMask plus = X.part(1);
    const SetMask minus = X.part(2);
    std::optional<SignedSelection> best;
    for (std::size_t vi = 0; vi < inst.vertices.size(); ++vi) {
        const SetMask vm = inst.vertices[vi];
        int cls;
        if ((vm & ~plus) == 0)
            cls = +1;
        else if ((vm & ~minus) == 0)
            cls = -1;
        else
            continue;
        const int color = c.colors[vi];
        // vi ascends in colex, so the first hit of each color is colex-minimal;
        // a subset lies in at most one class, making the -/+ tiebreak moot
        if (!best || color < best->color) best = SignedSelection{static_cast<int>(vi), cls, color};
    }
    return best;
}

}  // namespace

int lambda_signed(const SignVector& X, int n, int k, const KneserInstance& inst,
                  const Coloring& c) {
    if (X.p != 2) throw std::invalid_argument("lambda_signed needs p=2 sign vectors");
    if (X.n() != n) throw std::invalid_argument("sign vector length mismatch");
    if (X.is_zero()) throw std::invalid_argument("lambda undefined on the zero vector");
    if (inst.n != n || inst.k != k || inst.variant != StabilityVariant::cyclic(2))
        throw std::invalid_argument("lambda_signed needs the cyclic 2-stable vertex set");
    if (c.colors.size() != inst.vertex_count())
        throw std::invalid_argument("coloring must be total on instance vertices");

    const int a = alt(X);
    if (a <= 2 * k - 1) return X.first_nonzero_value() == 1 ? a : -a;
    auto sel = signed_selection(X, inst, c);
    if (!sel)
        throw invariant_violation(
            "alt(X) >= 2k but neither sign class contains a cyclic 2-stable k-subset");
    return sel->cls * (sel->color + 2 * k - 1);
}

std::optional<std::pair<SignVector, SignVector>> find_complementary_pair(
    const SignedLambdaFn& lambda, int n, Parallelism par, int max_n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (n > max_n)
        throw budget_error("complementary-pair search beyond exhaustive budget n <= " +
                           std::to_string(max_n));

    const std::int64_t total = ipow(3, n);
    auto body = [&](std::int64_t code, std::uint64_t& count) -> std::optional<ChainViolation> {
        if (code == 0) return std::nullopt;
        std::vector<std::uint8_t> eb(static_cast<std::size_t>(n), 0);
        std::int64_t rest = code;
        SetMask supp = 0;
        for (int i = 0; i < n; ++i) {
            eb[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(rest % 3);
            if (eb[static_cast<std::size_t>(i)] != 0) supp |= SetMask{1} << i;
            rest /= 3;
        }
        ++count;
        const SignVector B(2, eb);
        const int lb = lambda(B);
        std::uint64_t a_idx = 0;
        for (SetMask s = supp;; s = (s - 1) & supp) {
            if (s != 0) {
                std::vector<std::uint8_t> ea(static_cast<std::size_t>(n), 0);
                for (int i = 0; i < n; ++i)
                    if (s & (SetMask{1} << i)) ea[static_cast<std::size_t>(i)] = eb[static_cast<std::size_t>(i)];
                const SignVector A(2, ea);
                if (lambda(A) == -lb) {
                    ChainViolation v;
                    v.rank = {static_cast<std::uint64_t>(code), a_idx};
                    std::array<std::uint8_t, kMaxScanN> la{}, lb2{};
                    std::copy(ea.begin(), ea.end(), la.begin());
                    std::copy(eb.begin(), eb.end(), lb2.begin());
                    v.links = {la, lb2};
                    return v;
                }
                ++a_idx;
            }
            if (s == 0) break;
        }
        return std::nullopt;
    };

    auto outcome = ordered_scan(total, par, body);
    if (!outcome.violation) return std::nullopt;
    const auto& v = *outcome.violation;
    return std::make_pair(vector_from(v.links[0].data(), n, 2),
                          vector_from(v.links[1].data(), n, 2));
}

WitnessEdge schrijver_witness(int n, int k, const Coloring& c, Parallelism par) {
    if (n < 2 * k) throw std::invalid_argument("schrijver_witness requires n >= 2k");
    const int max_color = n - 2 * k + 1;
    auto inst = KneserInstance::make(n, k, 2, StabilityVariant::cyclic(2));
    if (c.colors.size() != inst.vertex_count())
        throw std::invalid_argument("coloring must be total on the cyclic 2-stable vertices");
    for (int col : c.colors)
        if (col < 1 || col > max_color)
            throw std::invalid_argument("schrijver_witness needs colors in [n-2k+1]");

    SignedLambdaFn lam = [&](const SignVector& X) { return lambda_signed(X, n, k, inst, c); };
    if (auto pair = find_complementary_pair(lam, n, par)) {
        const auto& [A, B] = *pair;
        if (alt(A) < 2 * k)
            throw invariant_violation("complementary pair with low alt should be impossible");
        auto sel_a = signed_selection(A, inst, c);
        auto sel_b = signed_selection(B, inst, c);
        if (!sel_a || !sel_b || sel_a->cls == sel_b->cls || sel_a->color != sel_b->color)
            throw invariant_violation("complementary pair did not yield opposite-class equal colors");
        const SetMask ma = inst.vertices[static_cast<std::size_t>(sel_a->vertex)];
        const SetMask mb = inst.vertices[static_cast<std::size_t>(sel_b->vertex)];
        if ((ma & mb) != 0) throw invariant_violation("extracted Schrijver witness overlaps");
        WitnessEdge edge;
        edge.color = sel_a->color;
        edge.vertices = {inst.vertex(static_cast<std::size_t>(sel_a->vertex)),
                         inst.vertex(static_cast<std::size_t>(sel_b->vertex))};
        return edge;
    }

    // Tucker's lemma at m=n gives no existence guarantee; the direct packing
    // search still must succeed because chi exceeds the color budget.
    if (auto edge = monochromatic_edge(inst, c)) return *edge;
    throw invariant_violation("no monochromatic pair under n-2k+1 colors: Schrijver falsified");
}

}  // namespace kneser
