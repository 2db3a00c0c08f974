#include "kneser/solver.hpp"

#include <bit>
#include <algorithm>
#include <chrono>
#include <ostream>

namespace kneser {

namespace {

using Clock = std::chrono::steady_clock;

SolveReport make_report(const KneserInstance& inst) {
    SolveReport r;
    r.n = inst.n;
    r.k = inst.k;
    r.r = inst.r;
    r.variant = inst.variant;
    return r;
}

struct Deadline {
    std::uint64_t max_nodes;
    Clock::time_point end;
    bool has_wall;
    std::uint64_t nodes = 0;

    explicit Deadline(const Budget& b)
        : max_nodes(b.max_nodes),
          end(Clock::now() + std::chrono::milliseconds(b.wall_ms)),
          has_wall(b.wall_ms > 0) {}

    bool spent() {
        ++nodes;
        if (max_nodes && nodes > max_nodes) return true;
        if (has_wall && (nodes & 0xfff) == 0 && Clock::now() > end) return true;
        return false;
    }
};

// Exact t-colorability search. Branches on the most saturated uncolored
// vertex (most blocked colors, then highest disjointness degree, then lowest
// colex rank), with color-symmetry breaking: a vertex may open at most one
// new color. blocked[u] bit c means class c plus u would contain an
// r-packing; it is maintained incrementally, so viability tests are O(1)
// and a fully blocked vertex fails the branch at once. The rule is a pure
// function of the search state, so results are deterministic.
struct ColorSearch {
    const KneserInstance& inst;
    const int t;
    const int V;
    Deadline deadline;
    bool out_of_budget = false;

    std::vector<int> color;                     // 0 = uncolored
    std::vector<std::vector<SetMask>> classes;  // member masks per color
    std::vector<std::uint64_t> blocked;         // per vertex: blocked color bits
    std::vector<int> degree;                    // # of disjoint other vertices
    std::uint64_t full_mask;

    ColorSearch(const KneserInstance& i, int t_, const Budget& b)
        : inst(i),
          t(t_),
          V(static_cast<int>(i.vertex_count())),
          deadline(b),
          color(i.vertex_count(), 0),
          classes(static_cast<std::size_t>(t_)),
          blocked(i.vertex_count(), 0),
          degree(i.vertex_count(), 0) {
        full_mask = t >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << t) - 1;
        for (int a = 0; a < V; ++a)
            for (int b2 = 0; b2 < V; ++b2)
                if (a != b2 && (inst.vertices[a] & inst.vertices[b2]) == 0) ++degree[a];
    }

    // Would class c (which already contains v) plus u hold an r-packing?
    // Any new packing must run through both u and the just-added v.
    bool packs_with(int u, int v, const std::vector<SetMask>& cls) {
        const SetMask um = inst.vertices[u];
        const SetMask vm = inst.vertices[v];
        if ((um & vm) != 0) return false;
        if (inst.r == 2) return true;
        const SetMask used = um | vm;
        if (inst.r == 3) {
            for (SetMask m : cls)
                if (m != vm && (m & used) == 0) return true;
            return false;
        }
        scratch.clear();
        for (SetMask m : cls)
            if (m != vm && (m & used) == 0) scratch.push_back(m);
        if (static_cast<int>(scratch.size()) < inst.r - 2) return false;
        return find_disjoint_indices(scratch, inst.r - 2).has_value();
    }

    std::vector<SetMask> scratch;

    int pick_vertex() const {
        int best = -1;
        int best_sat = -1;
        for (int u = 0; u < V; ++u) {
            if (color[u] != 0) continue;
            const int sat = std::popcount(blocked[u] & full_mask);
            if (sat > best_sat ||
                (sat == best_sat && (degree[u] > degree[best] ||
                                     (degree[u] == degree[best] && u < best)))) {
                best = u;
                best_sat = sat;
            }
        }
        return best;
    }

    bool dfs(int colored, int used) {
        if (colored == V) return true;
        if (deadline.spent()) {
            out_of_budget = true;
            return false;
        }
        const int v = pick_vertex();
        const int limit = std::min(t, used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (blocked[v] >> (c - 1) & 1) continue;
            color[v] = c;
            auto& cls = classes[static_cast<std::size_t>(c - 1)];
            cls.push_back(inst.vertices[v]);
            const std::uint64_t bit = std::uint64_t{1} << (c - 1);
            std::vector<int> touched;
            bool dead = false;
            for (int u = 0; u < V; ++u) {
                if (color[u] != 0 || (blocked[u] & bit)) continue;
                if (packs_with(u, v, cls)) {
                    blocked[u] |= bit;
                    touched.push_back(u);
                    if (blocked[u] == full_mask) dead = true;  // u has no color left
                }
            }
            if (!dead && dfs(colored + 1, std::max(used, c))) return true;
            for (int u : touched) blocked[u] &= ~bit;
            cls.pop_back();
            color[v] = 0;
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

std::optional<Coloring> colorable(const KneserInstance& inst, int t, const Budget& budget,
                                  std::uint64_t* nodes) {
    if (t < 1) throw std::invalid_argument("color count t must be >= 1");
    if (inst.vertex_count() > budget.max_vertices)
        throw solve_budget_error(make_report(inst));
    if (t >= 64) throw std::invalid_argument("color count beyond supported range");
    ColorSearch search(inst, t, budget);
    const bool found = search.dfs(0, 0);
    if (nodes) *nodes += search.deadline.nodes;
    if (search.out_of_budget) {
        SolveReport partial = make_report(inst);
        partial.nodes = search.deadline.nodes;
        throw solve_budget_error(std::move(partial));
    }
    if (!found) return std::nullopt;
    return Coloring{t, search.color};
}

SolveReport chromatic_number(const KneserInstance& inst, const Budget& budget) {
    const auto start = Clock::now();
    SolveReport rep = make_report(inst);
    auto stamp = [&] {
        rep.ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    };
    if (inst.vertex_count() > budget.max_vertices) {
        rep.upper = static_cast<int>(inst.vertex_count());
        stamp();
        throw solve_budget_error(std::move(rep));
    }

    const bool has_edge =
        static_cast<int>(inst.vertex_count()) >= inst.r &&
        find_disjoint_indices(inst.vertices, inst.r).has_value();
    rep.lower = has_edge ? 2 : 1;

    Coloring best = greedy_coloring(inst);
    best.t = std::max(1, best.max_color_used());
    if (inst.n >= inst.r * inst.k) {
        Coloring erd = erdos_coloring(inst);
        erd.t = std::max(1, erd.max_color_used());
        if (erd.t < best.t) best = std::move(erd);
    }
    rep.upper = best.t;
    rep.witness = best;

    if (!has_edge) {
        rep.upper = 1;
        rep.witness = Coloring::constant(inst.vertex_count(), 1, 1);
    }

    try {
        for (int target = rep.upper - 1; target >= rep.lower; --target) {
            auto c = colorable(inst, target, budget, &rep.nodes);
            if (c) {
                rep.upper = target;
                rep.witness = std::move(*c);
            } else {
                rep.lower = target + 1;
                break;
            }
        }
    } catch (solve_budget_error&) {
        stamp();
        throw solve_budget_error(std::move(rep));
    }
    rep.chi = rep.upper;
    rep.lower = rep.upper;
    stamp();
    return rep;
}

namespace {

void enumerate_edges(const std::vector<SetMask>& verts, int r, const Budget& budget,
                     std::vector<std::vector<std::size_t>>& edges) {
    std::vector<std::size_t> picked;
    // iterative-deepening-free DFS; edge count is budget-capped
    struct Rec {
        const std::vector<SetMask>& v;
        int r;
        std::uint64_t cap;
        std::vector<std::vector<std::size_t>>& out;
        std::vector<std::size_t> cur;
        void go(std::size_t from, SetMask used) {
            if (static_cast<int>(cur.size()) == r) {
                if (out.size() >= cap) throw solve_budget_error(SolveReport{});
                out.push_back(cur);
                return;
            }
            const std::size_t need = static_cast<std::size_t>(r) - cur.size();
            for (std::size_t i = from; i + need <= v.size(); ++i) {
                if ((v[i] & used) != 0) continue;
                cur.push_back(i);
                go(i + 1, used | v[i]);
                cur.pop_back();
            }
        }
    } rec{verts, r, budget.max_edges, edges, {}};
    rec.go(0, 0);
}

}  // namespace

IlpStats export_ilp(const KneserInstance& inst, int t, std::ostream& out, const Budget& budget) {
    if (t < 1) throw std::invalid_argument("color count t must be >= 1");
    if (inst.vertex_count() > budget.max_vertices)
        throw solve_budget_error(make_report(inst));

    std::vector<std::vector<std::size_t>> edges;
    enumerate_edges(inst.vertices, inst.r, budget, edges);

    const std::size_t V = inst.vertex_count();
    IlpStats stats;
    stats.variables = V * static_cast<std::size_t>(t);
    stats.assignment_rows = V;
    stats.packing_rows = edges.size() * static_cast<std::size_t>(t);
    stats.edges = edges.size();

    out << "\\ t-coloring feasibility of KG^" << inst.r << "([" << inst.n << "]," << inst.k
        << ") " << to_string(inst.variant) << ", t=" << t << ", vertices=" << V
        << ", edges=" << edges.size() << "\n";
    out << "Minimize\n obj:";
    if (V > 0) out << " 0 x_0_1";
    out << "\nSubject To\n";
    for (std::size_t v = 0; v < V; ++v) {
        out << " assign_" << v << ":";
        for (int c = 1; c <= t; ++c) out << (c > 1 ? " + " : " ") << "x_" << v << "_" << c;
        out << " = 1\n";
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
        for (int c = 1; c <= t; ++c) {
            out << " pack_" << e << "_" << c << ":";
            bool first = true;
            for (std::size_t v : edges[e]) {
                out << (first ? " " : " + ") << "x_" << v << "_" << c;
                first = false;
            }
            out << " <= " << inst.r - 1 << "\n";
        }
    }
    out << "Binary\n";
    for (std::size_t v = 0; v < V; ++v)
        for (int c = 1; c <= t; ++c) out << " x_" << v << "_" << c << "\n";
    out << "End\n";
    return stats;
}

std::vector<TableRow> verify_table_row(int k, int r, int n_max, const StabilityVariant& v,
                                       const Budget& budget) {
    if (n_max < r * k) throw std::invalid_argument("n_max below rk");
    std::vector<TableRow> rows;
    for (int n = r * k; n <= n_max; ++n) {
        TableRow row;
        row.expected = chi_formula(n, k, r);
        try {
            auto inst = KneserInstance::make(n, k, r, v);
            row.report = chromatic_number(inst, budget);
            row.match = row.report.chi.has_value() && *row.report.chi == row.expected;
        } catch (solve_budget_error& e) {
            row.report = std::move(e.partial);
            row.budget_exceeded = true;
            row.match = false;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace kneser
