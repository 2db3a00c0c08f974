#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "kneser/coloring.hpp"
#include "kneser/hypergraph.hpp"

namespace kneser {

struct Budget {
    std::size_t max_vertices = 200;
    std::uint64_t max_nodes = 0;  // 0 = unlimited
    std::int64_t wall_ms = 0;     // 0 = unlimited
    std::uint64_t max_edges = 1u << 22;
};

struct SolveReport {
    int n = 0;
    int k = 0;
    int r = 2;
    StabilityVariant variant;
    int lower = 1;
    int upper = 0;
    std::optional<int> chi;  // set iff lower == upper
    std::optional<Coloring> witness;
    std::uint64_t nodes = 0;
    std::int64_t ms = 0;
};

/// Budget exhaustion; carries the best bounds established so far.
struct solve_budget_error : budget_error {
    SolveReport partial;
    explicit solve_budget_error(SolveReport p)
        : budget_error("solve budget exhausted"), partial(std::move(p)) {}
};

/// Complete backtracking decision procedure: a proper t-coloring or nullopt.
/// Deterministic for a given instance and t.
std::optional<Coloring> colorable(const KneserInstance& inst, int t, const Budget& budget = {},
                                  std::uint64_t* nodes = nullptr);

/// Exact chromatic number: greedy/Erdos upper bound, then descending
/// colorable calls until infeasibility pins the value.
SolveReport chromatic_number(const KneserInstance& inst, const Budget& budget = {});

struct IlpStats {
    std::size_t variables = 0;
    std::size_t assignment_rows = 0;
    std::size_t packing_rows = 0;
    std::size_t edges = 0;
};

/// 0/1 feasibility program for "inst is t-colorable" in LP text format
/// (CPLEX LP dialect, one constraint per line, variables x_<vertex>_<color>).
IlpStats export_ilp(const KneserInstance& inst, int t, std::ostream& out,
                    const Budget& budget = {});

struct TableRow {
    SolveReport report;
    int expected = 0;
    bool match = false;
    bool budget_exceeded = false;
};

/// chi vs the closed formula for every n in [rk, n_max]. Budget errors are
/// recorded per row, never abort the sweep.
std::vector<TableRow> verify_table_row(int k, int r, int n_max, const StabilityVariant& v,
                                       const Budget& budget = {});

}  // namespace kneser
