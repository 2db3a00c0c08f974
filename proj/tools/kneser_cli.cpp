#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "kneser/composition.hpp"
#include "kneser/serialize.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace kneser;
using nlohmann::json;

constexpr int kExitInvalidArgs = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInvariant = 4;
constexpr int kExitIo = 5;

Budget budget_from_env(Budget b) {
    if (const char* v = std::getenv("KNESER_MAX_VERTICES")) b.max_vertices = std::strtoull(v, nullptr, 10);
    if (const char* v = std::getenv("KNESER_MAX_NODES")) b.max_nodes = std::strtoull(v, nullptr, 10);
    if (const char* v = std::getenv("KNESER_WALL_MS")) b.wall_ms = std::strtoll(v, nullptr, 10);
    return b;
}

struct CommonArgs {
    int n = 0, k = 0, r = 2, s = 1;
    std::string variant = "almost";
    std::string format = "text";
    Budget budget;
};

void add_instance_flags(CLI::App* app, CommonArgs& a, bool with_r) {
    app->add_option("-n,--n", a.n, "ground set size")->required();
    app->add_option("-k,--k", a.k, "subset size")->required();
    if (with_r) app->add_option("-r,--r", a.r, "hypergraph uniformity");
    app->add_option("-s,--s", a.s, "stability gap");
    app->add_option("--variant", a.variant, "almost|cyclic|unrestricted")
        ->check(CLI::IsMember({"almost", "cyclic", "unrestricted"}));
    app->add_option("--format", a.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app->add_option("--max-vertices", a.budget.max_vertices, "vertex budget");
    app->add_option("--max-nodes", a.budget.max_nodes, "search node budget (0 = unlimited)");
    app->add_option("--wall-ms", a.budget.wall_ms, "wall clock budget in ms (0 = unlimited)");
}

int cmd_enumerate(const CommonArgs& a) {
    auto variant = parse_variant(a.variant, a.s);
    auto vertices = enumerate_stable(a.n, a.k, variant);
    const auto count = count_stable(a.n, a.k, variant);
    if (count != vertices.size()) {
        std::cerr << "internal error: closed-form count disagrees with enumeration\n";
        return kExitInvariant;
    }
    if (a.format == "json") {
        json j;
        j["n"] = a.n;
        j["k"] = a.k;
        j["variant"] = to_string(variant);
        j["count"] = count;
        j["vertices"] = json::array();
        for (const auto& v : vertices) j["vertices"].push_back(to_json(v));
        std::cout << j.dump() << "\n";
    } else if (a.format == "csv") {
        std::cout << "vertex\n";
        for (const auto& v : vertices) {
            for (std::size_t i = 0; i < v.elements.size(); ++i)
                std::cout << (i ? " " : "") << v.elements[i];
            std::cout << "\n";
        }
    } else {
        for (const auto& v : vertices) std::cout << v.to_string() << "\n";
        std::cout << "count=" << count << "\n";
    }
    return 0;
}

void print_report(const SolveReport& rep, const std::string& format) {
    if (format == "json") {
        std::cout << to_json(rep).dump() << "\n";
    } else if (format == "csv") {
        std::cout << csv_header_solve_report() << "\n" << csv_row(rep) << "\n";
    } else {
        std::cout << "KG^" << rep.r << "([" << rep.n << "]," << rep.k << ") "
                  << to_string(rep.variant) << ": ";
        if (rep.chi)
            std::cout << "chi=" << *rep.chi;
        else
            std::cout << "bounds=[" << rep.lower << "," << rep.upper << "]";
        std::cout << " nodes=" << rep.nodes << " ms=" << rep.ms << "\n";
    }
}

int cmd_chi(const CommonArgs& a) {
    auto variant = parse_variant(a.variant, a.s);
    auto inst = KneserInstance::make(a.n, a.k, a.r, variant);
    try {
        auto rep = chromatic_number(inst, budget_from_env(a.budget));
        print_report(rep, a.format);
    } catch (const solve_budget_error& e) {
        print_report(e.partial, a.format);
        return kExitBudget;
    }
    return 0;
}

struct TableArgs {
    CommonArgs common;
    std::string rows = "paper";
    int n_max = 0;
};

int cmd_verify_table(const TableArgs& ta) {
    struct RowSpec {
        int k, r, n_max;
        StabilityVariant v;
    };
    std::vector<RowSpec> specs;
    if (ta.n_max > 0) {
        const int s = ta.common.s > 0 ? ta.common.s : ta.common.r;
        specs.push_back({ta.common.k, ta.common.r, ta.n_max, parse_variant(ta.common.variant, s)});
    } else {
        // the published table rows, cyclic s=r, plus the r=2 Schrijver sweep
        for (auto [k, r, nmax] : {std::array{2, 3, 9}, std::array{3, 3, 12}, std::array{4, 3, 14},
                                  std::array{2, 5, 13}, std::array{3, 5, 16}, std::array{4, 5, 21}})
            specs.push_back({k, r, nmax, StabilityVariant::cyclic(r)});
        for (int k = 1; k <= 3; ++k) specs.push_back({k, 2, 10, StabilityVariant::cyclic(2)});
    }

    bool any_mismatch = false;
    bool any_budget = false;
    json all = json::array();
    if (ta.common.format == "csv")
        std::cout << csv_header_solve_report() << ",expected,match\n";
    for (const auto& spec : specs) {
        auto rows = verify_table_row(spec.k, spec.r, spec.n_max, spec.v,
                                     budget_from_env(ta.common.budget));
        for (const auto& row : rows) {
            any_budget |= row.budget_exceeded;
            any_mismatch |= !row.match && !row.budget_exceeded;
            if (ta.common.format == "json") {
                all.push_back(to_json(row));
            } else if (ta.common.format == "csv") {
                std::cout << csv_row(row.report) << ',' << row.expected << ','
                          << (row.match ? 1 : 0) << "\n";
            } else {
                std::cout << "n=" << row.report.n << " k=" << spec.k << " r=" << spec.r << " "
                          << to_string(spec.v) << " chi="
                          << (row.report.chi ? std::to_string(*row.report.chi) : "?")
                          << " formula=" << row.expected << " "
                          << (row.budget_exceeded ? "BUDGET" : row.match ? "match" : "MISMATCH")
                          << "\n";
            }
        }
    }
    if (ta.common.format == "json") std::cout << all.dump() << "\n";
    if (any_mismatch) return kExitInvariant;
    if (any_budget) return kExitBudget;
    return 0;
}

struct TuckerArgs {
    int p = 2, n = 0, k = 0;
    std::string coloring = "erdos";
    std::uint64_t seed = 0;
    std::uint64_t samples = 10000;
    bool force_sampled = false;
    std::string format = "text";
};

int cmd_tucker(const TuckerArgs& ta) {
    if (ta.coloring == "all-2-colorings") {
        if (ta.p != 2) {
            std::cerr << "all-2-colorings suite is the p=2 Schrijver sweep\n";
            return kExitInvalidArgs;
        }
        auto inst = KneserInstance::make(ta.n, ta.k, 2, StabilityVariant::cyclic(2));
        const std::size_t V = inst.vertex_count();
        if (V > 20) {
            std::cerr << "instance too large for the exhaustive coloring sweep\n";
            return kExitBudget;
        }
        const std::uint64_t total = std::uint64_t{1} << V;
        std::uint64_t extracted = 0;
        for (std::uint64_t bits = 0; bits < total; ++bits) {
            Coloring c;
            c.t = 2;
            for (std::size_t i = 0; i < V; ++i) c.colors.push_back(1 + ((bits >> i) & 1));
            auto w = schrijver_witness(ta.n, ta.k, c);
            SetMask seen = 0;
            for (const auto& v : w.vertices) {
                if ((seen & v.mask()) != 0) throw invariant_violation("witness overlap");
                seen |= v.mask();
            }
            ++extracted;
        }
        std::cout << extracted << "/" << total << " witnesses extracted\n";
        return extracted == total ? 0 : kExitInvariant;
    }

    const auto variant = StabilityVariant::almost(2);
    auto inst = KneserInstance::make(ta.n, ta.k, ta.p, variant);
    Coloring col;
    int colors = 0;
    if (ta.coloring == "erdos") {
        col = erdos_coloring(inst);
        colors = col.t;
    } else if (ta.coloring.rfind("constant:", 0) == 0) {
        const int value = std::stoi(ta.coloring.substr(9));
        colors = value;
        col = Coloring::constant(inst.vertex_count(), value, value);
    } else {
        std::cerr << "unknown coloring: " << ta.coloring << "\n";
        return kExitInvalidArgs;
    }

    TuckerParams params(ta.p, ta.n, ta.k, colors);
    ChainSampler sampler;
    sampler.exhaustive = !ta.force_sampled && ta.n <= 8;
    sampler.samples = ta.samples;
    sampler.seed = ta.seed;
    auto rep = check_zp_properties(params, inst, col, sampler);

    const bool conclusion = zp_tucker_conclusion(params);
    // With a proper coloring every property must hold. When the color budget
    // is below the Tucker bound, a high-level violation must exist and
    // exhaustive search must surface it.
    const bool expect_violation = !conclusion;
    bool alarm = !rep.equivariance_ok || !rep.low_level_ok;
    if (expect_violation && sampler.exhaustive && rep.high_level_ok) alarm = true;
    if (!expect_violation && !rep.high_level_ok) alarm = true;

    if (ta.format == "json") {
        json j = to_json(rep);
        j["p"] = ta.p;
        j["n"] = ta.n;
        j["k"] = ta.k;
        j["colors"] = colors;
        j["seed"] = ta.seed;
        j["exhaustive"] = sampler.exhaustive;
        j["tucker_conclusion"] = conclusion;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "p=" << ta.p << " n=" << ta.n << " k=" << ta.k << " colors=" << colors
                  << " coloring=" << ta.coloring << " seed=" << ta.seed
                  << (sampler.exhaustive ? " exhaustive" : " sampled") << "\n";
        std::cout << "equivariance: " << (rep.equivariance_ok ? "pass" : "FAIL") << " ("
                  << rep.vectors_checked << " vectors)\n";
        std::cout << "low-level chains: " << (rep.low_level_ok ? "pass" : "FAIL") << " ("
                  << rep.pairs_checked << " pairs)\n";
        std::cout << "high-level chains: " << (rep.high_level_ok ? "no violation" : "violation")
                  << " (" << rep.chains_checked << " candidates)\n";
        if (rep.violation) {
            std::cout << "violating chain:";
            for (const auto& link : rep.violation->links) std::cout << " " << link.to_string();
            std::cout << "\n";
        }
        if (rep.witness) {
            std::cout << "disjoint monochromatic vertices (color " << *rep.witness->color << "):";
            for (const auto& v : rep.witness->vertices) std::cout << " " << v.to_string();
            std::cout << "\n";
        }
    }
    return alarm ? kExitInvariant : 0;
}

struct IlpArgs {
    CommonArgs common;
    int t = 1;
    std::string output;
};

int cmd_export_ilp(const IlpArgs& ia) {
    auto variant = parse_variant(ia.common.variant, ia.common.s);
    auto inst = KneserInstance::make(ia.common.n, ia.common.k, ia.common.r, variant);
    std::ofstream out(ia.output);
    if (!out) {
        std::cerr << "cannot open " << ia.output << " for writing\n";
        return kExitIo;
    }
    try {
        auto stats = export_ilp(inst, ia.t, out, budget_from_env(ia.common.budget));
        out.flush();
        if (!out) {
            std::cerr << "write failure on " << ia.output << "\n";
            return kExitIo;
        }
        std::cout << "variables=" << stats.variables << " assignment_rows=" << stats.assignment_rows
                  << " packing_rows=" << stats.packing_rows << " edges=" << stats.edges << "\n";
    } catch (const solve_budget_error&) {
        std::cerr << "edge enumeration exceeded budget\n";
        return kExitBudget;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"almost-stable Kneser hypergraph toolkit"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (0 = library default)");

    CommonArgs enum_args;
    auto* enum_cmd = app.add_subcommand("enumerate", "list stable k-subsets in colex order");
    add_instance_flags(enum_cmd, enum_args, false);

    CommonArgs chi_args;
    auto* chi_cmd = app.add_subcommand("chi", "exact chromatic number");
    add_instance_flags(chi_cmd, chi_args, true);

    TableArgs table_args;
    table_args.common.variant = "cyclic";
    table_args.common.s = 0;  // 0 = use r
    auto* table_cmd = app.add_subcommand("verify-table", "chi vs formula sweeps");
    table_cmd->add_option("--rows", table_args.rows, "paper|all")
        ->check(CLI::IsMember({"paper", "all"}));
    table_cmd->add_option("-k,--k", table_args.common.k, "subset size (single-row mode)");
    table_cmd->add_option("-r,--r", table_args.common.r, "uniformity (single-row mode)");
    table_cmd->add_option("--n-max", table_args.n_max, "largest n (single-row mode)");
    table_cmd->add_option("-s,--s", table_args.common.s, "stability gap (default: r)");
    table_cmd->add_option("--variant", table_args.common.variant, "almost|cyclic|unrestricted");
    table_cmd->add_option("--format", table_args.common.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    table_cmd->add_option("--max-vertices", table_args.common.budget.max_vertices, "vertex budget");
    table_cmd->add_option("--max-nodes", table_args.common.budget.max_nodes, "node budget");
    table_cmd->add_option("--wall-ms", table_args.common.budget.wall_ms, "wall budget (ms)");

    TuckerArgs tucker_args;
    auto* tucker_cmd = app.add_subcommand("tucker", "lambda-map property suites");
    tucker_cmd->add_option("-p,--p", tucker_args.p, "prime group order")->required();
    tucker_cmd->add_option("-n,--n", tucker_args.n, "ground set size")->required();
    tucker_cmd->add_option("-k,--k", tucker_args.k, "subset size")->required();
    tucker_cmd->add_option("--coloring", tucker_args.coloring,
                           "erdos | constant:<c> | all-2-colorings");
    tucker_cmd->add_option("--seed", tucker_args.seed, "sampling seed");
    tucker_cmd->add_option("--samples", tucker_args.samples, "sampled chain count");
    tucker_cmd->add_flag("--sampled", tucker_args.force_sampled, "force sampled mode");
    tucker_cmd->add_option("--format", tucker_args.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    IlpArgs ilp_args;
    auto* ilp_cmd = app.add_subcommand("export-ilp", "write t-coloring feasibility LP");
    add_instance_flags(ilp_cmd, ilp_args.common, true);
    ilp_cmd->add_option("-t,--t", ilp_args.t, "color count")->required();
    ilp_cmd->add_option("-o,--output", ilp_args.output, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalidArgs;
    }

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif

    try {
        if (enum_cmd->parsed()) return cmd_enumerate(enum_args);
        if (chi_cmd->parsed()) return cmd_chi(chi_args);
        if (table_cmd->parsed()) return cmd_verify_table(table_args);
        if (tucker_cmd->parsed()) return cmd_tucker(tucker_args);
        if (ilp_cmd->parsed()) return cmd_export_ilp(ilp_args);
    } catch (const invariant_violation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const solve_budget_error&) {
        std::cerr << "budget exhausted\n";
        return kExitBudget;
    } catch (const budget_error& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kExitInvalidArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
