#include "kneser/serialize.hpp"

#include <sstream>

namespace kneser {

using nlohmann::json;

json to_json(const KSubset& s) {
    json arr = json::array();
    for (int e : s.elements) arr.push_back(e);
    return arr;
}

json to_json(const WitnessEdge& e) {
    json j;
    j["vertices"] = json::array();
    for (const auto& v : e.vertices) j["vertices"].push_back(to_json(v));
    if (e.color) j["color"] = *e.color;
    return j;
}

json to_json(const SolveReport& r) {
    json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["r"] = r.r;
    j["s"] = r.variant.s;
    j["variant"] = to_string(r.variant);
    if (r.chi)
        j["chi"] = *r.chi;
    else
        j["chi"] = nullptr;
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    j["nodes"] = r.nodes;
    j["ms"] = r.ms;
    return j;
}

json to_json(const TableRow& row) {
    json j = to_json(row.report);
    j["expected"] = row.expected;
    j["match"] = row.match;
    j["budget_exceeded"] = row.budget_exceeded;
    return j;
}

json to_json(const Chain& chain) {
    json arr = json::array();
    for (const auto& link : chain.links) arr.push_back(link.to_string());
    return arr;
}

json to_json(const ZpSuiteReport& rep) {
    json j;
    j["vectors_checked"] = rep.vectors_checked;
    j["pairs_checked"] = rep.pairs_checked;
    j["chains_checked"] = rep.chains_checked;
    j["equivariance_ok"] = rep.equivariance_ok;
    j["low_level_ok"] = rep.low_level_ok;
    j["high_level_ok"] = rep.high_level_ok;
    if (rep.violation) j["violation"] = to_json(*rep.violation);
    if (rep.witness) j["witness"] = to_json(*rep.witness);
    return j;
}

std::string csv_header_solve_report() { return "n,k,r,s,variant,chi,lower,upper,nodes,ms"; }

std::string csv_row(const SolveReport& r) {
    std::ostringstream os;
    os << r.n << ',' << r.k << ',' << r.r << ',' << r.variant.s << ',' << to_string(r.variant)
       << ',';
    if (r.chi)
        os << *r.chi;
    os << ',' << r.lower << ',' << r.upper << ',' << r.nodes << ',' << r.ms;
    return os.str();
}

}  // namespace kneser
