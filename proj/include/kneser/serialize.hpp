#pragma once

#include <json.hpp>

#include "kneser/solver.hpp"
#include "kneser/tucker.hpp"

namespace kneser {

nlohmann::json to_json(const KSubset& s);
nlohmann::json to_json(const WitnessEdge& e);
nlohmann::json to_json(const SolveReport& r);
nlohmann::json to_json(const TableRow& row);
nlohmann::json to_json(const Chain& chain);
nlohmann::json to_json(const ZpSuiteReport& rep);

std::string csv_header_solve_report();
std::string csv_row(const SolveReport& r);

}  // namespace kneser
