#pragma once

#include "forge/casebook.hpp"
#include "forge/lattice.hpp"

#include <json.hpp>

#include <string>

namespace forge {

/// Lattice record {rank, gram: row-major integer array}. Entries that fit
/// an int64 are emitted as JSON numbers, anything larger as a decimal
/// string; both are accepted on input, so round trips are bit-exact.
nlohmann::ordered_json lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const nlohmann::json& j);

void save_lattice(const std::string& path, const Lattice& l);
Lattice load_lattice(const std::string& path);

nlohmann::ordered_json fqf_to_json(const FQF& f);

nlohmann::ordered_json case_report_to_json(const CaseReport& r);

}  // namespace forge
