#pragma once
#include <string>

#include "uusc/instance.hpp"
#include "uusc/solvers.hpp"

#include <json.hpp>

namespace uusc {

// Instance JSON: {"n", "p", "k", "all_p_sets_implicit", "closure", "sets"}.
nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);

// Packing JSON: {"sets": [[int,...],...]}. Reading maps each element list
// back onto an available set of `inst` (explicit first, then implicit
// p-set, then closure subset); unavailable sets raise InvalidParams.
nlohmann::json packing_to_json(const Packing& pack);
Packing packing_from_json(const Instance& inst, const nlohmann::json& j);

nlohmann::json report_to_json(const RunReport& rep);
nlohmann::json cover_to_json(const Cover& cov);

Instance read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const Instance& inst);
Packing read_packing_file(const Instance& inst, const std::string& path);
void write_packing_file(const std::string& path, const Packing& pack);

} // namespace uusc
