#include "uusc/io.hpp"

#include <algorithm>
#include <fstream>

namespace uusc {

using nlohmann::json;

json instance_to_json(const Instance& inst) {
    json j;
    j["n"] = inst.n;
    j["p"] = inst.p;
    j["k"] = inst.k;
    j["all_p_sets_implicit"] = inst.all_p_sets_implicit;
    j["closure"] = inst.closure_enabled;
    json sets = json::array();
    for (const auto& s : inst.explicit_sets) {
        auto sorted = s;
        std::sort(sorted.begin(), sorted.end());
        sets.push_back(sorted);
    }
    j["sets"] = std::move(sets);
    return j;
}

Instance instance_from_json(const json& j) {
    Instance inst;
    try {
        inst.n = j.at("n").get<int>();
        inst.p = j.at("p").get<int>();
        inst.k = j.at("k").get<int>();
        inst.all_p_sets_implicit = j.at("all_p_sets_implicit").get<bool>();
        inst.closure_enabled = j.at("closure").get<bool>();
        inst.explicit_sets = j.at("sets").get<std::vector<std::vector<int>>>();
    } catch (const json::exception& e) {
        throw InvalidParams(std::string("malformed instance JSON: ") + e.what());
    }
    return inst;
}

json packing_to_json(const Packing& pack) {
    json sets = json::array();
    for (const auto& h : pack.sets) sets.push_back(h.elems);
    return json{{"sets", std::move(sets)}};
}

Packing packing_from_json(const Instance& inst, const json& j) {
    std::vector<std::vector<int>> raw;
    try {
        raw = j.at("sets").get<std::vector<std::vector<int>>>();
    } catch (const json::exception& e) {
        throw InvalidParams(std::string("malformed packing JSON: ") + e.what());
    }

    std::vector<std::vector<int>> canon;
    canon.reserve(inst.explicit_sets.size());
    for (const auto& s : inst.explicit_sets) {
        auto sorted = s;
        std::sort(sorted.begin(), sorted.end());
        canon.push_back(std::move(sorted));
    }

    Packing pack;
    for (auto& elems : raw) {
        std::sort(elems.begin(), elems.end());
        auto it = std::find(canon.begin(), canon.end(), elems);
        if (it != canon.end()) {
            pack.sets.push_back(
                make_explicit_handle(static_cast<int>(it - canon.begin()), elems));
            continue;
        }
        if (inst.all_p_sets_implicit && static_cast<int>(elems.size()) == inst.p) {
            pack.sets.push_back(make_implicit_handle(elems));
            continue;
        }
        if (inst.closure_enabled && static_cast<int>(elems.size()) >= inst.p) {
            auto parent = std::find_if(canon.begin(), canon.end(), [&elems](const auto& c) {
                return std::includes(c.begin(), c.end(), elems.begin(), elems.end());
            });
            if (parent != canon.end()) {
                pack.sets.push_back(
                    make_closure_handle(static_cast<int>(parent - canon.begin()), elems));
                continue;
            }
        }
        throw InvalidParams("packing set is not available in the instance");
    }
    return pack;
}

json report_to_json(const RunReport& rep) {
    json j;
    j["algorithm"] = rep.algorithm;
    j["cover_size"] = rep.cover_size;
    j["objective_trace"] = rep.objective_trace;
    j["iterations"] = rep.iterations;
    json phases = json::object();
    for (const auto& [i, t] : rep.phase_sets) phases[std::to_string(i)] = t;
    j["phase_sets"] = std::move(phases);
    j["wall_seconds"] = rep.wall_seconds;
    if (rep.optimum) j["optimum"] = *rep.optimum;
    if (rep.ratio) j["ratio"] = *rep.ratio;
    j["budget_fallback_used"] = rep.budget_fallback_used;
    j["iteration_cap_hit"] = rep.iteration_cap_hit;
    return j;
}

json cover_to_json(const Cover& cov) {
    json sets = json::array();
    for (const auto& h : cov.sets) sets.push_back(h.elems);
    return json{{"sets", std::move(sets)}};
}

Instance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open instance file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InvalidParams(std::string("malformed instance JSON: ") + e.what());
    }
    return instance_from_json(j);
}

void write_instance_file(const std::string& path, const Instance& inst) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file: " + path);
    out << instance_to_json(inst).dump(2) << "\n";
}

Packing read_packing_file(const Instance& inst, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open packing file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InvalidParams(std::string("malformed packing JSON: ") + e.what());
    }
    return packing_from_json(inst, j);
}

void write_packing_file(const std::string& path, const Packing& pack) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file: " + path);
    out << packing_to_json(pack).dump(2) << "\n";
}

} // namespace uusc
