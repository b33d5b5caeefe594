#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "uusc/generators.hpp"
#include "uusc/oracle.hpp"
#include "uusc/solvers.hpp"
#include "uusc/theory/factor_revealing.hpp"
#include "uusc/theory/transform.hpp"

namespace py = pybind11;
using namespace uusc;

namespace {

std::vector<std::vector<int>> to_lists(const std::vector<SetHandle>& sets) {
    std::vector<std::vector<int>> out;
    out.reserve(sets.size());
    for (const auto& h : sets) out.push_back(h.elems);
    return out;
}

// Maps raw element lists onto available sets of the instance.
std::vector<SetHandle> to_handles(const Instance& inst,
                                  const std::vector<std::vector<int>>& raw) {
    std::vector<std::vector<int>> canon;
    for (const auto& s : inst.explicit_sets) {
        auto sorted = s;
        std::sort(sorted.begin(), sorted.end());
        canon.push_back(std::move(sorted));
    }
    std::vector<SetHandle> out;
    for (auto elems : raw) {
        std::sort(elems.begin(), elems.end());
        auto it = std::find(canon.begin(), canon.end(), elems);
        if (it != canon.end()) {
            out.push_back(make_explicit_handle(static_cast<int>(it - canon.begin()), elems));
        } else if (inst.all_p_sets_implicit && static_cast<int>(elems.size()) == inst.p) {
            out.push_back(make_implicit_handle(elems));
        } else {
            throw InvalidParams("set is not available in the instance");
        }
    }
    return out;
}

py::dict report_dict(const RunReport& r) {
    py::dict d;
    d["algorithm"] = r.algorithm;
    d["cover_size"] = r.cover_size;
    d["objective_trace"] = r.objective_trace;
    d["iterations"] = r.iterations;
    d["phase_sets"] = r.phase_sets;
    d["wall_seconds"] = r.wall_seconds;
    d["optimum"] = r.optimum ? py::object(py::cast(*r.optimum)) : py::none();
    d["ratio"] = r.ratio ? py::object(py::cast(*r.ratio)) : py::none();
    d["budget_fallback_used"] = r.budget_fallback_used;
    d["iteration_cap_hit"] = r.iteration_cap_hit;
    return d;
}

py::dict solve_result_dict(const SolveResult& res) {
    py::dict d;
    d["cover"] = to_lists(res.cover.sets);
    d["report"] = report_dict(res.report);
    return d;
}

} // namespace

PYBIND11_MODULE(_uusc, mod) {
    mod.doc() = "(p,k)-uniform unweighted set cover solvers and LP certificates";

    py::class_<Instance>(mod, "Instance")
        .def(py::init([](int n, int p, int k, std::vector<std::vector<int>> sets,
                         bool all_p_sets_implicit, bool closure) {
                 Instance inst;
                 inst.n = n;
                 inst.p = p;
                 inst.k = k;
                 inst.explicit_sets = std::move(sets);
                 inst.all_p_sets_implicit = all_p_sets_implicit;
                 inst.closure_enabled = closure;
                 return inst;
             }),
             py::arg("n"), py::arg("p"), py::arg("k"),
             py::arg("sets") = std::vector<std::vector<int>>{},
             py::arg("all_p_sets_implicit") = true, py::arg("closure") = false)
        .def_readwrite("n", &Instance::n)
        .def_readwrite("p", &Instance::p)
        .def_readwrite("k", &Instance::k)
        .def_readwrite("sets", &Instance::explicit_sets)
        .def_readwrite("all_p_sets_implicit", &Instance::all_p_sets_implicit)
        .def_readwrite("closure", &Instance::closure_enabled);

    mod.def("validate", [](const Instance& inst) { return validate_instance(inst).violations; },
            py::arg("instance"));
    mod.def("canonicalized", &canonicalized, py::arg("instance"));

    mod.def(
        "greedy",
        [](const Instance& inst) { return solve_result_dict(greedy_cover(canonicalized(inst))); },
        py::arg("instance"));
    mod.def(
        "solve_a1",
        [](const Instance& inst, int swap_s, std::uint64_t seed) {
            A1Config cfg;
            cfg.swap.s = swap_s;
            cfg.seed = seed;
            return solve_result_dict(solve_a1(canonicalized(inst), cfg));
        },
        py::arg("instance"), py::arg("swap_s") = 2, py::arg("seed") = 0);
    mod.def(
        "solve_a2",
        [](const Instance& inst, int t, long long insertion_budget, std::uint64_t seed) {
            A2Config cfg;
            cfg.t = t;
            cfg.insertion_budget = insertion_budget;
            cfg.seed = seed;
            return solve_result_dict(solve_a2(canonicalized(inst), cfg));
        },
        py::arg("instance"), py::arg("t") = 3, py::arg("insertion_budget") = 5000,
        py::arg("seed") = 0);
    mod.def(
        "seed_a2",
        [](const Instance& inst, const std::vector<std::vector<int>>& packing, int t,
           long long insertion_budget) {
            A2Config cfg;
            cfg.t = t;
            cfg.insertion_budget = insertion_budget;
            const auto canon = canonicalized(inst);
            Packing pack{to_handles(canon, packing)};
            return solve_result_dict(seed_a2(canon, pack, cfg));
        },
        py::arg("instance"), py::arg("packing"), py::arg("t") = 3,
        py::arg("insertion_budget") = 5000);
    mod.def(
        "exact_min_cover",
        [](const Instance& inst) { return to_lists(exact_min_cover(canonicalized(inst)).sets); },
        py::arg("instance"));

    mod.def("gen_tight", [](int m) {
        auto fam = gen_tight(m);
        py::dict d;
        d["instance"] = fam.instance;
        d["opt_cover"] = to_lists(fam.opt_cover.sets);
        d["apx_packing"] = to_lists(fam.apx_packing.sets);
        d["m"] = fam.m;
        return d;
    }, py::arg("m"));
    mod.def("gen_random", &gen_random, py::arg("p"), py::arg("k"), py::arg("n"),
            py::arg("density"), py::arg("seed"));
    mod.def("gen_biclique", &gen_biclique, py::arg("left"), py::arg("right"), py::arg("edges"),
            py::arg("seed") = 0);

    mod.def(
        "transform_lemma1",
        [](const Instance& inst, const std::vector<std::vector<int>>& apx,
           const std::vector<std::vector<int>>& sol, int t) {
            const auto canon = canonicalized(inst);
            const auto res = theory::transform_lemma1(canon, Packing{to_handles(canon, apx)},
                                                      Cover{to_handles(canon, sol)}, t);
            py::dict d;
            d["instance"] = res.instance;
            d["apx"] = to_lists(res.apx.sets);
            d["apx_cover"] = to_lists(res.apx_cover.sets);
            d["sol"] = to_lists(res.sol.sets);
            return d;
        },
        py::arg("instance"), py::arg("apx"), py::arg("sol"), py::arg("t"));

    mod.def("rho", [](int p, int k) { return theory::to_string(theory::closed_form_rho(p, k)); },
            py::arg("p"), py::arg("k"));
    mod.def("verify_theory", [](int pmax, int kmax) {
        std::vector<py::dict> rows;
        for (int p = 1; p <= pmax; ++p)
            for (int k = p + 1; k <= kmax; ++k) {
                const auto v = theory::verify_pk(p, k);
                py::dict d;
                d["p"] = p;
                d["k"] = k;
                d["rho"] = theory::to_string(v.rho);
                d["ok"] = v.ok();
                rows.push_back(std::move(d));
            }
        for (const auto& [name, lp, value] :
             {std::tuple{"type_a", theory::typeA_certificate(), theory::Rational(35, 24)},
              std::tuple{"type_b", theory::typeB_certificate(), theory::Rational(7, 5)}}) {
            const auto rep = theory::check_certificate(lp.primal, lp.dual, lp.certificate);
            py::dict d;
            d["case"] = name;
            d["value"] = theory::to_string(value);
            d["ok"] = rep.all_ok() && rep.primal_objective == value;
            rows.push_back(std::move(d));
        }
        return rows;
    }, py::arg("pmax") = 9, py::arg("kmax") = 10);

    py::register_exception<InvalidParams>(mod, "InvalidParams", PyExc_ValueError);
    py::register_exception<InstanceTooLarge>(mod, "InstanceTooLarge", PyExc_ValueError);
    py::register_exception<PreconditionViolated>(mod, "PreconditionViolated", PyExc_ValueError);
    py::register_exception<InvalidSeedPacking>(mod, "InvalidSeedPacking", PyExc_ValueError);
}
