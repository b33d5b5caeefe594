#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "uusc/generators.hpp"
#include "uusc/io.hpp"
#include "uusc/oracle.hpp"
#include "uusc/solvers.hpp"
#include "uusc/theory/factor_revealing.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitOracleGuard = 3;
constexpr int kExitCertificate = 4;

struct SolveFlags {
    std::string algo = "greedy";
    std::string out;
    std::string seed_packing;
    std::uint64_t seed = 0;
    int swap_s = 2;
    int a2_t = 3;
    long long insertion_budget = 5000;
    bool with_oracle = false;
};

void emit(const std::string& out_path, const json& j) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw uusc::Error("cannot open output file: " + out_path);
    f << j.dump(2) << "\n";
}

uusc::SolveResult run_algorithm(const uusc::Instance& inst, const SolveFlags& flags) {
    if (flags.algo == "greedy") return uusc::greedy_cover(inst);
    if (flags.algo == "a1") {
        uusc::A1Config cfg;
        cfg.swap.s = flags.swap_s;
        cfg.seed = flags.seed;
        return uusc::solve_a1(inst, cfg);
    }
    if (flags.algo == "a2") {
        uusc::A2Config cfg;
        cfg.t = flags.a2_t;
        cfg.insertion_budget = flags.insertion_budget;
        cfg.seed = flags.seed;
        if (!flags.seed_packing.empty()) {
            auto pack = uusc::read_packing_file(inst, flags.seed_packing);
            return uusc::seed_a2(inst, pack, cfg);
        }
        return uusc::solve_a2(inst, cfg);
    }
    if (flags.algo == "exact") {
        if (inst.n > uusc::kMaxOracleElements)
            throw uusc::InstanceTooLarge("exact solver limited to n <= 24");
        const auto t0 = std::chrono::steady_clock::now();
        uusc::SolveResult res;
        res.cover = uusc::exact_min_cover(inst);
        res.report.algorithm = "exact";
        res.report.cover_size = res.cover.size();
        res.report.optimum = res.cover.size();
        res.report.ratio = 1.0;
        res.report.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return res;
    }
    throw uusc::InvalidParams("unknown algorithm: " + flags.algo);
}

int cmd_solve(const std::string& instance_path, const SolveFlags& flags) {
    auto inst = uusc::canonicalized(uusc::read_instance_file(instance_path));
    const auto report = uusc::validate_instance(inst);
    if (!report.ok()) {
        for (const auto& v : report.violations) std::cerr << "invalid instance: " << v << "\n";
        return kExitInvalid;
    }

    auto res = run_algorithm(inst, flags);
    if (flags.with_oracle && !res.report.optimum) {
        if (inst.n > uusc::kMaxOracleElements)
            throw uusc::InstanceTooLarge("--with-oracle limited to n <= 24");
        const int opt = uusc::exact_min_cover(inst).size();
        res.report.optimum = opt;
        res.report.ratio = static_cast<double>(res.report.cover_size) / opt;
    }
    if (!uusc::is_feasible_cover(inst, res.cover)) {
        std::cerr << "internal error: produced cover is infeasible\n";
        return kExitInvalid;
    }

    json out;
    out["instance"] = instance_path;
    out["config"] = {{"algo", flags.algo},
                     {"seed", flags.seed},
                     {"swap_s", flags.swap_s},
                     {"a2_t", flags.a2_t},
                     {"insertion_budget", flags.insertion_budget},
                     {"with_oracle", flags.with_oracle},
                     {"seed_packing", flags.seed_packing}};
    out["report"] = uusc::report_to_json(res.report);
    out["cover"] = uusc::cover_to_json(res.cover);
    emit(flags.out, out);
    std::cerr << flags.algo << ": cover size " << res.report.cover_size;
    if (res.report.optimum) std::cerr << ", optimum " << *res.report.optimum;
    std::cerr << "\n";
    return kExitOk;
}

std::string format_ratio(double r) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(6);
    os << r;
    return os.str();
}

int cmd_bench(const std::string& spec_path) {
    std::ifstream in(spec_path);
    if (!in) throw uusc::Error("cannot open bench spec: " + spec_path);
    json spec;
    try {
        in >> spec;
    } catch (const json::exception& e) {
        throw uusc::InvalidParams(std::string("malformed bench spec: ") + e.what());
    }

    struct NamedInstance {
        std::string name;
        uusc::Instance inst;
    };
    std::vector<NamedInstance> instances;
    for (const auto& item : spec.value("instances", json::array())) {
        if (item.is_string()) {
            instances.push_back({item.get<std::string>(),
                                 uusc::canonicalized(uusc::read_instance_file(item))});
        } else if (item.contains("path")) {
            const auto path = item.at("path").get<std::string>();
            instances.push_back({path, uusc::canonicalized(uusc::read_instance_file(path))});
        } else {
            const auto kind = item.value("kind", "");
            if (kind == "tight") {
                const int m = item.value("m", 1);
                instances.push_back({"tight(m=" + std::to_string(m) + ")",
                                     uusc::canonicalized(uusc::gen_tight(m).instance)});
            } else if (kind == "random") {
                const int p = item.value("p", 2), k = item.value("k", 4);
                const int n = item.value("n", 12);
                const double density = item.value("density", 1.0);
                const auto seed = item.value("seed", std::uint64_t{0});
                std::ostringstream name;
                name << "random(p=" << p << ",k=" << k << ",n=" << n << ",d=" << density
                     << ",seed=" << seed << ")";
                instances.push_back(
                    {name.str(), uusc::canonicalized(uusc::gen_random(p, k, n, density, seed))});
            } else {
                throw uusc::InvalidParams("unknown instance spec entry");
            }
        }
    }
    if (instances.empty()) throw uusc::InvalidParams("bench spec lists no instances");
    for (const auto& ni : instances) {
        const auto rep = uusc::validate_instance(ni.inst);
        if (!rep.ok())
            throw uusc::InvalidParams("invalid instance " + ni.name + ": " + rep.violations[0]);
    }

    std::vector<SolveFlags> algos;
    for (const auto& a : spec.value("algorithms", json::array())) {
        SolveFlags f;
        if (a.is_string()) {
            f.algo = a.get<std::string>();
        } else {
            f.algo = a.value("algo", "greedy");
            f.seed = a.value("seed", std::uint64_t{0});
            f.swap_s = a.value("swap_s", 2);
            f.a2_t = a.value("a2_t", 3);
            f.insertion_budget = a.value("insertion_budget", 5000LL);
        }
        algos.push_back(std::move(f));
    }
    if (algos.empty()) throw uusc::InvalidParams("bench spec lists no algorithms");

    const bool with_oracle = spec.value("with_oracle", false);
    const int reps = spec.value("repetitions", 1);
    if (reps < 1) throw uusc::InvalidParams("repetitions must be >= 1");
    if (with_oracle)
        for (const auto& ni : instances)
            if (ni.inst.n > uusc::kMaxOracleElements)
                throw uusc::InstanceTooLarge("oracle requires every instance to have n <= 24");

    struct Cell {
        size_t inst_idx, algo_idx;
        int rep;
        uusc::RunReport report;
    };
    std::vector<Cell> cells;
    for (size_t i = 0; i < instances.size(); ++i)
        for (size_t a = 0; a < algos.size(); ++a)
            for (int r = 0; r < reps; ++r) cells.push_back({i, a, r, {}});

    int threads = 1;
    if (const char* env = std::getenv("UUSC_THREADS")) threads = std::max(1, std::atoi(env));
    threads = std::min<int>(threads, static_cast<int>(cells.size()));

    std::vector<std::optional<int>> optima(instances.size());
    if (with_oracle)
        for (size_t i = 0; i < instances.size(); ++i)
            optima[i] = uusc::exact_min_cover(instances[i].inst).size();

    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t c = next.fetch_add(1); c < cells.size(); c = next.fetch_add(1)) {
            auto& cell = cells[c];
            auto res = run_algorithm(instances[cell.inst_idx].inst, algos[cell.algo_idx]);
            cell.report = std::move(res.report);
            if (optima[cell.inst_idx]) {
                cell.report.optimum = optima[cell.inst_idx];
                cell.report.ratio =
                    static_cast<double>(cell.report.cover_size) / *optima[cell.inst_idx];
            }
        }
    };
    {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // CSV excludes wall time so reruns are byte-identical.
    std::ostringstream csv;
    csv << "instance,algorithm,rep,n,cover_size,optimum,ratio,iterations\n";
    json rows = json::array();
    std::map<std::string, std::vector<double>> ratios_by_algo;
    for (const auto& cell : cells) {
        const auto& name = instances[cell.inst_idx].name;
        const auto& algo = algos[cell.algo_idx].algo;
        csv << name << "," << algo << "," << cell.rep << "," << instances[cell.inst_idx].inst.n
            << "," << cell.report.cover_size << ","
            << (cell.report.optimum ? std::to_string(*cell.report.optimum) : "") << ","
            << (cell.report.ratio ? format_ratio(*cell.report.ratio) : "") << ","
            << cell.report.iterations << "\n";
        json row = uusc::report_to_json(cell.report);
        row["instance"] = name;
        row["rep"] = cell.rep;
        rows.push_back(std::move(row));
        if (cell.report.ratio) ratios_by_algo[algo].push_back(*cell.report.ratio);
    }
    json aggregates = json::array();
    for (const auto& [algo, rs] : ratios_by_algo) {
        double mx = 0, sum = 0;
        for (double r : rs) {
            mx = std::max(mx, r);
            sum += r;
        }
        csv << "aggregate," << algo << ",,,,," << format_ratio(mx) << "/"
            << format_ratio(sum / static_cast<double>(rs.size())) << ",\n";
        aggregates.push_back({{"algorithm", algo},
                              {"max_ratio", mx},
                              {"mean_ratio", sum / static_cast<double>(rs.size())}});
    }

    const auto csv_out = spec.value("csv_out", "");
    if (csv_out.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream f(csv_out);
        if (!f) throw uusc::Error("cannot open output file: " + csv_out);
        f << csv.str();
    }
    const auto json_out = spec.value("json_out", "");
    if (!json_out.empty())
        emit(json_out, json{{"rows", rows}, {"aggregates", aggregates}});
    std::cerr << "bench: " << cells.size() << " cells on " << threads << " thread(s)\n";
    return kExitOk;
}

int cmd_gen(const std::string& kind, const std::string& out_path, int m, int p, int k, int n,
            double density, std::uint64_t seed, int left, int right, const std::string& edges,
            const std::string& seed_packing_out) {
    if (kind == "tight") {
        auto fam = uusc::gen_tight(m);
        emit(out_path, uusc::instance_to_json(fam.instance));
        if (!seed_packing_out.empty())
            uusc::write_packing_file(seed_packing_out, fam.apx_packing);
        return kExitOk;
    }
    if (kind == "random") {
        emit(out_path, uusc::instance_to_json(uusc::gen_random(p, k, n, density, seed)));
        return kExitOk;
    }
    if (kind == "biclique") {
        std::vector<std::pair<int, int>> edge_list;
        std::stringstream ss(edges);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            const auto dash = tok.find('-');
            if (dash == std::string::npos)
                throw uusc::InvalidParams("edge must look like u-v: " + tok);
            edge_list.emplace_back(std::stoi(tok.substr(0, dash)),
                                   std::stoi(tok.substr(dash + 1)));
        }
        emit(out_path, uusc::instance_to_json(uusc::gen_biclique(left, right, edge_list, seed)));
        return kExitOk;
    }
    throw uusc::InvalidParams("unknown generator kind: " + kind);
}

int cmd_verify_theory(int pmax, int kmax, const std::string& out_path, bool corrupt_dual) {
    using namespace uusc::theory;
    if (kmax < 2 || pmax >= kmax) throw uusc::InvalidParams("require 2 <= kmax and pmax < kmax");

    bool all_ok = true;
    json results = json::array();
    std::cout << "p\tk\trho\tstatus\n";
    for (int p = 1; p <= pmax; ++p) {
        for (int k = p + 1; k <= kmax; ++k) {
            auto primal = build_program_p(p, k);
            auto dual = build_program_d(p, k);
            auto cert = pk_certificate(p, k);
            if (corrupt_dual && p == 1 && k == 2)
                cert.dual.begin()->second += 1;
            const auto rho = closed_form_rho(p, k);
            const auto rep = check_certificate(primal, dual, cert);
            const bool pair_ok = is_dual_pair(primal, dual);
            const bool ok = rep.all_ok() && pair_ok && rep.primal_objective == rho &&
                            rep.dual_objective == rho;
            all_ok = all_ok && ok;
            std::cout << p << "\t" << k << "\t" << to_string(rho) << "\t"
                      << (ok ? "pass" : "FAIL") << "\n";
            if (!ok) {
                std::cerr << "certificate failure at (p,k) = (" << p << "," << k << ")\n";
                if (!pair_ok) std::cerr << "  programs are not a dual pair\n";
                if (rep.primal_objective != rho || rep.dual_objective != rho)
                    std::cerr << "  objective differs from closed form " << to_string(rho)
                              << "\n";
                for (const auto& viol : rep.violations) std::cerr << "  " << viol << "\n";
            }
            results.push_back({{"p", p},
                               {"k", k},
                               {"rho", to_string(rho)},
                               {"ok", ok}});
        }
    }

    for (const auto& [name, lp, value] :
         {std::tuple{"type_a", typeA_certificate(), Rational(35, 24)},
          std::tuple{"type_b", typeB_certificate(), Rational(7, 5)}}) {
        const auto rep = check_certificate(lp.primal, lp.dual, lp.certificate);
        const bool ok = rep.all_ok() && is_dual_pair(lp.primal, lp.dual) &&
                        rep.primal_objective == value;
        all_ok = all_ok && ok;
        std::cout << name << "\tvalue " << to_string(value) << "\t" << (ok ? "pass" : "FAIL")
                  << "\n";
        if (!ok) {
            std::cerr << "certificate failure in " << name << "\n";
            for (const auto& viol : rep.violations) std::cerr << "  " << viol << "\n";
        }
        results.push_back({{"case", name}, {"value", to_string(value)}, {"ok", ok}});
    }

    if (!out_path.empty()) emit(out_path, json{{"results", results}, {"all_ok", all_ok}});
    return all_ok ? kExitOk : kExitCertificate;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"(p,k)-uniform unweighted set cover toolkit"};
    app.require_subcommand(1);

    std::string instance_path;
    SolveFlags solve_flags;
    auto* solve = app.add_subcommand("solve", "solve one instance");
    solve->add_option("instance", instance_path, "instance JSON file")->required();
    solve->add_option("--algo", solve_flags.algo, "greedy|a1|a2|exact");
    solve->add_option("--out", solve_flags.out, "report output path (default stdout)");
    solve->add_option("--seed", solve_flags.seed, "RNG seed");
    solve->add_option("--swap-s", solve_flags.swap_s, "A1 swap radius");
    solve->add_option("--a2-t", solve_flags.a2_t, "A2 removal radius");
    solve->add_option("--insertion-budget", solve_flags.insertion_budget,
                      "node budget per insertion search");
    solve->add_flag("--with-oracle", solve_flags.with_oracle, "attach exact optimum (n <= 24)");
    solve->add_option("--seed-packing", solve_flags.seed_packing,
                      "starting packing JSON for a2");

    std::string bench_spec;
    auto* bench = app.add_subcommand("bench", "run a benchmark spec");
    bench->add_option("spec", bench_spec, "bench spec JSON file")->required();

    std::string gen_kind = "random", gen_out, gen_edges, gen_seed_packing;
    int gen_m = 1, gen_p = 2, gen_k = 4, gen_n = 12, gen_left = 2, gen_right = 2;
    double gen_density = 1.0;
    std::uint64_t gen_seed = 0;
    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("--kind", gen_kind, "tight|random|biclique")->required();
    gen->add_option("--out", gen_out, "instance output path (default stdout)");
    gen->add_option("--m", gen_m, "tight-family scale");
    gen->add_option("--p", gen_p, "minimum set size");
    gen->add_option("--k", gen_k, "maximum set size");
    gen->add_option("--n", gen_n, "universe size");
    gen->add_option("--density", gen_density, "sets per element");
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_option("--left", gen_left, "left side size");
    gen->add_option("--right", gen_right, "right side size");
    gen->add_option("--edges", gen_edges, "comma-separated u-v pairs");
    gen->add_option("--with-seed-packing", gen_seed_packing,
                    "also write the tight-family packing JSON here");

    int pmax = 9, kmax = 10;
    std::string vt_out;
    bool corrupt_dual = false;
    auto* vt = app.add_subcommand("verify-theory", "check the LP certificates");
    vt->add_option("--pmax", pmax, "largest p");
    vt->add_option("--kmax", kmax, "largest k");
    vt->add_option("--out", vt_out, "JSON output path");
    vt->add_flag("--inject-corrupt-dual", corrupt_dual,
                 "test hook: corrupt one dual value")
        ->group("");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(instance_path, solve_flags);
        if (bench->parsed()) return cmd_bench(bench_spec);
        if (gen->parsed())
            return cmd_gen(gen_kind, gen_out, gen_m, gen_p, gen_k, gen_n, gen_density, gen_seed,
                           gen_left, gen_right, gen_edges, gen_seed_packing);
        if (vt->parsed()) return cmd_verify_theory(pmax, kmax, vt_out, corrupt_dual);
    } catch (const uusc::InstanceTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOracleGuard;
    } catch (const uusc::InvalidParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const uusc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}
