#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "helpers.hpp"
#include "uusc/generators.hpp"
#include "uusc/io.hpp"

using namespace uusc;
using uusc::testing::make_inst;

TEST_CASE("instance JSON round-trip is structurally identical") {
    const auto inst = make_inst(6, 2, 4, {{0, 1, 2, 3}, {2, 3, 4}}, true, true);
    const auto back = instance_from_json(instance_to_json(inst));
    CHECK(back.n == inst.n);
    CHECK(back.p == inst.p);
    CHECK(back.k == inst.k);
    CHECK(back.all_p_sets_implicit == inst.all_p_sets_implicit);
    CHECK(back.closure_enabled == inst.closure_enabled);
    CHECK(back.explicit_sets == inst.explicit_sets);
}

TEST_CASE("instance file round-trip") {
    const auto inst = gen_random(2, 4, 10, 1.0, 3);
    const std::string path = "io_roundtrip_test.json";
    write_instance_file(path, inst);
    const auto back = read_instance_file(path);
    CHECK(back.explicit_sets == inst.explicit_sets);
    CHECK(back.n == inst.n);
    std::remove(path.c_str());
}

TEST_CASE("malformed and missing files raise the right errors") {
    const std::string path = "io_malformed_test.json";
    std::ofstream(path) << "{not json";
    CHECK_THROWS_AS((void)read_instance_file(path), InvalidParams);
    std::ofstream(path) << "{\"n\": 4}"; // missing keys
    CHECK_THROWS_AS((void)read_instance_file(path), InvalidParams);
    std::remove(path.c_str());
    CHECK_THROWS_AS((void)read_instance_file("does_not_exist.json"), Error);
}

TEST_CASE("packing JSON maps element lists back onto available sets") {
    const auto inst = make_inst(8, 2, 4, {{0, 1, 2, 3}, {4, 5, 6, 7}}, true, true);
    Packing pack{{make_explicit_handle(0, {0, 1, 2, 3}), make_implicit_handle({4, 5}),
                  make_closure_handle(1, {4, 5, 6})}};
    const auto back = packing_from_json(inst, packing_to_json(pack));
    REQUIRE(back.size() == 3);
    CHECK(back.sets[0].kind == SetKind::Explicit);
    CHECK(back.sets[0].elems == std::vector<int>{0, 1, 2, 3});
    CHECK(back.sets[1].kind == SetKind::ImplicitP);
    CHECK(back.sets[2].kind == SetKind::ClosureSubset);
    CHECK(back.sets[2].elems == std::vector<int>{4, 5, 6});

    // an unavailable set is rejected
    nlohmann::json bad;
    bad["sets"] = {{0, 1, 4}};
    CHECK_THROWS_AS((void)packing_from_json(inst, bad), InvalidParams);
}

TEST_CASE("report JSON carries the optional fields only when present") {
    RunReport rep;
    rep.algorithm = "a2";
    rep.cover_size = 5;
    rep.objective_trace = {4, 8};
    rep.phase_sets[4] = 2;
    const auto j1 = report_to_json(rep);
    CHECK_FALSE(j1.contains("optimum"));
    CHECK(j1["phase_sets"]["4"] == 2);
    rep.optimum = 4;
    rep.ratio = 1.25;
    const auto j2 = report_to_json(rep);
    CHECK(j2["optimum"] == 4);
    CHECK(j2["ratio"] == 1.25);
}
