#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "uusc/generators.hpp"

using namespace uusc;
using uusc::testing::brute_max_packing_weight;
using uusc::testing::brute_min_cover_size;
using uusc::testing::make_inst;

TEST_CASE("exact_min_cover: one explicit set covering everything") {
    const auto inst = make_inst(4, 2, 4, {{0, 1, 2, 3}});
    const auto cover = exact_min_cover(inst);
    CHECK(cover.size() == 1);
    CHECK(is_feasible_cover(inst, cover));
}

TEST_CASE("exact_min_cover: n=6 demo instance needs two sets") {
    const auto inst = make_inst(6, 2, 4, {{0, 1, 2, 3}, {2, 3, 4}});
    const auto cover = exact_min_cover(inst);
    CHECK(cover.size() == 2);
    CHECK(is_feasible_cover(inst, cover));
    CHECK(cover.size() == brute_min_cover_size(inst));
}

TEST_CASE("exact_min_cover rejects n beyond the DP range") {
    CHECK_THROWS_AS((void)exact_min_cover(gen_tight(1).instance), InstanceTooLarge);
}

TEST_CASE("exact_min_cover matches full enumeration on random small instances") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 3); // candidate count stays small
        std::vector<std::vector<int>> sets;
        const int num_sets = static_cast<int>(rng() % 3);
        for (int s = 0; s < num_sets; ++s) {
            std::vector<int> set;
            for (int e = 0; e < n; ++e)
                if (rng() % 2) set.push_back(e);
            if (set.size() >= 3 && set.size() <= 4) sets.push_back(std::move(set));
        }
        const auto inst = make_inst(n, 2, 4, sets);
        const auto cover = exact_min_cover(inst);
        CHECK(is_feasible_cover(inst, cover));
        CHECK(cover.size() == brute_min_cover_size(inst));
    }
}

TEST_CASE("exact_min_cover is deterministic") {
    const auto inst = make_inst(8, 2, 4, {{0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 4, 5}, {2, 3, 6, 7}});
    const auto a = exact_min_cover(inst);
    const auto b = exact_min_cover(inst);
    REQUIRE(a.size() == b.size());
    for (int i = 0; i < a.size(); ++i) CHECK(a.sets[static_cast<size_t>(i)] == b.sets[static_cast<size_t>(i)]);
}

TEST_CASE("exact_max_packing: two disjoint 4-sets out of three candidates") {
    const auto inst = make_inst(8, 2, 4, {{0, 1, 2, 3}, {2, 3, 4, 5}, {4, 5, 6, 7}});
    ElemSet all(8);
    all.set();
    const auto res = exact_max_packing(inst, {4}, all, PackingWeightScheme::cardinality());
    CHECK(res.weight == 2);
    REQUIRE(res.packing.size() == 2);
    CHECK(res.packing.sets[0].elems == std::vector<int>{0, 1, 2, 3});
    CHECK(res.packing.sets[1].elems == std::vector<int>{4, 5, 6, 7});
}

TEST_CASE("exact_max_packing: empty free region and single candidate") {
    const auto inst = make_inst(8, 2, 4, {{0, 1, 2}});
    ElemSet none(8);
    const auto empty = exact_max_packing(inst, {3, 4}, none, PackingWeightScheme::a2());
    CHECK(empty.weight == 0);
    CHECK(empty.packing.size() == 0);

    ElemSet all(8);
    all.set();
    const auto one = exact_max_packing(inst, {3}, all, PackingWeightScheme::a2());
    CHECK(one.weight == 1);
    REQUIRE(one.packing.size() == 1);
    CHECK(one.packing.sets[0].elems == std::vector<int>{0, 1, 2});
}

TEST_CASE("exact_max_packing matches full enumeration with both weight schemes") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 6 + static_cast<int>(rng() % 3);
        std::vector<std::vector<int>> sets;
        for (int s = 0; s < 5; ++s) {
            std::vector<int> set;
            for (int e = 0; e < n; ++e)
                if (rng() % 3 == 0) set.push_back(e);
            if (set.size() >= 3 && set.size() <= 4) sets.push_back(std::move(set));
        }
        const auto inst = make_inst(n, 2, 4, sets, false);
        ElemSet free(static_cast<size_t>(n));
        for (int e = 0; e < n; ++e)
            if (rng() % 4 != 0) free.set(static_cast<size_t>(e));
        for (const auto& scheme :
             {PackingWeightScheme::cardinality(), PackingWeightScheme::a2()}) {
            const auto res = exact_max_packing(inst, {3, 4}, free, scheme);
            CHECK(is_disjoint(res.packing));
            CHECK(res.weight == brute_max_packing_weight(inst, {3, 4}, free, scheme));
        }
    }
}

TEST_CASE("exact_max_packing weight is monotone in the free region") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 8;
        std::vector<std::vector<int>> sets;
        for (int s = 0; s < 4; ++s) {
            std::vector<int> set;
            for (int e = 0; e < n; ++e)
                if (rng() % 2) set.push_back(e);
            if (set.size() >= 3 && set.size() <= 4) sets.push_back(std::move(set));
        }
        const auto inst = make_inst(n, 2, 4, sets, false);
        ElemSet small(8), large(8);
        for (int e = 0; e < n; ++e) {
            const int r = static_cast<int>(rng() % 3);
            if (r == 0) small.set(static_cast<size_t>(e));
            if (r <= 1) large.set(static_cast<size_t>(e));
        }
        large |= small;
        const auto w_small =
            exact_max_packing(inst, {3, 4}, small, PackingWeightScheme::a2()).weight;
        const auto w_large =
            exact_max_packing(inst, {3, 4}, large, PackingWeightScheme::a2()).weight;
        CHECK(w_small <= w_large);
    }
}

TEST_CASE("exact_max_packing honors the node budget") {
    const auto inst = make_inst(20, 2, 4, {});
    ElemSet all(20);
    all.set();
    // All C(20,2) implicit pairs as candidates with a tiny budget.
    CHECK_THROWS_AS(
        (void)exact_max_packing(inst, {2}, all, PackingWeightScheme::cardinality(), 5),
        BudgetExceeded);
}
