#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mscb/bipartite.hpp"
#include "mscb/errors.hpp"
#include "mscb/generate.hpp"
#include "mscb/oracle.hpp"
#include "mscb/rng.hpp"
#include "support.hpp"

using namespace mscb;
using namespace mscb::testing;

TEST_CASE("bipartite_sides") {
    auto c4 = bipartite_sides(cycle_graph(4));
    REQUIRE(c4.size() == 1);
    CHECK(c4[0].side_a == std::vector<int>{0, 2});
    CHECK(c4[0].side_b == std::vector<int>{1, 3});
    CHECK_FALSE(c4[0].edgeless);

    auto isolated = bipartite_sides(Graph(3, {}));
    REQUIRE(isolated.size() == 3);
    for (int v = 0; v < 3; ++v) {
        CHECK(isolated[v].side_a == std::vector<int>{v});
        CHECK(isolated[v].edgeless);
    }

    auto p3 = bipartite_sides(path_graph(3));
    REQUIRE(p3.size() == 1);
    CHECK(p3[0].side_a == std::vector<int>{0, 2});
    CHECK(p3[0].side_b == std::vector<int>{1});

    CHECK_THROWS_AS(bipartite_sides(complete_graph(3)), UnsupportedInstanceError);
}

TEST_CASE("two-bundle solver on the formula's examples") {
    auto c4 = instance_of(cycle_graph(4), {{1, {0, 2}}, {1, {1, 3}}});
    CHECK(solve_bipartite_two(c4).cost == 3);

    auto k33 = instance_of(complete_bipartite(3, 3), {{5, {0, 1, 2}}, {1, {3, 4, 5}}});
    CHECK(solve_bipartite_two(k33).cost == 7);

    auto edge = instance_of(graph_of(2, {{0, 1}}), {{1, {0}}, {1, {1}}});
    CHECK(solve_bipartite_two(edge).cost == 3);
}

TEST_CASE("two-bundle solver handles one bundle and rejects three") {
    CHECK(solve_bipartite_two(single_bundle(cycle_graph(4), 3)).cost == 6);
    CHECK(solve_bipartite_two(single_bundle(Graph(3, {}), 3)).cost == 3);

    auto three = instance_of(path_graph(3), {{1, {0}}, {1, {1}}, {1, {2}}});
    CHECK_THROWS_AS(solve_bipartite_two(three), UnsupportedInstanceError);
    CHECK_THROWS_AS(solve_bipartite_two(single_bundle(complete_graph(3))),
                    UnsupportedInstanceError);
}

TEST_CASE("three-uniform solver on small instances") {
    auto star = instance_of(star_graph(2), {{1, {0}}, {1, {1}}, {1, {2}}});
    CHECK(solve_bipartite_three_uniform(star).cost == 4);

    auto edgeless = instance_of(Graph(3, {}), {{1, {0}}, {1, {1}}, {1, {2}}});
    CHECK(solve_bipartite_three_uniform(edgeless).cost == 3);

    auto c4 = instance_of(cycle_graph(4), {{1, {0}}, {1, {2}}, {1, {1, 3}}});
    auto result = solve_bipartite_three_uniform(c4);
    CHECK(result.cost == 4);
    CHECK(result.coloring == Coloring{1, 2, 1, 2});
}

TEST_CASE("three-uniform solver rejects unsupported instances") {
    auto weighted = instance_of(path_graph(2), {{2, {0}}, {1, {1}}});
    CHECK_THROWS_AS(solve_bipartite_three_uniform(weighted), UnsupportedInstanceError);
    auto four = instance_of(path_graph(4), {{1, {0}}, {1, {1}}, {1, {2}}, {1, {3}}});
    CHECK_THROWS_AS(solve_bipartite_three_uniform(four), UnsupportedInstanceError);
    CHECK_THROWS_AS(solve_bipartite_three_uniform(single_bundle(complete_graph(3))),
                    UnsupportedInstanceError);
}

TEST_CASE("two-bundle solver equals the oracle, overlaps included") {
    SplitMix64 rng(31);
    for (int round = 0; round < 120; ++round) {
        GeneratorSpec spec;
        spec.shape = Shape::bipartite;
        spec.family = FamilyClass::overlapping;
        spec.n = 2 + static_cast<int>(rng.below(8));
        spec.bundle_count = 1 + static_cast<int>(rng.below(2));
        spec.weight_max = 4;
        spec.edge_permille = 350;
        spec.seed = rng.next();
        Instance instance = generate(spec);
        CHECK(solve_bipartite_two(instance).cost == solve_bruteforce(instance).cost);
    }
}

TEST_CASE("three-uniform solver equals the oracle and stays under six") {
    SplitMix64 rng(32);
    for (int round = 0; round < 120; ++round) {
        GeneratorSpec spec;
        spec.shape = Shape::bipartite;
        spec.family = FamilyClass::overlapping;
        spec.n = 2 + static_cast<int>(rng.below(8));
        spec.bundle_count = 1 + static_cast<int>(rng.below(3));
        std::int64_t w = 1 + static_cast<int>(rng.below(3));
        spec.weight_min = spec.weight_max = w;
        spec.edge_permille = 350;
        spec.seed = rng.next();
        Instance instance = generate(spec);
        SolveResult result = solve_bipartite_three_uniform(instance);
        CHECK(result.cost == solve_bruteforce(instance).cost);
        CHECK(result.cost <= 6 * w);
    }
}

TEST_CASE("returned cost is one of the formula candidates") {
    SplitMix64 rng(33);
    for (int round = 0; round < 60; ++round) {
        GeneratorSpec spec;
        spec.shape = Shape::bipartite;
        spec.family = FamilyClass::overlapping;
        spec.n = 2 + static_cast<int>(rng.below(7));
        spec.bundle_count = 2;
        spec.weight_max = 4;
        spec.seed = rng.next();
        Instance instance = generate(spec);
        SolveResult result = solve_bipartite_two(instance);
        std::int64_t w1 = instance.bundles[0].weight;
        std::int64_t w2 = instance.bundles[1].weight;
        bool matches = result.cost == 2 * w1 + 2 * w2 ||
                       result.cost == w1 + result.bundle_maxes[1] * w2 ||
                       result.cost == result.bundle_maxes[0] * w1 + w2;
        CHECK(matches);
    }
}
