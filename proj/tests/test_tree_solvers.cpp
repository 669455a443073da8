#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mscb/errors.hpp"
#include "mscb/generate.hpp"
#include "mscb/oracle.hpp"
#include "mscb/rng.hpp"
#include "mscb/tree_solvers.hpp"
#include "support.hpp"

using namespace mscb;
using namespace mscb::testing;

namespace {

Instance random_tree_partition(SplitMix64& rng, int max_n, FamilyClass family) {
    GeneratorSpec spec;
    spec.shape = Shape::tree;
    spec.family = family;
    spec.n = 2 + static_cast<int>(rng.below(max_n - 1));
    spec.bundle_count = 1 + static_cast<int>(rng.below(spec.n));
    spec.weight_max = 3;
    spec.seed = rng.next();
    return generate(spec);
}

}  // namespace

TEST_CASE("xp tree solver on small instances") {
    auto p3 = instance_of(path_graph(3), {{1, {0, 2}}, {1, {1}}});
    CHECK(solve_xp_tree(p3).cost == 3);

    auto p3_singletons = instance_of(path_graph(3), {{1, {0}}, {1, {1}}, {1, {2}}});
    auto result = solve_xp_tree(p3_singletons);
    CHECK(result.cost == 4);
    CHECK(result.coloring == Coloring{1, 2, 1});

    for (int w : {1, 4}) {
        GeneratorSpec spec;
        spec.shape = Shape::tree;
        spec.family = FamilyClass::partition;
        spec.n = 7;
        spec.bundle_count = 1;
        spec.weight_min = spec.weight_max = w;
        spec.seed = 3;
        CHECK(solve_xp_tree(generate(spec)).cost == 2 * w);
    }
}

TEST_CASE("xp tree solver rejects unsupported instances") {
    CHECK_THROWS_AS(solve_xp_tree(single_bundle(cycle_graph(4))), UnsupportedInstanceError);
    auto overlapping = instance_of(path_graph(3), {{1, {0, 1}}, {1, {1, 2}}});
    CHECK_THROWS_AS(solve_xp_tree(overlapping), UnsupportedInstanceError);
}

TEST_CASE("xp tree witnesses stay within the 2 ell color bound") {
    SplitMix64 rng(21);
    for (int round = 0; round < 80; ++round) {
        Instance instance = random_tree_partition(rng, 10, FamilyClass::partition);
        SolveResult result = solve_xp_tree(instance);
        int bound = 2 * static_cast<int>(instance.bundles.size());
        for (int c : result.coloring) CHECK(c <= bound);
    }
}

TEST_CASE("xp tree equals the oracle on random partitions") {
    SplitMix64 rng(22);
    for (int round = 0; round < 80; ++round) {
        Instance instance = random_tree_partition(rng, 10, FamilyClass::partition);
        CHECK(solve_xp_tree(instance).cost == solve_bruteforce(instance).cost);
    }
}

TEST_CASE("connected partition solver on small instances") {
    auto p4 = instance_of(path_graph(4), {{1, {0, 1}}, {1, {2, 3}}});
    CHECK(solve_connected_partition_tree(p4).cost == 4);

    auto star = instance_of(star_graph(3), {{1, {0, 1}}, {1, {2}}, {1, {3}}});
    auto result = solve_connected_partition_tree(star);
    CHECK(result.cost == 4);
    CHECK(result.coloring == Coloring{2, 1, 1, 1});

    auto lone = instance_of(Graph(1, {}), {{7, {0}}});
    CHECK(solve_connected_partition_tree(lone).cost == 7);
}

TEST_CASE("connected partition solver rejects unsupported instances") {
    auto disconnected_bundle = instance_of(path_graph(3), {{1, {0, 2}}, {1, {1}}});
    CHECK_THROWS_AS(solve_connected_partition_tree(disconnected_bundle),
                    UnsupportedInstanceError);
    CHECK_THROWS_AS(solve_connected_partition_tree(single_bundle(cycle_graph(4))),
                    UnsupportedInstanceError);
}

TEST_CASE("connected partition solver equals the oracle") {
    SplitMix64 rng(23);
    for (int round = 0; round < 80; ++round) {
        Instance instance = random_tree_partition(rng, 10, FamilyClass::connected_partition);
        CHECK(solve_connected_partition_tree(instance).cost ==
              solve_bruteforce(instance).cost);
    }
}

TEST_CASE("connected partition tables keep k <= g") {
    auto star = instance_of(star_graph(3), {{1, {0, 1}}, {1, {2}}, {1, {3}}});
    ConnTreeTables tables = connected_partition_tables(star);
    const int n = star.graph.vertex_count;
    for (int v = 0; v < n; ++v) {
        for (int k = 1; k <= tables.color_limit[v]; ++k) {
            std::int64_t best = tables.infinity;
            int best_g = 0;
            for (int g = 1; g <= n; ++g) {
                std::int64_t value = tables.values[v][static_cast<std::size_t>(k) * (n + 1) + g];
                if (value < best) {
                    best = value;
                    best_g = g;
                }
            }
            if (best < tables.infinity) CHECK(best_g >= k);
        }
    }
}

TEST_CASE("connected path solver on small instances") {
    auto p5 = instance_of(path_graph(5), {{2, {0, 1, 2}}, {1, {2, 3, 4}}});
    CHECK(solve_connected_path(p5).cost == 6);

    for (int w : {1, 5}) {
        auto path = single_bundle(path_graph(6), w);
        CHECK(solve_connected_path(path).cost == 2 * w);
    }

    auto p2 = instance_of(path_graph(2), {{1, {0, 1}}, {1, {1}}});
    auto result = solve_connected_path(p2);
    CHECK(result.cost == 3);
    CHECK(result.coloring == Coloring{2, 1});
}

TEST_CASE("connected path rejects non-paths and non-segments") {
    CHECK_THROWS_AS(solve_connected_path(single_bundle(star_graph(3))),
                    UnsupportedInstanceError);
    auto scattered = instance_of(path_graph(3), {{1, {0, 2}}, {1, {1}}});
    CHECK_THROWS_AS(solve_connected_path(scattered), UnsupportedInstanceError);
}

TEST_CASE("connected path works on paths with shuffled vertex ids") {
    // 2-4-0-3-1 is a path even though ids are scrambled.
    auto g = graph_of(5, {{2, 4}, {4, 0}, {0, 3}, {3, 1}});
    auto instance = instance_of(std::move(g), {{1, {2, 4, 0}}, {1, {0, 3, 1}}});
    CHECK(solve_connected_path(instance).cost == solve_bruteforce(instance).cost);
}

TEST_CASE("connected path equals the oracle and uses three colors") {
    SplitMix64 rng(24);
    for (int round = 0; round < 80; ++round) {
        GeneratorSpec spec;
        spec.shape = Shape::path;
        spec.family = round % 2 ? FamilyClass::overlapping : FamilyClass::connected_partition;
        spec.n = 2 + static_cast<int>(rng.below(9));
        spec.bundle_count = 1 + static_cast<int>(rng.below(std::min(spec.n, 4)));
        spec.weight_max = 3;
        spec.seed = rng.next();
        Instance instance = generate(spec);
        SolveResult result = solve_connected_path(instance);
        CHECK(result.cost == solve_bruteforce(instance).cost);
        CHECK(*std::max_element(result.coloring.begin(), result.coloring.end()) <= 3);
    }
}

TEST_CASE("bundle order never changes the cost") {
    SplitMix64 rng(25);
    for (int round = 0; round < 30; ++round) {
        GeneratorSpec spec;
        spec.shape = Shape::path;
        spec.family = FamilyClass::overlapping;
        spec.n = 3 + static_cast<int>(rng.below(7));
        spec.bundle_count = 2 + static_cast<int>(rng.below(3));
        spec.weight_max = 3;
        spec.seed = rng.next();
        Instance instance = generate(spec);
        Instance shuffled = instance;
        std::reverse(shuffled.bundles.begin(), shuffled.bundles.end());
        CHECK(solve_connected_path(instance).cost == solve_connected_path(shuffled).cost);
    }
}
