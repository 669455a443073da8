#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mscb/capvector.hpp"
#include "mscb/errors.hpp"
#include "mscb/generate.hpp"
#include "mscb/oracle.hpp"
#include "mscb/rng.hpp"
#include "support.hpp"

using namespace mscb;
using namespace mscb::testing;

TEST_CASE("color_bound") {
    auto tree3 = instance_of(path_graph(5), {{1, {0, 1}}, {1, {2, 3}}, {1, {4}}});
    CHECK(color_bound(tree3) == 6);

    auto edgeless = instance_of(Graph(3, {}), {{1, {0, 1}}, {1, {2}}});
    CHECK(color_bound(edgeless) == 2);

    CHECK(color_bound(single_bundle(complete_graph(4))) == 4);
}

TEST_CASE("cap feasibility on trees") {
    auto p3 = instance_of(path_graph(3), {{1, {0, 2}}, {1, {1}}});
    auto witness = cap_feasible_tree(p3, CapVector{{1, 2}});
    REQUIRE(witness.has_value());
    CHECK(*witness == Coloring{1, 2, 1});

    auto edge = instance_of(graph_of(2, {{0, 1}}), {{1, {0}}, {1, {1}}});
    CHECK_FALSE(cap_feasible_tree(edge, CapVector{{1, 1}}).has_value());

    auto star = instance_of(star_graph(3), {{1, {0}}, {1, {1}}, {1, {2}}, {1, {3}}});
    auto star_witness = cap_feasible_tree(star, CapVector{{1, 2, 2, 2}});
    REQUIRE(star_witness.has_value());
    CHECK(*star_witness == Coloring{1, 2, 2, 2});

    CHECK_THROWS_AS(cap_feasible_tree(single_bundle(cycle_graph(4)), CapVector{{2}}),
                    UnsupportedInstanceError);
}

TEST_CASE("generic cap feasibility") {
    auto c4 = single_bundle(cycle_graph(4));
    auto witness = cap_feasible_generic(c4, CapVector{{2}});
    REQUIRE(witness.has_value());
    CHECK(cost(c4, *witness) == 2);

    auto k3 = single_bundle(complete_graph(3));
    CHECK_FALSE(cap_feasible_generic(k3, CapVector{{2}}).has_value());
    CHECK(cap_feasible_generic(k3, CapVector{{3}}).has_value());
}

TEST_CASE("solve_capvector on small instances") {
    auto p3 = instance_of(path_graph(3), {{1, {0, 2}}, {1, {1}}});
    CHECK(solve_capvector(p3).cost == 3);

    for (int w : {1, 3}) {
        GeneratorSpec spec;
        spec.shape = Shape::tree;
        spec.n = 6;
        spec.bundle_count = 1;
        spec.family = FamilyClass::partition;
        spec.weight_min = spec.weight_max = w;
        spec.seed = 5;
        CHECK(solve_capvector(generate(spec)).cost == 2 * w);
    }

    auto weighted_edge = instance_of(graph_of(2, {{0, 1}}), {{3, {0}}, {1, {1}}});
    auto result = solve_capvector(weighted_edge);
    CHECK(result.cost == 5);
    CHECK(result.coloring == Coloring{1, 2});
}

TEST_CASE("tree and generic feasibility agree on random trees") {
    SplitMix64 rng(11);
    for (int round = 0; round < 120; ++round) {
        GeneratorSpec spec;
        spec.shape = Shape::tree;
        spec.family = FamilyClass::overlapping;
        spec.n = 2 + static_cast<int>(rng.below(9));
        spec.bundle_count = 1 + static_cast<int>(rng.below(4));
        spec.seed = rng.next();
        Instance instance = generate(spec);

        CapVector caps;
        for (std::size_t j = 0; j < instance.bundles.size(); ++j) {
            caps.caps.push_back(1 + static_cast<int>(rng.below(4)));
        }
        auto tree_answer = cap_feasible_tree(instance, caps);
        auto generic_answer = cap_feasible_generic(instance, caps);
        CHECK(tree_answer.has_value() == generic_answer.has_value());
        if (tree_answer) {
            auto vc = vertex_caps(instance, caps);
            for (int v = 0; v < spec.n; ++v) CHECK((*tree_answer)[v] <= vc[v]);
            CHECK(is_total_proper(instance.graph, *tree_answer));
        }
    }
}

TEST_CASE("feasibility is monotone in the caps") {
    SplitMix64 rng(12);
    for (int round = 0; round < 60; ++round) {
        GeneratorSpec spec;
        spec.shape = Shape::tree;
        spec.family = FamilyClass::overlapping;
        spec.n = 2 + static_cast<int>(rng.below(8));
        spec.bundle_count = 1 + static_cast<int>(rng.below(3));
        spec.seed = rng.next();
        Instance instance = generate(spec);

        CapVector caps;
        for (std::size_t j = 0; j < instance.bundles.size(); ++j) {
            caps.caps.push_back(1 + static_cast<int>(rng.below(3)));
        }
        if (!cap_feasible_tree(instance, caps)) continue;
        CapVector looser = caps;
        looser.caps[rng.below(looser.caps.size())] += 1 + static_cast<int>(rng.below(2));
        CHECK(cap_feasible_tree(instance, looser).has_value());
    }
}

TEST_CASE("capvector equals the oracle on random trees") {
    SplitMix64 rng(13);
    for (int round = 0; round < 60; ++round) {
        GeneratorSpec spec;
        spec.shape = Shape::tree;
        spec.family = FamilyClass::overlapping;
        spec.n = 2 + static_cast<int>(rng.below(9));
        spec.bundle_count = 1 + static_cast<int>(rng.below(4));
        spec.weight_max = 3;
        spec.seed = rng.next();
        Instance instance = generate(spec);
        CHECK(solve_capvector(instance).cost == solve_bruteforce(instance).cost);
    }
}
