#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mscb/errors.hpp"
#include "mscb/oracle.hpp"
#include "mscb/reductions.hpp"
#include "mscb/rng.hpp"
#include "support.hpp"

using namespace mscb;
using namespace mscb::testing;

TEST_CASE("independent set to matching on K3") {
    auto [target, trace] = reduce_is_to_matching(complete_graph(3), 1);
    CHECK(target.graph.vertex_count == 6);
    CHECK(target.graph.edges.size() == 3);
    REQUIRE(target.bundles.size() == 3);
    for (const Bundle& b : target.bundles) {
        CHECK(b.members.size() == 2);
        CHECK(b.weight == 1);
    }
    CHECK(*target.budget == 5);
    CHECK(validate_instance(target).empty());
}

TEST_CASE("independent set to matching on a single edge") {
    auto [target, trace] = reduce_is_to_matching(graph_of(2, {{0, 1}}), 1);
    CHECK(target.graph.vertex_count == 2);
    CHECK(target.graph.edges.size() == 1);
    CHECK(target.bundles.size() == 2);
    CHECK(*target.budget == 3);
}

TEST_CASE("independent set to matching on P3") {
    auto [target, trace] = reduce_is_to_matching(path_graph(3), 2);
    CHECK(target.graph.vertex_count == 4);
    CHECK(target.graph.edges.size() == 2);
    REQUIRE(target.bundles.size() == 3);
    CHECK(target.bundles[0].members.size() == 1);
    CHECK(target.bundles[1].members.size() == 2);
    CHECK(target.bundles[2].members.size() == 1);
    CHECK(*target.budget == 4);
    CHECK(solve_bruteforce(target).cost == 4);  // 2*|V| - alpha(P3) = 6 - 2
}

TEST_CASE("isolated source vertices are rejected") {
    CHECK_THROWS_AS(reduce_is_to_matching(Graph(1, {}), 1), UnsupportedInstanceError);
    Graph lonely(3, {{0, 1}});
    CHECK_THROWS_AS(reduce_is_to_matching(lonely, 1), UnsupportedInstanceError);
}

TEST_CASE("matching to path construction sizes") {
    auto [one_edge, trace1] = reduce_is_to_matching(graph_of(2, {{0, 1}}), 1);
    one_edge.budget = 3;
    auto [path1, ptrace1] = reduce_matching_to_path(one_edge);
    CHECK(path1.graph.vertex_count == 11);
    CHECK(path1.bundles.size() == 9);
    CHECK(*path1.budget == 15);
    auto cls = classify(path1);
    CHECK(cls.is_path);
    CHECK(cls.bundles_partition);
    CHECK(cls.bundles_independent);
    CHECK(validate_instance(path1).empty());

    // Two matching edges: 16 copy vertices + 4 connectors + 3 joiners.
    Instance two_edges = instance_of(graph_of(4, {{0, 1}, {2, 3}}),
                                     {{1, {0}}, {1, {1}}, {1, {2}}, {1, {3}}}, 5);
    auto [path2, ptrace2] = reduce_matching_to_path(two_edges);
    CHECK(path2.graph.vertex_count == 23);
    CHECK(*path2.budget == 23);  // 4*5 + 3
    CHECK(classify(path2).is_path);
}

TEST_CASE("matching to path rejects inputs outside the required shape") {
    auto not_matching = instance_of(path_graph(3), {{1, {0}}, {1, {1}}, {1, {2}}}, 3);
    CHECK_THROWS_AS(reduce_matching_to_path(not_matching), UnsupportedInstanceError);

    auto no_budget = instance_of(graph_of(2, {{0, 1}}), {{1, {0}}, {1, {1}}});
    CHECK_THROWS_AS(reduce_matching_to_path(no_budget), UnsupportedInstanceError);

    auto weighted = instance_of(graph_of(2, {{0, 1}}), {{2, {0}}, {1, {1}}}, 3);
    CHECK_THROWS_AS(reduce_matching_to_path(weighted), UnsupportedInstanceError);
}

TEST_CASE("list coloring to four bundles: construction shape") {
    ListColoringInstance lone{Graph(1, {}), {{1}}};
    auto [target, trace] = reduce_listcol_to_bipartite4(lone);
    CHECK(target.graph.vertex_count == 1 + 16);  // no copies for list {1}
    REQUIRE(target.bundles.size() == 4);
    for (const Bundle& b : target.bundles) CHECK(b.weight == 1);
    CHECK(*target.budget == 7);
    CHECK(validate_instance(target).empty());
    CHECK(classify(target).is_bipartite);
}

TEST_CASE("list coloring to four bundles: feasibility iff optimum at most 7") {
    ListColoringInstance good{graph_of(2, {{0, 1}}), {{1}, {2}}};
    auto [good_target, gt] = reduce_listcol_to_bipartite4(good);
    CHECK(solve_bruteforce(good_target).cost <= 7);

    ListColoringInstance bad{graph_of(2, {{0, 1}}), {{1}, {1}}};
    auto [bad_target, bt] = reduce_listcol_to_bipartite4(bad);
    CHECK(solve_bruteforce(bad_target).cost > 7);
}

TEST_CASE("list coloring to three weighted bundles") {
    ListColoringInstance lone{Graph(1, {}), {{1}}};
    auto [target, trace] = reduce_listcol_to_bipartite3_weighted(lone);
    REQUIRE(target.bundles.size() == 3);
    CHECK(target.bundles[0].weight == 2);
    CHECK(target.bundles[1].weight == 1);
    CHECK(target.bundles[2].weight == 1);
    CHECK(*target.budget == 7);
    CHECK(target.graph.vertex_count == 1 + 10);
    CHECK(validate_instance(target).empty());
    CHECK(classify(target).is_bipartite);

    ListColoringInstance good{graph_of(2, {{0, 1}}), {{1}, {2}}};
    auto [good_target, gt] = reduce_listcol_to_bipartite3_weighted(good);
    CHECK(solve_bruteforce(good_target).cost <= 7);

    ListColoringInstance bad{graph_of(2, {{0, 1}}), {{1}, {1}}};
    auto [bad_target, bt] = reduce_listcol_to_bipartite3_weighted(bad);
    CHECK(solve_bruteforce(bad_target).cost > 7);
}

TEST_CASE("every copy class produces the right gadget") {
    // One vertex per list class, no source edges.
    std::vector<std::vector<int>> lists{{1},    {2},    {3},      {1, 2},
                                        {1, 3}, {2, 3}, {1, 2, 3}};
    ListColoringInstance lc{Graph(7, {}), lists};
    auto [target, trace] = reduce_listcol_to_bipartite4(lc);
    // Copies: {2}:1, {3}:3, {1,3}:2, {2,3}:1 -> 7 in total.
    CHECK(target.graph.vertex_count == 7 + 7 + 16);
    CHECK(validate_instance(target).empty());
    CHECK(classify(target).is_bipartite);
    // Feasible source (every list is nonempty): optimum is 7.
    CHECK(solve_bruteforce(target).cost == 7);
}

TEST_CASE("theorem 1 exactness on a handful of graphs") {
    SplitMix64 rng(51);
    std::vector<Graph> sources{complete_graph(3), path_graph(4), star_graph(3),
                               cycle_graph(5), complete_bipartite(2, 3)};
    for (const Graph& g : sources) {
        auto alpha = max_independent_set(g);
        auto [target, trace] = reduce_is_to_matching(g, 1);
        CHECK(solve_bruteforce(target).cost == 2 * g.vertex_count - alpha.size);
    }
}
