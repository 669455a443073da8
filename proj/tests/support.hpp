#ifndef MSCB_TESTS_SUPPORT_HPP
#define MSCB_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <vector>

#include "mscb/core.hpp"

namespace mscb::testing {

inline Graph graph_of(int n, std::initializer_list<std::pair<int, int>> edges) {
    return Graph(n, std::vector<std::pair<int, int>>(edges));
}

struct BundleSpec {
    std::int64_t weight;
    std::vector<int> members;
};

inline Instance instance_of(Graph graph, std::initializer_list<BundleSpec> bundles,
                            std::optional<std::int64_t> budget = {}) {
    Instance instance;
    instance.graph = std::move(graph);
    for (const auto& spec : bundles) {
        Bundle b;
        b.weight = spec.weight;
        b.members = spec.members;
        instance.bundles.push_back(std::move(b));
    }
    instance.budget = budget;
    return instance;
}

inline Graph path_graph(int n) {
    Graph g;
    g.vertex_count = n;
    for (int v = 0; v + 1 < n; ++v) g.edges.push_back({v, v + 1});
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.edges.push_back({n - 1, 0});
    return g;
}

inline Graph complete_graph(int n) {
    Graph g;
    g.vertex_count = n;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) g.edges.push_back({u, v});
    }
    return g;
}

inline Graph star_graph(int leaves) {
    Graph g;
    g.vertex_count = leaves + 1;
    for (int v = 1; v <= leaves; ++v) g.edges.push_back({0, v});
    return g;
}

inline Graph complete_bipartite(int a, int b) {
    Graph g;
    g.vertex_count = a + b;
    for (int u = 0; u < a; ++u) {
        for (int v = a; v < a + b; ++v) g.edges.push_back({u, v});
    }
    return g;
}

inline Graph petersen_graph() {
    Graph g;
    g.vertex_count = 10;
    for (int v = 0; v < 5; ++v) {
        g.edges.push_back({v, (v + 1) % 5});        // outer cycle
        g.edges.push_back({v, v + 5});              // spokes
        g.edges.push_back({v + 5, (v + 2) % 5 + 5});  // inner pentagram
    }
    return g;
}

/// One bundle covering everything.
inline Instance single_bundle(Graph graph, std::int64_t weight = 1) {
    Instance instance;
    std::vector<int> all(graph.vertex_count);
    for (int v = 0; v < graph.vertex_count; ++v) all[v] = v;
    instance.graph = std::move(graph);
    instance.bundles.push_back({weight, all});
    return instance;
}

}  // namespace mscb::testing

#endif
