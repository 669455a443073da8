#include "mscb/core.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "mscb/errors.hpp"

namespace mscb {

std::vector<std::string> validate_instance(const Instance& instance) {
    std::vector<std::string> violations;
    const Graph& g = instance.graph;
    const int n = g.vertex_count;

    if (n < 0) violations.push_back("negative vertex count");

    std::set<std::pair<int, int>> seen_edges;
    for (const auto& [u, v] : g.edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            violations.push_back("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") endpoint out of range");
            continue;
        }
        if (u == v) {
            violations.push_back("self-loop at vertex " + std::to_string(u));
            continue;
        }
        auto key = std::minmax(u, v);
        if (!seen_edges.insert(key).second) {
            violations.push_back("duplicate edge (" + std::to_string(key.first) + "," +
                                 std::to_string(key.second) + ")");
        }
    }

    if (instance.bundles.empty()) violations.push_back("no bundles");

    std::vector<char> covered(std::max(n, 0), 0);
    for (std::size_t j = 0; j < instance.bundles.size(); ++j) {
        const Bundle& b = instance.bundles[j];
        if (b.members.empty()) violations.push_back("bundle " + std::to_string(j) + " is empty");
        if (b.weight < 1) {
            violations.push_back("bundle " + std::to_string(j) + " has non-positive weight " +
                                 std::to_string(b.weight));
        }
        std::set<int> seen_members;
        for (int v : b.members) {
            if (v < 0 || v >= n) {
                violations.push_back("bundle " + std::to_string(j) + " member " +
                                     std::to_string(v) + " out of range");
                continue;
            }
            if (!seen_members.insert(v).second) {
                violations.push_back("bundle " + std::to_string(j) + " duplicate member " +
                                     std::to_string(v));
            }
            covered[v] = 1;
        }
    }
    for (int v = 0; v < n; ++v) {
        if (!covered[v]) violations.push_back("uncovered vertex " + std::to_string(v));
    }

    if (instance.budget && *instance.budget < 1) {
        violations.push_back("non-positive budget " + std::to_string(*instance.budget));
    }
    return violations;
}

bool is_total_proper(const Graph& graph, const Coloring& coloring) {
    if (static_cast<int>(coloring.size()) != graph.vertex_count) return false;
    for (int c : coloring) {
        if (c < 1) return false;
    }
    for (const auto& [u, v] : graph.edges) {
        if (coloring[u] == coloring[v]) return false;
    }
    return true;
}

std::int64_t cost(const Instance& instance, const Coloring& coloring) {
    if (!is_total_proper(instance.graph, coloring)) {
        throw InvalidWitnessError("coloring is not a total proper coloring");
    }
    std::int64_t total = 0;
    for (const Bundle& b : instance.bundles) {
        int max_color = 0;
        for (int v : b.members) max_color = std::max(max_color, coloring[v]);
        total += b.weight * max_color;
    }
    return total;
}

int bundle_max(const Instance& instance, const Coloring& coloring, int j) {
    if (j < 0 || j >= static_cast<int>(instance.bundles.size())) {
        throw std::out_of_range("bundle index " + std::to_string(j) + " out of range");
    }
    int max_color = 0;
    for (int v : instance.bundles[j].members) {
        if (v < 0 || v >= static_cast<int>(coloring.size()) || coloring[v] < 1) {
            throw InvalidWitnessError("bundle " + std::to_string(j) +
                                      " has an uncolored member");
        }
        max_color = std::max(max_color, coloring[v]);
    }
    return max_color;
}

bool decide(const Instance& instance, const SolveResult& result) {
    if (!instance.budget) throw Error("decide requires an instance with a budget");
    if (!result.optimal) throw Error("decide requires an optimal result");
    return result.cost <= *instance.budget;
}

InstanceClass classify(const Instance& instance) {
    const Graph& g = instance.graph;
    InstanceClass cls;
    cls.n = g.vertex_count;
    cls.bundle_count = static_cast<int>(instance.bundles.size());

    cls.is_tree = is_tree(g);
    cls.is_path = is_path_graph(g);
    cls.is_bipartite = bipartition(g).has_value();

    auto deg = g.degrees();
    cls.is_perfect_matching =
        g.vertex_count > 0 && std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; });

    // Partition: disjoint and covering.
    std::vector<int> hits(std::max(g.vertex_count, 0), 0);
    for (const Bundle& b : instance.bundles) {
        for (int v : b.members) ++hits[v];
    }
    cls.bundles_partition =
        !instance.bundles.empty() &&
        std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });

    auto adj = g.adjacency();
    cls.bundles_connected = true;
    cls.bundles_independent = true;
    for (const Bundle& b : instance.bundles) {
        std::vector<char> inside(g.vertex_count, 0);
        for (int v : b.members) inside[v] = 1;
        // Connectivity of the induced subgraph by DFS from the first member.
        if (!b.members.empty()) {
            std::vector<int> stack{b.members.front()};
            std::vector<char> seen(g.vertex_count, 0);
            seen[b.members.front()] = 1;
            int reached = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int u : adj[v]) {
                    if (inside[u] && !seen[u]) {
                        seen[u] = 1;
                        ++reached;
                        stack.push_back(u);
                    }
                }
            }
            if (reached != static_cast<int>(b.members.size())) cls.bundles_connected = false;
        }
        for (int v : b.members) {
            for (int u : adj[v]) {
                if (u > v && inside[u]) cls.bundles_independent = false;
            }
        }
        if (b.members.size() >= 2) ++cls.non_singleton_count;
    }

    cls.weights_uniform = true;
    for (const Bundle& b : instance.bundles) {
        if (b.weight != instance.bundles.front().weight) cls.weights_uniform = false;
    }
    return cls;
}

SolveResult finalize_result(const Instance& instance, Coloring coloring,
                            std::string solver, SolveStats stats, bool optimal) {
    SolveResult result;
    result.cost = cost(instance, coloring);
    result.coloring = std::move(coloring);
    result.bundle_maxes.reserve(instance.bundles.size());
    for (int j = 0; j < static_cast<int>(instance.bundles.size()); ++j) {
        result.bundle_maxes.push_back(bundle_max(instance, result.coloring, j));
    }
    result.solver = std::move(solver);
    result.optimal = optimal;
    result.stats = stats;
    return result;
}

}  // namespace mscb
