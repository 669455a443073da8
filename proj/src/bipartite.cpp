#include "mscb/bipartite.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "mscb/errors.hpp"

namespace mscb {

std::vector<ComponentSides> bipartite_sides(const Graph& graph) {
    auto side = bipartition(graph);
    if (!side) throw UnsupportedInstanceError("graph is not bipartite: odd cycle found");
    auto adj = graph.adjacency();

    std::vector<int> component(graph.vertex_count, -1);
    std::vector<ComponentSides> result;
    for (int root = 0; root < graph.vertex_count; ++root) {
        if (component[root] != -1) continue;
        int id = static_cast<int>(result.size());
        result.push_back({});
        std::vector<int> stack{root};
        component[root] = id;
        bool has_edge = false;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            // The root has side 0 and is the smallest id in its component.
            ((*side)[v] == (*side)[root] ? result[id].side_a : result[id].side_b).push_back(v);
            for (int u : adj[v]) {
                has_edge = true;
                if (component[u] == -1) {
                    component[u] = id;
                    stack.push_back(u);
                }
            }
        }
        result[id].edgeless = !has_edge;
        std::sort(result[id].side_a.begin(), result[id].side_a.end());
        std::sort(result[id].side_b.begin(), result[id].side_b.end());
    }
    return result;
}

namespace {

bool bundle_independent(const Graph& graph, const std::vector<char>& inside) {
    for (const auto& [u, v] : graph.edges) {
        if (inside[u] && inside[v]) return false;
    }
    return true;
}

std::vector<char> membership(int n, const Bundle& bundle) {
    std::vector<char> inside(n, 0);
    for (int v : bundle.members) inside[v] = 1;
    return inside;
}

// Colors one component so that the marked vertices all get color 1;
// everything else is 2/3 by side. Proper because the marked set is
// independent.
void paint_pinned(const ComponentSides& comp, const std::vector<char>& pinned, bool swap_sides,
                  Coloring& colors) {
    const auto& two_side = swap_sides ? comp.side_b : comp.side_a;
    const auto& three_side = swap_sides ? comp.side_a : comp.side_b;
    for (int v : two_side) colors[v] = pinned[v] ? 1 : 2;
    for (int v : three_side) colors[v] = pinned[v] ? 1 : 3;
}

void paint_two_coloring(const ComponentSides& comp, bool swap_sides, Coloring& colors) {
    const auto& one_side = swap_sides ? comp.side_b : comp.side_a;
    const auto& two_side = swap_sides ? comp.side_a : comp.side_b;
    for (int v : one_side) colors[v] = 1;
    for (int v : two_side) colors[v] = 2;
}

}  // namespace

SolveResult solve_bipartite_two(const Instance& instance) {
    auto started = std::chrono::steady_clock::now();
    const Graph& g = instance.graph;
    const int ell = static_cast<int>(instance.bundles.size());
    if (ell > 2) {
        throw UnsupportedInstanceError("solve_bipartite_two accepts at most two bundles");
    }
    auto comps = bipartite_sides(g);
    SolveStats stats;

    // Any 2-coloring; components that are single vertices take color 1.
    Coloring two_coloring(g.vertex_count, 0);
    for (const auto& comp : comps) paint_two_coloring(comp, false, two_coloring);

    if (ell == 1) {
        return finalize_result(instance, std::move(two_coloring), "bip2", stats);
    }

    const std::int64_t w1 = instance.bundles[0].weight;
    const std::int64_t w2 = instance.bundles[1].weight;
    auto in1 = membership(g.vertex_count, instance.bundles[0]);
    auto in2 = membership(g.vertex_count, instance.bundles[1]);

    // Pin one bundle to color 1 (needs independence); the other bundle's
    // maximum is then forced per component: 1 on isolated vertices, 2
    // when the pinned vertices fit inside one side, 3 otherwise.
    auto pinned_coloring = [&](const std::vector<char>& pinned) {
        Coloring colors(g.vertex_count, 0);
        for (const auto& comp : comps) {
            if (comp.edgeless) {
                for (int v : comp.side_a) colors[v] = 1;
                continue;
            }
            bool a_clean = std::none_of(comp.side_b.begin(), comp.side_b.end(),
                                        [&](int v) { return pinned[v]; });
            bool b_clean = std::none_of(comp.side_a.begin(), comp.side_a.end(),
                                        [&](int v) { return pinned[v]; });
            if (a_clean) {
                paint_two_coloring(comp, false, colors);
                for (int v : comp.side_a) colors[v] = 1;
            } else if (b_clean) {
                paint_two_coloring(comp, true, colors);
            } else {
                paint_pinned(comp, pinned, false, colors);
            }
        }
        return colors;
    };

    std::int64_t best_value = 2 * w1 + 2 * w2;
    Coloring best = two_coloring;
    ++stats.search_nodes;

    if (bundle_independent(g, in1)) {
        Coloring colors = pinned_coloring(in1);
        std::int64_t gamma2 = bundle_max(instance, colors, 1);
        std::int64_t value = w1 + gamma2 * w2;
        ++stats.search_nodes;
        if (value < best_value) {
            best_value = value;
            best = std::move(colors);
        }
    }
    if (bundle_independent(g, in2)) {
        Coloring colors = pinned_coloring(in2);
        std::int64_t gamma1 = bundle_max(instance, colors, 0);
        std::int64_t value = gamma1 * w1 + w2;
        ++stats.search_nodes;
        if (value < best_value) {
            best_value = value;
            best = std::move(colors);
        }
    }

    stats.elapsed_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - started)
                           .count();
    SolveResult result = finalize_result(instance, std::move(best), "bip2", stats);
    if (result.cost != best_value) {
        throw Error("bipartite two-bundle candidate does not match its witness");
    }
    return result;
}

SolveResult solve_bipartite_three_uniform(const Instance& instance) {
    auto started = std::chrono::steady_clock::now();
    const Graph& g = instance.graph;
    const int ell = static_cast<int>(instance.bundles.size());
    if (ell > 3) {
        throw UnsupportedInstanceError("solve_bipartite_three_uniform accepts at most three bundles");
    }
    for (const Bundle& b : instance.bundles) {
        if (b.weight != instance.bundles.front().weight) {
            throw UnsupportedInstanceError("solve_bipartite_three_uniform requires uniform weights");
        }
    }
    auto comps = bipartite_sides(g);
    SolveStats stats;

    Coloring baseline(g.vertex_count, 0);
    for (const auto& comp : comps) {
        if (comp.edgeless) {
            for (int v : comp.side_a) baseline[v] = 1;
        } else {
            paint_two_coloring(comp, false, baseline);
        }
    }
    std::int64_t best_cost = cost(instance, baseline);
    Coloring best = baseline;
    ++stats.search_nodes;

    std::vector<std::vector<char>> member(ell);
    for (int j = 0; j < ell; ++j) member[j] = membership(g.vertex_count, instance.bundles[j]);

    // Subsets ordered by (size, mask); profiles by (sum, lex).
    std::vector<int> masks;
    for (int mask = 1; mask < (1 << ell); ++mask) masks.push_back(mask);
    std::stable_sort(masks.begin(), masks.end(), [](int a, int b) {
        return __builtin_popcount(a) != __builtin_popcount(b)
                   ? __builtin_popcount(a) < __builtin_popcount(b)
                   : a < b;
    });

    for (int mask : masks) {
        std::vector<char> pinned(g.vertex_count, 0);
        for (int j = 0; j < ell; ++j) {
            if (mask & (1 << j)) {
                for (int v : instance.bundles[j].members) pinned[v] = 1;
            }
        }
        if (!bundle_independent(g, pinned)) continue;

        std::vector<int> rest;
        for (int j = 0; j < ell; ++j) {
            if (!(mask & (1 << j))) rest.push_back(j);
        }

        std::vector<std::vector<int>> profiles{{}};
        for (std::size_t r = 0; r < rest.size(); ++r) {
            std::vector<std::vector<int>> grown;
            for (const auto& profile : profiles) {
                for (int gamma = 1; gamma <= 3; ++gamma) {
                    auto next = profile;
                    next.push_back(gamma);
                    grown.push_back(next);
                }
            }
            profiles = std::move(grown);
        }
        std::stable_sort(profiles.begin(), profiles.end(),
                         [](const std::vector<int>& a, const std::vector<int>& b) {
                             int sa = std::accumulate(a.begin(), a.end(), 0);
                             int sb = std::accumulate(b.begin(), b.end(), 0);
                             return sa != sb ? sa < sb : a < b;
                         });

        for (const auto& profile : profiles) {
            Coloring colors(g.vertex_count, 0);
            bool feasible = true;
            for (const auto& comp : comps) {
                bool a_clean = std::none_of(comp.side_b.begin(), comp.side_b.end(),
                                            [&](int v) { return pinned[v]; });
                bool b_clean = std::none_of(comp.side_a.begin(), comp.side_a.end(),
                                            [&](int v) { return pinned[v]; });
                Coloring scratch(g.vertex_count, 0);
                bool done = false;
                for (int pattern = 0; pattern < 4 && !done; ++pattern) {
                    if (pattern == 0 && !a_clean) continue;
                    if (pattern == 1 && !b_clean) continue;
                    if (pattern <= 1) {
                        paint_two_coloring(comp, pattern == 1, scratch);
                        // Pinned vertices sit inside the 1-side already.
                    } else {
                        paint_pinned(comp, pinned, pattern == 3, scratch);
                    }
                    bool ok = true;
                    for (std::size_t r = 0; r < rest.size() && ok; ++r) {
                        int maxc = 0;
                        for (int v : instance.bundles[rest[r]].members) {
                            if (scratch[v] > maxc) maxc = scratch[v];
                        }
                        if (maxc > profile[r]) ok = false;
                    }
                    if (ok) {
                        for (int v : comp.side_a) colors[v] = scratch[v];
                        for (int v : comp.side_b) colors[v] = scratch[v];
                        done = true;
                    }
                }
                if (!done) {
                    feasible = false;
                    break;
                }
            }
            if (!feasible) continue;
            ++stats.search_nodes;
            std::int64_t value = cost(instance, colors);
            if (value < best_cost) {
                best_cost = value;
                best = std::move(colors);
            }
        }
    }

    stats.elapsed_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - started)
                           .count();
    return finalize_result(instance, std::move(best), "bip3u", stats);
}

}  // namespace mscb
