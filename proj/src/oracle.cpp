#include "mscb/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>

#include "mscb/errors.hpp"

namespace mscb {

namespace {

struct SearchContext {
    const Instance& instance;
    std::vector<std::vector<int>> adj;
    std::vector<int> order;                  // vertex enumeration order
    std::vector<int> cap;                    // per-vertex color cap
    std::vector<std::vector<int>> bundles_of;  // vertex -> bundle indices
    std::vector<std::int64_t> contrib;       // per-bundle weight * max(cur max, static lb)
    std::vector<int> cur_max;                // per-bundle max color so far
    std::vector<int> static_lb;              // 1, or 2 if the bundle induces an edge
    std::int64_t lower_bound = 0;
    Coloring colors;
    std::int64_t best_cost = std::numeric_limits<std::int64_t>::max();
    Coloring best_colors;
    std::int64_t nodes = 0;
    std::optional<std::int64_t> node_limit;

    explicit SearchContext(const Instance& inst) : instance(inst) {
        const Graph& g = inst.graph;
        adj = g.adjacency();
        bundles_of.resize(g.vertex_count);
        for (int j = 0; j < static_cast<int>(inst.bundles.size()); ++j) {
            for (int v : inst.bundles[j].members) bundles_of[v].push_back(j);
        }
        static_lb.assign(inst.bundles.size(), 1);
        for (int j = 0; j < static_cast<int>(inst.bundles.size()); ++j) {
            std::vector<char> inside(g.vertex_count, 0);
            for (int v : inst.bundles[j].members) inside[v] = 1;
            for (const auto& [u, v] : g.edges) {
                if (inside[u] && inside[v]) {
                    static_lb[j] = 2;
                    break;
                }
            }
        }
        cur_max.assign(inst.bundles.size(), 0);
        contrib.resize(inst.bundles.size());
        for (std::size_t j = 0; j < inst.bundles.size(); ++j) {
            contrib[j] = inst.bundles[j].weight * static_lb[j];
            lower_bound += contrib[j];
        }
        colors.assign(g.vertex_count, 0);
    }

    void consider(const Coloring& candidate, std::int64_t candidate_cost) {
        if (candidate_cost < best_cost ||
            (candidate_cost == best_cost &&
             std::lexicographical_compare(candidate.begin(), candidate.end(),
                                          best_colors.begin(), best_colors.end()))) {
            best_cost = candidate_cost;
            best_colors = candidate;
        }
    }

    void dfs(std::size_t idx) {
        ++nodes;
        if (node_limit && nodes > *node_limit) {
            throw InconclusiveError("oracle node limit exceeded");
        }
        if (idx == order.size()) {
            consider(colors, lower_bound);
            return;
        }
        int v = order[idx];
        for (int k = 1; k <= cap[v]; ++k) {
            bool conflict = false;
            for (int u : adj[v]) {
                if (colors[u] == k) {
                    conflict = true;
                    break;
                }
            }
            if (conflict) continue;
            // Raising the color only raises the bound, so once the bound
            // exceeds the incumbent no larger color can help either.
            std::int64_t delta = 0;
            for (int j : bundles_of[v]) {
                std::int64_t next = instance.bundles[j].weight *
                                    std::max<std::int64_t>(cur_max[j] < k ? k : cur_max[j],
                                                           static_lb[j]);
                delta += next - contrib[j];
            }
            if (lower_bound + delta > best_cost) break;

            std::vector<std::pair<int, std::pair<int, std::int64_t>>> saved;
            for (int j : bundles_of[v]) {
                saved.push_back({j, {cur_max[j], contrib[j]}});
                if (k > cur_max[j]) {
                    cur_max[j] = k;
                    std::int64_t next =
                        instance.bundles[j].weight *
                        std::max<std::int64_t>(cur_max[j], static_lb[j]);
                    lower_bound += next - contrib[j];
                    contrib[j] = next;
                }
            }
            colors[v] = k;
            dfs(idx + 1);
            colors[v] = 0;
            for (auto it = saved.rbegin(); it != saved.rend(); ++it) {
                int j = it->first;
                lower_bound -= contrib[j] - it->second.second;
                cur_max[j] = it->second.first;
                contrib[j] = it->second.second;
            }
        }
    }
};

std::vector<int> degree_order(const Graph& g) {
    auto deg = g.degrees();
    std::vector<int> order(g.vertex_count);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return deg[a] != deg[b] ? deg[a] > deg[b] : a < b; });
    return order;
}

// Greedy proper coloring in the given order, or nullopt if it violates
// the caps. Used only to seed the incumbent; the search still visits
// every optimum.
std::optional<Coloring> greedy_within_caps(const Graph& g, const std::vector<int>& order,
                                           const std::vector<int>& cap) {
    auto adj = g.adjacency();
    Coloring colors(g.vertex_count, 0);
    for (int v : order) {
        std::vector<char> used(g.vertex_count + 2, 0);
        for (int u : adj[v]) {
            if (colors[u] >= 1 && colors[u] <= g.vertex_count + 1) used[colors[u]] = 1;
        }
        int k = 1;
        while (used[k]) ++k;
        if (k > cap[v]) return std::nullopt;
        colors[v] = k;
    }
    return colors;
}

}  // namespace

SolveResult solve_bruteforce(const Instance& instance, const OracleConfig& config) {
    auto started = std::chrono::steady_clock::now();
    if (config.color_cap && *config.color_cap < 1) {
        throw Error("color cap must be positive");
    }
    SearchContext ctx(instance);
    ctx.node_limit = config.node_limit;
    ctx.order = degree_order(instance.graph);

    auto deg = instance.graph.degrees();
    ctx.cap.resize(instance.graph.vertex_count);
    for (int v = 0; v < instance.graph.vertex_count; ++v) {
        ctx.cap[v] = deg[v] + 1;
        if (config.color_cap) ctx.cap[v] = std::min(ctx.cap[v], *config.color_cap);
        if (ctx.cap[v] < 1) throw Error("vertex " + std::to_string(v) + " has color cap 0");
    }

    if (auto seed = greedy_within_caps(instance.graph, ctx.order, ctx.cap)) {
        ctx.consider(*seed, cost(instance, *seed));
    }
    ctx.dfs(0);
    if (ctx.best_cost == std::numeric_limits<std::int64_t>::max()) {
        throw Error("no proper coloring within the color cap");
    }

    SolveStats stats;
    stats.search_nodes = ctx.nodes;
    stats.elapsed_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - started)
                           .count();
    return finalize_result(instance, std::move(ctx.best_colors), "oracle", stats);
}

namespace {

// Minimum cost over colorings with every color <= cap (no per-vertex
// degree restriction), or nullopt if no proper coloring fits.
std::optional<std::int64_t> min_cost_within_cap(const Instance& instance, int cap,
                                                std::int64_t* nodes_out) {
    SearchContext ctx(instance);
    ctx.order.resize(instance.graph.vertex_count);
    std::iota(ctx.order.begin(), ctx.order.end(), 0);
    ctx.cap.assign(instance.graph.vertex_count, cap);
    ctx.dfs(0);
    if (nodes_out) *nodes_out += ctx.nodes;
    if (ctx.best_cost == std::numeric_limits<std::int64_t>::max()) return std::nullopt;
    return ctx.best_cost;
}

void collect_optima(const Instance& instance, int cap, std::int64_t target,
                    std::vector<std::vector<int>>& bundles_of, std::vector<std::vector<int>>& adj,
                    Coloring& colors, std::vector<int>& cur_max, std::int64_t partial,
                    int v, std::vector<Coloring>& out) {
    const int n = instance.graph.vertex_count;
    if (v == n) {
        if (partial == target) out.push_back(colors);
        return;
    }
    for (int k = 1; k <= cap; ++k) {
        bool conflict = false;
        for (int u : adj[v]) {
            if (colors[u] == k) {
                conflict = true;
                break;
            }
        }
        if (conflict) continue;
        // partial counts untouched bundles at 1, so delta is the rise of
        // max(cur, 1) to max(cur, k) over bundles containing v.
        std::int64_t delta = 0;
        std::vector<std::pair<int, int>> saved;
        for (int j : bundles_of[v]) {
            int before = std::max(cur_max[j], 1);
            int after = std::max({cur_max[j], k, 1});
            delta += instance.bundles[j].weight * static_cast<std::int64_t>(after - before);
        }
        if (partial + delta > target) break;
        for (int j : bundles_of[v]) {
            saved.push_back({j, cur_max[j]});
            cur_max[j] = std::max(cur_max[j], k);
        }
        colors[v] = k;
        collect_optima(instance, cap, target, bundles_of, adj, colors, cur_max,
                       partial + delta, v + 1, out);
        colors[v] = 0;
        for (auto it = saved.rbegin(); it != saved.rend(); ++it) cur_max[it->first] = it->second;
    }
}

}  // namespace

std::vector<Coloring> enumerate_optimal(const Instance& instance, int color_cap) {
    if (color_cap < 1) throw Error("color cap must be positive");
    auto opt = min_cost_within_cap(instance, color_cap, nullptr);
    if (!opt) throw Error("no proper coloring within the color cap");

    const int n = instance.graph.vertex_count;
    std::vector<std::vector<int>> bundles_of(n);
    for (int j = 0; j < static_cast<int>(instance.bundles.size()); ++j) {
        for (int v : instance.bundles[j].members) bundles_of[v].push_back(j);
    }
    auto adj = instance.graph.adjacency();
    Coloring colors(n, 0);
    std::vector<int> cur_max(instance.bundles.size(), 0);
    std::int64_t base = 0;
    for (const Bundle& b : instance.bundles) base += b.weight;  // every max is at least 1
    std::vector<Coloring> out;
    collect_optima(instance, color_cap, *opt, bundles_of, adj, colors, cur_max, base, 0, out);
    return out;
}

namespace {

struct MisContext {
    std::vector<std::uint32_t> nbr;
    int best = -1;
    std::uint32_t best_set = 0;

    void rec(std::uint32_t candidates, int size, std::uint32_t chosen) {
        if (size + __builtin_popcount(candidates) <= best) return;
        if (candidates == 0) {
            if (size > best) {
                best = size;
                best_set = chosen;
            }
            return;
        }
        int v = __builtin_ctz(candidates);
        std::uint32_t bit = 1u << v;
        rec(candidates & ~(nbr[v] | bit), size + 1, chosen | bit);
        rec(candidates & ~bit, size, chosen);
    }
};

}  // namespace

IndependentSetResult max_independent_set(const Graph& graph) {
    const int n = graph.vertex_count;
    if (n > 30) throw Error("max_independent_set supports at most 30 vertices");
    MisContext ctx;
    ctx.nbr.assign(n, 0);
    for (const auto& [u, v] : graph.edges) {
        ctx.nbr[u] |= 1u << v;
        ctx.nbr[v] |= 1u << u;
    }
    std::uint32_t all = n == 0 ? 0 : ((1u << n) - 1);
    ctx.rec(all, 0, 0);
    IndependentSetResult result;
    result.size = std::max(ctx.best, 0);
    for (int v = 0; v < n; ++v) {
        if (ctx.best_set & (1u << v)) result.vertices.push_back(v);
    }
    return result;
}

std::optional<Coloring> list_coloring_feasible(const Graph& graph,
                                               const std::vector<std::vector<int>>& lists) {
    const int n = graph.vertex_count;
    for (const auto& list : lists) {
        if (list.empty()) return std::nullopt;
    }
    auto adj = graph.adjacency();
    Coloring colors(n, 0);
    std::vector<std::vector<int>> sorted_lists = lists;
    for (auto& list : sorted_lists) std::sort(list.begin(), list.end());

    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int k : sorted_lists[v]) {
            bool conflict = false;
            for (int u : adj[v]) {
                if (colors[u] == k) {
                    conflict = true;
                    break;
                }
            }
            if (conflict) continue;
            colors[v] = k;
            if (self(self, v + 1)) return true;
            colors[v] = 0;
        }
        return false;
    };
    if (rec(rec, 0)) return colors;
    return std::nullopt;
}

int chromatic_number(const Graph& graph) {
    const int n = graph.vertex_count;
    if (n == 0) return 0;
    auto adj = graph.adjacency();
    Coloring colors(n, 0);
    // Canonical search: a vertex may open at most one fresh color.
    auto feasible = [&](auto&& self, int v, int used, int limit) -> bool {
        if (v == n) return true;
        int top = std::min(used + 1, limit);
        for (int k = 1; k <= top; ++k) {
            bool conflict = false;
            for (int u : adj[v]) {
                if (colors[u] == k) {
                    conflict = true;
                    break;
                }
            }
            if (conflict) continue;
            colors[v] = k;
            if (self(self, v + 1, std::max(used, k), limit)) return true;
            colors[v] = 0;
        }
        return false;
    };
    for (int k = 1; k <= n; ++k) {
        std::fill(colors.begin(), colors.end(), 0);
        if (feasible(feasible, 0, 0, k)) return k;
    }
    return n;
}

}  // namespace mscb
