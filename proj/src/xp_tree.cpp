#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <queue>
#include <set>

#include "mscb/errors.hpp"
#include "mscb/tree_solvers.hpp"

namespace mscb {

namespace {

struct XpProblem {
    const Instance& instance;
    RootedTree tree;
    std::vector<int> deg;
    std::vector<int> bundle_of;        // vertex -> bundle index
    std::vector<char> is_singleton;    // per vertex
    std::vector<std::int64_t> singleton_weight;  // per vertex, 0 if non-singleton
    std::vector<int> nonsingleton;     // bundle indices, family order
    std::vector<int> cap_index;        // bundle -> position in nonsingleton, or -1
    int color_limit = 0;               // 2 * ell
    std::int64_t infinity = 0;

    int domain_top(int v) const { return std::min(color_limit, deg[v] + 1); }
};

// f[v][k] for one cap vector: minimum singleton cost over colorings of
// the subtree of v with c(v) = k and every non-singleton bundle capped.
using Tables = std::vector<std::vector<std::int64_t>>;

struct Evaluation {
    std::int64_t total = 0;   // singleton optimum + sum w_j * k_j
    int root_color = 0;
    Tables tables;
};

Evaluation evaluate(const XpProblem& p, const std::vector<int>& caps, std::int64_t* cells) {
    const auto& tree = p.tree;
    Evaluation eval;
    eval.tables.assign(tree.parent.size(), {});

    for (int v : tree.postorder) {
        int top = p.domain_top(v);
        if (!p.is_singleton[v]) top = std::min(top, caps[p.cap_index[p.bundle_of[v]]]);
        auto& fv = eval.tables[v];
        fv.assign(p.domain_top(v) + 1, p.infinity);
        if (cells) *cells += p.domain_top(v);

        // Per-child best and second-best over colors, so the min over
        // k' != k costs O(1) per child.
        struct ChildMin {
            std::int64_t best = 0, second = 0;
            int best_color = 0;
        };
        std::vector<ChildMin> mins;
        mins.reserve(tree.children[v].size());
        bool dead_child = false;
        for (int child : tree.children[v]) {
            ChildMin cm;
            cm.best = cm.second = p.infinity;
            const auto& fc = eval.tables[child];
            for (int k = 1; k < static_cast<int>(fc.size()); ++k) {
                if (fc[k] < cm.best) {
                    cm.second = cm.best;
                    cm.best = fc[k];
                    cm.best_color = k;
                } else if (fc[k] < cm.second) {
                    cm.second = fc[k];
                }
            }
            if (cm.best >= p.infinity) dead_child = true;
            mins.push_back(cm);
        }

        for (int k = 1; k <= top; ++k) {
            std::int64_t value = p.is_singleton[v] ? p.singleton_weight[v] * k : 0;
            if (dead_child) continue;
            bool dead = false;
            for (const auto& cm : mins) {
                std::int64_t pick = cm.best_color != k ? cm.best : cm.second;
                if (pick >= p.infinity) {
                    dead = true;
                    break;
                }
                value += pick;
            }
            if (!dead) fv[k] = std::min(value, p.infinity);
        }
    }

    const auto& froot = eval.tables[tree.root];
    std::int64_t best = p.infinity;
    int best_color = 0;
    for (int k = 1; k < static_cast<int>(froot.size()); ++k) {
        if (froot[k] < best) {
            best = froot[k];
            best_color = k;
        }
    }
    eval.total = best;
    eval.root_color = best_color;
    if (best < p.infinity) {
        for (std::size_t j = 0; j < caps.size(); ++j) {
            eval.total += p.instance.bundles[p.nonsingleton[j]].weight * caps[j];
        }
    }
    return eval;
}

Coloring extract_witness(const XpProblem& p, const std::vector<int>& caps,
                         const Evaluation& eval) {
    Coloring colors(p.tree.parent.size(), 0);
    colors[p.tree.root] = eval.root_color;
    for (auto it = p.tree.postorder.rbegin(); it != p.tree.postorder.rend(); ++it) {
        int v = *it;
        for (int child : p.tree.children[v]) {
            const auto& fc = eval.tables[child];
            int pick = 0;
            std::int64_t best = p.infinity;
            for (int k = 1; k < static_cast<int>(fc.size()); ++k) {
                if (k != colors[v] && fc[k] < best) {
                    best = fc[k];
                    pick = k;
                }
            }
            colors[child] = pick;
        }
    }
    (void)caps;
    return colors;
}

struct CapEntry {
    std::int64_t objective;
    std::vector<int> caps;

    bool operator>(const CapEntry& other) const {
        if (objective != other.objective) return objective > other.objective;
        return caps > other.caps;
    }
};

}  // namespace

SolveResult solve_xp_tree(const Instance& instance) {
    auto started = std::chrono::steady_clock::now();
    const Graph& g = instance.graph;
    if (!is_tree(g)) throw UnsupportedInstanceError("solve_xp_tree requires a tree");
    InstanceClass cls = classify(instance);
    if (!cls.bundles_partition) {
        throw UnsupportedInstanceError("solve_xp_tree requires a bundle partition");
    }

    XpProblem p{instance, RootedTree::build(g, 0), g.degrees(), {}, {}, {}, {}, {}, 0, 0};
    const int ell = static_cast<int>(instance.bundles.size());
    p.color_limit = 2 * ell;
    p.bundle_of.assign(g.vertex_count, -1);
    p.is_singleton.assign(g.vertex_count, 0);
    p.singleton_weight.assign(g.vertex_count, 0);
    p.cap_index.assign(ell, -1);
    for (int j = 0; j < ell; ++j) {
        const Bundle& b = instance.bundles[j];
        for (int v : b.members) p.bundle_of[v] = j;
        if (b.members.size() == 1) {
            p.is_singleton[b.members.front()] = 1;
            p.singleton_weight[b.members.front()] = b.weight;
        } else {
            p.cap_index[j] = static_cast<int>(p.nonsingleton.size());
            p.nonsingleton.push_back(j);
        }
    }
    const int t = static_cast<int>(p.nonsingleton.size());

    std::int64_t reachable = 0;
    for (const Bundle& b : instance.bundles) reachable += b.weight * p.color_limit;
    p.infinity = reachable + 1;

    // Cap values above max_{v in B_j}(deg(v)+1) are dominated: some
    // optimal coloring keeps every vertex below its degree bound.
    std::vector<int> cap_top(t);
    for (int idx = 0; idx < t; ++idx) {
        int dmax = 1;
        for (int v : instance.bundles[p.nonsingleton[idx]].members) {
            dmax = std::max(dmax, p.deg[v] + 1);
        }
        cap_top[idx] = std::min(p.color_limit, dmax);
    }

    SolveStats stats;

    // Loosest caps: their singleton optimum lower-bounds every vector's,
    // and the achieved bundle maxima seed a strong incumbent.
    Evaluation loose = evaluate(p, cap_top, &stats.dp_cells);
    ++stats.search_nodes;
    std::int64_t unconstrained_singletons = loose.total;
    for (int idx = 0; idx < t; ++idx) {
        unconstrained_singletons -= instance.bundles[p.nonsingleton[idx]].weight * cap_top[idx];
    }

    std::vector<int> best_caps = cap_top;
    Evaluation best_eval = std::move(loose);
    std::int64_t best_total;
    if (t > 0) {
        Coloring loose_witness = extract_witness(p, cap_top, best_eval);
        std::vector<int> achieved(t, 1);
        for (int idx = 0; idx < t; ++idx) {
            for (int v : instance.bundles[p.nonsingleton[idx]].members) {
                achieved[idx] = std::max(achieved[idx], loose_witness[v]);
            }
        }
        Evaluation seeded = evaluate(p, achieved, &stats.dp_cells);
        ++stats.search_nodes;
        best_caps = achieved;
        best_eval = std::move(seeded);
    }
    best_total = best_eval.total;

    if (t > 0) {
        std::priority_queue<CapEntry, std::vector<CapEntry>, std::greater<>> frontier;
        std::set<std::vector<int>> visited;
        std::vector<int> ones(t, 1);
        std::int64_t ones_objective = 0;
        for (int idx = 0; idx < t; ++idx) {
            ones_objective += instance.bundles[p.nonsingleton[idx]].weight;
        }
        frontier.push({ones_objective, ones});
        visited.insert(ones);

        while (!frontier.empty()) {
            auto [objective, caps] = frontier.top();
            frontier.pop();
            // Every evaluation is at least the cap cost plus the
            // unconstrained singleton optimum.
            if (objective + unconstrained_singletons > best_total) break;

            Evaluation eval = evaluate(p, caps, &stats.dp_cells);
            ++stats.search_nodes;
            if (eval.total < best_total ||
                (eval.total == best_total && caps < best_caps)) {
                best_total = eval.total;
                best_caps = caps;
                best_eval = std::move(eval);
            }

            for (int idx = 0; idx < t; ++idx) {
                if (caps[idx] >= cap_top[idx]) continue;
                auto next = caps;
                ++next[idx];
                if (visited.insert(next).second) {
                    frontier.push(
                        {objective + instance.bundles[p.nonsingleton[idx]].weight, next});
                }
            }
        }
    }

    Coloring witness = extract_witness(p, best_caps, best_eval);
    stats.elapsed_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - started)
                           .count();
    return finalize_result(instance, std::move(witness), "xp-tree", stats);
}

}  // namespace mscb
