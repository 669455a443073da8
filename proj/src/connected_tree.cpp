#include <algorithm>
#include <chrono>
#include <limits>

#include "mscb/errors.hpp"
#include "mscb/tree_solvers.hpp"

namespace mscb {

namespace {

struct ConnProblem {
    const Instance& instance;
    RootedTree tree;
    std::vector<int> bundle_of;
    std::vector<int> klim;  // per-vertex color limit min(n, deg+1)
    std::int64_t infinity = 0;
    int n = 0;

    std::int64_t weight_at(int v) const { return instance.bundles[bundle_of[v]].weight; }
};

struct BestTwo {
    std::int64_t best, second;
    int best_color;
};

// f(v, k, g): cheapest cost over colorings of v's subtree with
// c(v) = k and maximum color g inside v's bundle below v.
struct ConnFill {
    const ConnProblem& p;
    std::vector<std::vector<std::int64_t>> tables;  // v -> k*(n+1)+g
    std::int64_t cells = 0;

    explicit ConnFill(const ConnProblem& problem) : p(problem) {
        tables.assign(p.n, {});
        for (int v : p.tree.postorder) fill_vertex(v);
    }

    std::int64_t at(int v, int k, int g) const {
        if (k < 1 || k > p.klim[v] || g < 1 || g > p.n) return p.infinity;
        return tables[v][static_cast<std::size_t>(k) * (p.n + 1) + g];
    }

    std::int64_t add(std::int64_t a, std::int64_t b) const {
        if (a >= p.infinity || b >= p.infinity) return p.infinity;
        return std::min(a + b, p.infinity);
    }

    // min over k' != k of the child's per-color aggregate.
    static std::int64_t pick(const BestTwo& bt, int k, std::int64_t infinity) {
        std::int64_t value = bt.best_color != k ? bt.best : bt.second;
        return std::min(value, infinity);
    }

    void fill_vertex(int v) {
        auto& fv = tables[v];
        fv.assign(static_cast<std::size_t>(p.klim[v] + 1) * (p.n + 1), p.infinity);
        cells += static_cast<std::int64_t>(p.klim[v]) * p.n;

        const auto& children = p.tree.children[v];
        if (children.empty()) {
            for (int k = 1; k <= p.klim[v]; ++k) {
                fv[static_cast<std::size_t>(k) * (p.n + 1) + k] = p.weight_at(v) * k;
            }
            return;
        }

        std::vector<int> inside, outside;  // children sharing v's bundle / the rest
        for (int u : children) {
            (p.bundle_of[u] == p.bundle_of[v] ? inside : outside).push_back(u);
        }

        // Outside children: best/second over colors of min_g f(u, k', g).
        std::vector<BestTwo> out_min;
        out_min.reserve(outside.size());
        for (int u : outside) {
            BestTwo bt{p.infinity, p.infinity, 0};
            for (int k2 = 1; k2 <= p.klim[u]; ++k2) {
                std::int64_t m = p.infinity;
                for (int g2 = 1; g2 <= p.n; ++g2) m = std::min(m, at(u, k2, g2));
                if (m < bt.best) {
                    bt.second = bt.best;
                    bt.best = m;
                    bt.best_color = k2;
                } else if (m < bt.second) {
                    bt.second = m;
                }
            }
            out_min.push_back(bt);
        }

        // Inside children: running prefix aggregates over g.
        //   rebated(u)[g]: best/second over k' of min_{g'<=g} f(u,k',g') - w g'
        //   exact(u)[g]:   best/second over k' of f(u,k',g)
        std::vector<std::vector<BestTwo>> rebated(inside.size()), exact(inside.size());
        for (std::size_t i = 0; i < inside.size(); ++i) {
            int u = inside[i];
            std::vector<std::int64_t> prefix(p.klim[u] + 1, p.infinity);
            rebated[i].assign(p.n + 1, BestTwo{p.infinity, p.infinity, 0});
            exact[i].assign(p.n + 1, BestTwo{p.infinity, p.infinity, 0});
            for (int g = 1; g <= p.n; ++g) {
                BestTwo reb{p.infinity, p.infinity, 0};
                BestTwo exa{p.infinity, p.infinity, 0};
                for (int k2 = 1; k2 <= p.klim[u]; ++k2) {
                    std::int64_t fval = at(u, k2, g);
                    if (fval < p.infinity) {
                        prefix[k2] =
                            std::min(prefix[k2], fval - p.weight_at(u) * g);
                    }
                    if (prefix[k2] < reb.best) {
                        reb.second = reb.best;
                        reb.best = prefix[k2];
                        reb.best_color = k2;
                    } else if (prefix[k2] < reb.second) {
                        reb.second = prefix[k2];
                    }
                    if (fval < exa.best) {
                        exa.second = exa.best;
                        exa.best = fval;
                        exa.best_color = k2;
                    } else if (fval < exa.second) {
                        exa.second = fval;
                    }
                }
                rebated[i][g] = reb;
                exact[i][g] = exa;
            }
        }

        for (int k = 1; k <= p.klim[v]; ++k) {
            std::int64_t base_out = 0;
            for (const auto& bt : out_min) base_out = add(base_out, pick(bt, k, p.infinity));

            for (int g = k; g <= p.n; ++g) {
                std::int64_t base_in = 0;
                for (std::size_t i = 0; i < inside.size(); ++i) {
                    base_in = add(base_in, pick(rebated[i][g], k, p.infinity));
                }
                std::int64_t value;
                if (k == g) {
                    value = add(add(p.weight_at(v) * g, base_in), base_out);
                } else {
                    // One inside child realizes g exactly; swap its
                    // rebated term for the exact one.
                    std::int64_t best_swap = p.infinity;
                    for (std::size_t i = 0; i < inside.size(); ++i) {
                        std::int64_t reb = pick(rebated[i][g], k, p.infinity);
                        std::int64_t exa = pick(exact[i][g], k, p.infinity);
                        if (reb >= p.infinity || exa >= p.infinity || base_in >= p.infinity)
                            continue;
                        best_swap = std::min(best_swap, base_in - reb + exa);
                    }
                    value = add(best_swap, base_out);
                }
                fv[static_cast<std::size_t>(k) * (p.n + 1) + g] = value;
            }
        }
    }
};

ConnProblem make_problem(const Instance& instance) {
    const Graph& g = instance.graph;
    if (!is_tree(g)) {
        throw UnsupportedInstanceError("solve_connected_partition_tree requires a tree");
    }
    InstanceClass cls = classify(instance);
    if (!cls.bundles_partition || !cls.bundles_connected) {
        throw UnsupportedInstanceError(
            "solve_connected_partition_tree requires a connected partition");
    }
    ConnProblem p{instance, RootedTree::build(g, 0), {}, {}, 0, g.vertex_count};
    p.bundle_of.assign(p.n, -1);
    for (int j = 0; j < static_cast<int>(instance.bundles.size()); ++j) {
        for (int v : instance.bundles[j].members) p.bundle_of[v] = j;
    }
    auto deg = g.degrees();
    p.klim.resize(p.n);
    for (int v = 0; v < p.n; ++v) p.klim[v] = std::min(p.n, deg[v] + 1);
    std::int64_t reachable = 0;
    for (const Bundle& b : instance.bundles) reachable += b.weight * p.n;
    p.infinity = reachable + 1;
    return p;
}

struct ConnWitness {
    const ConnProblem& p;
    const ConnFill& fill;
    Coloring colors;

    void assign(int v, int k, int g) {
        colors[v] = k;
        const auto& children = p.tree.children[v];
        if (children.empty()) return;
        std::vector<int> inside, outside;
        for (int u : children) {
            (p.bundle_of[u] == p.bundle_of[v] ? inside : outside).push_back(u);
        }

        int forced = -1;  // inside child that must realize g exactly
        if (k < g) {
            std::int64_t best_delta = p.infinity;
            for (int u : inside) {
                std::int64_t reb = rebated_min(u, k, g);
                std::int64_t exa = exact_min(u, k, g);
                if (reb >= p.infinity || exa >= p.infinity) continue;
                if (exa - reb < best_delta) {
                    best_delta = exa - reb;
                    forced = u;
                }
            }
        }

        for (int u : outside) {
            auto [k2, g2] = argmin_free(u, k);
            assign(u, k2, g2);
        }
        for (int u : inside) {
            if (u == forced) {
                int k2 = argmin_exact(u, k, g);
                assign(u, k2, g);
            } else {
                auto [k2, g2] = argmin_rebated(u, k, g);
                assign(u, k2, g2);
            }
        }
    }

    std::int64_t rebated_min(int u, int k, int g) const {
        std::int64_t best = p.infinity;
        for (int k2 = 1; k2 <= p.klim[u]; ++k2) {
            if (k2 == k) continue;
            for (int g2 = 1; g2 <= g; ++g2) {
                std::int64_t fval = fill.at(u, k2, g2);
                if (fval < p.infinity) best = std::min(best, fval - p.weight_at(u) * g2);
            }
        }
        return best;
    }

    std::int64_t exact_min(int u, int k, int g) const {
        std::int64_t best = p.infinity;
        for (int k2 = 1; k2 <= p.klim[u]; ++k2) {
            if (k2 != k) best = std::min(best, fill.at(u, k2, g));
        }
        return best;
    }

    std::pair<int, int> argmin_rebated(int u, int k, int g) const {
        std::int64_t best = p.infinity;
        std::pair<int, int> arg{0, 0};
        for (int k2 = 1; k2 <= p.klim[u]; ++k2) {
            if (k2 == k) continue;
            for (int g2 = 1; g2 <= g; ++g2) {
                std::int64_t fval = fill.at(u, k2, g2);
                if (fval >= p.infinity) continue;
                std::int64_t value = fval - p.weight_at(u) * g2;
                if (value < best) {
                    best = value;
                    arg = {k2, g2};
                }
            }
        }
        return arg;
    }

    int argmin_exact(int u, int k, int g) const {
        std::int64_t best = p.infinity;
        int arg = 0;
        for (int k2 = 1; k2 <= p.klim[u]; ++k2) {
            if (k2 == k) continue;
            if (fill.at(u, k2, g) < best) {
                best = fill.at(u, k2, g);
                arg = k2;
            }
        }
        return arg;
    }

    std::pair<int, int> argmin_free(int u, int k) const {
        std::int64_t best = p.infinity;
        std::pair<int, int> arg{0, 0};
        for (int k2 = 1; k2 <= p.klim[u]; ++k2) {
            if (k2 == k) continue;
            for (int g2 = 1; g2 <= p.n; ++g2) {
                if (fill.at(u, k2, g2) < best) {
                    best = fill.at(u, k2, g2);
                    arg = {k2, g2};
                }
            }
        }
        return arg;
    }
};

}  // namespace

SolveResult solve_connected_partition_tree(const Instance& instance) {
    auto started = std::chrono::steady_clock::now();
    ConnProblem p = make_problem(instance);
    ConnFill fill(p);

    int best_k = 0, best_g = 0;
    std::int64_t best = p.infinity;
    for (int k = 1; k <= p.klim[p.tree.root]; ++k) {
        for (int g = k; g <= p.n; ++g) {
            if (fill.at(p.tree.root, k, g) < best) {
                best = fill.at(p.tree.root, k, g);
                best_k = k;
                best_g = g;
            }
        }
    }
    if (best >= p.infinity) throw Error("connected partition table has no finite root cell");

    ConnWitness witness{p, fill, Coloring(p.n, 0)};
    witness.assign(p.tree.root, best_k, best_g);

    SolveStats stats;
    stats.dp_cells = fill.cells;
    stats.elapsed_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - started)
                           .count();
    return finalize_result(instance, std::move(witness.colors), "connected-tree", stats);
}

ConnTreeTables connected_partition_tables(const Instance& instance) {
    ConnProblem p = make_problem(instance);
    ConnFill fill(p);
    ConnTreeTables tables;
    tables.tree = p.tree;
    tables.color_limit = p.klim;
    tables.values = std::move(fill.tables);
    tables.infinity = p.infinity;
    return tables;
}

}  // namespace mscb
