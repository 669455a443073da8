#ifndef MSCB_TREE_SOLVERS_HPP
#define MSCB_TREE_SOLVERS_HPP

#include "mscb/core.hpp"

namespace mscb {

/// Rooted view of a tree graph: parents, children (ascending by id) and
/// a postorder sequence for bottom-up table fills.
struct RootedTree {
    int root = 0;
    std::vector<int> parent;
    std::vector<std::vector<int>> children;
    std::vector<int> postorder;

    static RootedTree build(const Graph& graph, int root);
};

/// Exact solver for trees whose bundle family partitions the vertex set.
/// Caps on the maximum color of each non-singleton bundle are enumerated
/// best-first; for fixed caps a bottom-up table optimizes the singleton
/// colors. Runs in O((2 ell)^t n ell^2) in the worst case, where t is
/// the number of non-singleton bundles.
SolveResult solve_xp_tree(const Instance& instance);

/// Exact solver for trees whose bundle family is a connected partition.
/// Tables f(v, k, g) are indexed by the color of v and the maximum color
/// inside v's bundle below v; per-child minima are maintained as running
/// aggregates so a cell costs amortized constant time per child.
SolveResult solve_connected_partition_tree(const Instance& instance);

/// Exact solver for paths where every bundle is a contiguous segment
/// (overlapping families allowed). Witnesses use colors {1,2,3} only.
SolveResult solve_connected_path(const Instance& instance);

/// The filled connected-partition tables, exposed for diagnostics.
/// values[v] is indexed k * (n+1) + g with k in 1..color_limit[v],
/// g in 1..n; cells with k > g hold `infinity`.
struct ConnTreeTables {
    RootedTree tree;
    std::vector<int> color_limit;
    std::vector<std::vector<std::int64_t>> values;
    std::int64_t infinity = 0;
};

ConnTreeTables connected_partition_tables(const Instance& instance);

}  // namespace mscb

#endif
