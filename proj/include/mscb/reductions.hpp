#ifndef MSCB_REDUCTIONS_HPP
#define MSCB_REDUCTIONS_HPP

#include <utility>

#include "mscb/core.hpp"

namespace mscb {

/// Bipartite list-coloring input: per-vertex allowed colors from {1,2,3}.
struct ListColoringInstance {
    Graph graph;
    std::vector<std::vector<int>> lists;

    friend bool operator==(const ListColoringInstance&, const ListColoringInstance&) = default;
};

/// Records how source entities map into a reduction's output, so tests
/// can translate witnesses back and forth.
struct ReductionTrace {
    std::vector<std::vector<int>> vertex_images;  // source vertex -> target vertices
    std::vector<std::vector<int>> bundle_images;  // source bundle (or vertex) -> target bundles
    std::int64_t target_budget = 0;
};

/// Independent Set (graph, k) -> perfect-matching instance with one
/// vertex per incidence, one bundle per source vertex, unit weights and
/// budget 2|V| - k. Source graphs with isolated vertices are rejected
/// because the isolated vertex would yield an empty bundle.
std::pair<Instance, ReductionTrace> reduce_is_to_matching(const Graph& graph, int k);

/// Perfect-matching instance (independent partition, unit weights,
/// budget C) -> path instance on 12n-1 vertices made of four copies
/// chained by connector vertices, with budget 4C + 3.
std::pair<Instance, ReductionTrace> reduce_matching_to_path(const Instance& instance);

/// Bipartite 3-list-coloring -> bipartite instance with four unit-weight
/// bundles and budget 7.
std::pair<Instance, ReductionTrace> reduce_listcol_to_bipartite4(const ListColoringInstance& lc);

/// Bipartite 3-list-coloring -> bipartite instance with three bundles of
/// weights (2,1,1) and budget 7.
std::pair<Instance, ReductionTrace> reduce_listcol_to_bipartite3_weighted(
    const ListColoringInstance& lc);

}  // namespace mscb

#endif
