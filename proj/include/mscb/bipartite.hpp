#ifndef MSCB_BIPARTITE_HPP
#define MSCB_BIPARTITE_HPP

#include "mscb/core.hpp"

namespace mscb {

/// The two color classes of one connected component's 2-coloring.
/// side_a is the side containing the component's smallest vertex id.
struct ComponentSides {
    std::vector<int> side_a;
    std::vector<int> side_b;
    bool edgeless = false;
};

/// Per-component sides in order of each component's smallest vertex.
/// Throws UnsupportedInstanceError when an odd cycle exists.
std::vector<ComponentSides> bipartite_sides(const Graph& graph);

/// Exact solver for bipartite instances with at most two bundles, by
/// evaluating min{2w1+2w2, w1+gamma2*w2, gamma1*w1+w2}.
SolveResult solve_bipartite_two(const Instance& instance);

/// Exact solver for bipartite instances with at most three bundles and
/// uniform weights: guess the set of bundles pinned to color 1, then
/// extend per component with bounded palette patterns.
SolveResult solve_bipartite_three_uniform(const Instance& instance);

}  // namespace mscb

#endif
