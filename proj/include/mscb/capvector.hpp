#ifndef MSCB_CAPVECTOR_HPP
#define MSCB_CAPVECTOR_HPP

#include <optional>

#include "mscb/core.hpp"

namespace mscb {

/// Per-bundle upper bounds k_1..k_ell on the maximum color.
struct CapVector {
    std::vector<int> caps;

    friend bool operator==(const CapVector&, const CapVector&) = default;
};

/// Per-vertex cap: the minimum cap over bundles containing the vertex.
std::vector<int> vertex_caps(const Instance& instance, const CapVector& caps);

/// Upper bound on the largest color any optimal coloring can use:
/// U * ell, where U bounds the chromatic number (1 for edgeless graphs,
/// 2 for bipartite graphs with an edge, degeneracy+1 otherwise).
int color_bound(const Instance& instance);

/// Decides, for a tree, whether some proper coloring respects every
/// bundle cap; returns a witness built from smallest valid colors.
std::optional<Coloring> cap_feasible_tree(const Instance& instance, const CapVector& caps);

/// Same decision for arbitrary graphs by backtracking. Exponential in
/// the worst case; meant for small instances and tests.
std::optional<Coloring> cap_feasible_generic(const Instance& instance, const CapVector& caps,
                                             std::optional<std::int64_t> node_limit = {});

/// Exact solve by best-first enumeration of cap vectors ordered by
/// sum_j weight_j * k_j, stopping at the first feasible vector.
SolveResult solve_capvector(const Instance& instance);

}  // namespace mscb

#endif
