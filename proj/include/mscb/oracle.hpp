#ifndef MSCB_ORACLE_HPP
#define MSCB_ORACLE_HPP

#include <optional>

#include "mscb/core.hpp"

namespace mscb {

/// Knobs for the exhaustive reference solver. Without a color_cap each
/// vertex v ranges over 1..deg(v)+1, which is always enough for some
/// optimal coloring; a cap narrows that to 1..min(cap, deg(v)+1).
struct OracleConfig {
    std::optional<int> color_cap;
    std::optional<std::int64_t> node_limit;
};

/// Provably optimal solve by depth-first enumeration with
/// branch-and-bound. Intended for small instances only; every
/// polynomial solver in this library is tested against it.
/// Throws InconclusiveError if node_limit is hit and Error if the cap
/// admits no proper coloring at all.
SolveResult solve_bruteforce(const Instance& instance, const OracleConfig& config = {});

/// All total proper colorings with colors <= color_cap that attain the
/// minimum cost within that cap, in lexicographic order. Unlike
/// solve_bruteforce this does NOT restrict a vertex to deg+1 colors, so
/// universally quantified claims about optimal colorings can be checked.
std::vector<Coloring> enumerate_optimal(const Instance& instance, int color_cap);

struct IndependentSetResult {
    int size = 0;
    std::vector<int> vertices;
};

/// Exact maximum independent set (branch and bound, n <= ~24).
IndependentSetResult max_independent_set(const Graph& graph);

/// Witness for list coloring with lists over {1,2,3}, or nullopt.
std::optional<Coloring> list_coloring_feasible(const Graph& graph,
                                               const std::vector<std::vector<int>>& lists);

/// Exact chromatic number by iterative deepening on the color count.
int chromatic_number(const Graph& graph);

}  // namespace mscb

#endif
