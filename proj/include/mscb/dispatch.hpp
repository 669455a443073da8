#ifndef MSCB_DISPATCH_HPP
#define MSCB_DISPATCH_HPP

#include <string>

#include "mscb/core.hpp"

namespace mscb {

/// Picks the most specific exact solver the instance's class admits:
/// the path DP for paths with segment bundles, the connected-partition
/// tree DP, the cap-enumeration tree DP for partitions with few
/// non-singleton bundles, the cap-vector scheme for trees with few
/// bundles, the bipartite solvers, and finally the oracle under a size
/// guard. Throws UnsupportedInstanceError when nothing applies.
SolveResult dispatch(const Instance& instance);

/// Runs a solver by name: auto, oracle, capvector, xp-tree,
/// connected-tree, connected-path, bip2, bip3u.
SolveResult solve_with(const Instance& instance, const std::string& algo);

}  // namespace mscb

#endif
