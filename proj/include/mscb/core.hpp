#ifndef MSCB_CORE_HPP
#define MSCB_CORE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mscb/graph.hpp"

namespace mscb {

/// Colors are positive integers; 0 marks an uncolored vertex.
using Coloring = std::vector<int>;

struct Bundle {
    std::int64_t weight = 1;
    std::vector<int> members;

    friend bool operator==(const Bundle&, const Bundle&) = default;
};

/// A minimum-sum-coloring-with-bundles instance. The objective of a
/// proper coloring c is sum_j weight_j * max{c(v) : v in bundle j};
/// the optional budget turns the optimization problem into a decision
/// problem (cost <= budget?).
///
/// Bundles are ordered; a bundle's identity is its position. Bundles may
/// overlap and may repeat; every vertex must lie in at least one bundle.
struct Instance {
    Graph graph;
    std::vector<Bundle> bundles;
    std::optional<std::int64_t> budget;

    friend bool operator==(const Instance&, const Instance&) = default;
};

/// Structural facts about an instance, used to pick a solver.
struct InstanceClass {
    bool is_tree = false;
    bool is_path = false;
    bool is_bipartite = false;
    bool is_perfect_matching = false;
    bool bundles_partition = false;
    bool bundles_connected = false;
    bool bundles_independent = false;
    bool weights_uniform = false;
    int n = 0;
    int bundle_count = 0;
    int non_singleton_count = 0;
};

struct SolveStats {
    std::int64_t search_nodes = 0;
    std::int64_t dp_cells = 0;
    double elapsed_ms = 0.0;
};

struct SolveResult {
    std::int64_t cost = 0;
    Coloring coloring;
    std::vector<int> bundle_maxes;
    std::string solver;
    bool optimal = true;
    SolveStats stats;
};

/// Returns a description of every violated instance invariant; empty
/// means the instance is valid.
std::vector<std::string> validate_instance(const Instance& instance);

/// Weighted sum of per-bundle maximum colors. The coloring must be total
/// and proper; otherwise InvalidWitnessError.
std::int64_t cost(const Instance& instance, const Coloring& coloring);

/// Maximum color among members of bundle j. Throws std::out_of_range for
/// a bad index and InvalidWitnessError if a member is uncolored.
int bundle_max(const Instance& instance, const Coloring& coloring, int j);

/// Decision answer cost <= budget for an optimal result. The instance
/// must carry a budget and the result must be flagged optimal.
bool decide(const Instance& instance, const SolveResult& result);

InstanceClass classify(const Instance& instance);

/// True iff every vertex is colored and no edge is monochromatic.
bool is_total_proper(const Graph& graph, const Coloring& coloring);

/// Builds a SolveResult from a witness, re-deriving cost and bundle
/// maxima from the coloring itself so a buggy solver cannot report a
/// cost its witness does not attain.
SolveResult finalize_result(const Instance& instance, Coloring coloring,
                            std::string solver, SolveStats stats, bool optimal = true);

}  // namespace mscb

#endif
