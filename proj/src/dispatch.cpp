#include "mscb/dispatch.hpp"

#include <cmath>

#include "mscb/bipartite.hpp"
#include "mscb/capvector.hpp"
#include "mscb/errors.hpp"
#include "mscb/oracle.hpp"
#include "mscb/tree_solvers.hpp"

namespace mscb {

namespace {

constexpr int kXpMaxNonSingleton = 4;
constexpr int kCapvectorMaxBundles = 6;
constexpr double kOracleMaxSearchSpace = 2e7;

bool oracle_tractable(const Instance& instance) {
    double log_space = 0.0;
    for (int d : instance.graph.degrees()) log_space += std::log2(d + 1.0);
    return log_space <= std::log2(kOracleMaxSearchSpace);
}

SolveResult verified(const Instance& instance, SolveResult result) {
    if (cost(instance, result.coloring) != result.cost) {
        throw Error("solver returned a witness that does not match its cost");
    }
    return result;
}

}  // namespace

SolveResult dispatch(const Instance& instance) {
    auto violations = validate_instance(instance);
    if (!violations.empty()) {
        throw Error("invalid instance: " + violations.front());
    }
    InstanceClass cls = classify(instance);

    if (cls.is_path && cls.bundles_connected) {
        return verified(instance, solve_connected_path(instance));
    }
    if (cls.is_tree && cls.bundles_partition && cls.bundles_connected) {
        return verified(instance, solve_connected_partition_tree(instance));
    }
    if (cls.is_tree && cls.bundles_partition && cls.non_singleton_count <= kXpMaxNonSingleton) {
        return verified(instance, solve_xp_tree(instance));
    }
    if (cls.is_tree && cls.bundle_count <= kCapvectorMaxBundles) {
        return verified(instance, solve_capvector(instance));
    }
    if (cls.is_bipartite && cls.bundle_count <= 2) {
        return verified(instance, solve_bipartite_two(instance));
    }
    if (cls.is_bipartite && cls.bundle_count <= 3 && cls.weights_uniform) {
        return verified(instance, solve_bipartite_three_uniform(instance));
    }
    if (oracle_tractable(instance)) {
        return verified(instance, solve_bruteforce(instance));
    }
    throw UnsupportedInstanceError("no applicable exact solver for this instance");
}

SolveResult solve_with(const Instance& instance, const std::string& algo) {
    if (algo == "auto") return dispatch(instance);
    auto violations = validate_instance(instance);
    if (!violations.empty()) {
        throw Error("invalid instance: " + violations.front());
    }
    if (algo == "oracle") return solve_bruteforce(instance);
    if (algo == "capvector") return solve_capvector(instance);
    if (algo == "xp-tree") return solve_xp_tree(instance);
    if (algo == "connected-tree") return solve_connected_partition_tree(instance);
    if (algo == "connected-path") return solve_connected_path(instance);
    if (algo == "bip2") return solve_bipartite_two(instance);
    if (algo == "bip3u") return solve_bipartite_three_uniform(instance);
    throw Error("unknown algorithm '" + algo + "'");
}

}  // namespace mscb
