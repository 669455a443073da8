#include "mscb/reductions.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "mscb/errors.hpp"

namespace mscb {

std::pair<Instance, ReductionTrace> reduce_is_to_matching(const Graph& graph, int k) {
    if (k < 1) throw Error("independent set threshold must be positive");
    auto deg = graph.degrees();
    for (int v = 0; v < graph.vertex_count; ++v) {
        if (deg[v] == 0) {
            throw UnsupportedInstanceError("isolated source vertex " + std::to_string(v) +
                                           " would yield an empty bundle");
        }
    }

    // Canonical edge ids: edges sorted by (min, max) endpoint.
    std::vector<std::pair<int, int>> sorted_edges;
    sorted_edges.reserve(graph.edges.size());
    for (auto [u, v] : graph.edges) sorted_edges.push_back(std::minmax(u, v));
    std::sort(sorted_edges.begin(), sorted_edges.end());

    // One target vertex per incidence, numbered by (vertex, edge id).
    std::map<std::pair<int, int>, int> incidence_id;
    ReductionTrace trace;
    trace.vertex_images.resize(graph.vertex_count);
    trace.bundle_images.resize(graph.vertex_count);
    int next_id = 0;
    for (int v = 0; v < graph.vertex_count; ++v) {
        for (int e = 0; e < static_cast<int>(sorted_edges.size()); ++e) {
            if (sorted_edges[e].first == v || sorted_edges[e].second == v) {
                incidence_id[{v, e}] = next_id;
                trace.vertex_images[v].push_back(next_id);
                ++next_id;
            }
        }
    }

    Instance target;
    target.graph.vertex_count = next_id;
    for (int e = 0; e < static_cast<int>(sorted_edges.size()); ++e) {
        auto [u, v] = sorted_edges[e];
        target.graph.edges.push_back({incidence_id[{u, e}], incidence_id[{v, e}]});
    }
    for (int v = 0; v < graph.vertex_count; ++v) {
        Bundle bundle;
        bundle.weight = 1;
        bundle.members = trace.vertex_images[v];
        target.bundles.push_back(std::move(bundle));
        trace.bundle_images[v] = {v};
    }
    target.budget = 2 * static_cast<std::int64_t>(graph.vertex_count) - k;
    trace.target_budget = *target.budget;
    return {std::move(target), std::move(trace)};
}

std::pair<Instance, ReductionTrace> reduce_matching_to_path(const Instance& instance) {
    InstanceClass cls = classify(instance);
    if (!cls.is_perfect_matching || !cls.bundles_partition || !cls.bundles_independent) {
        throw UnsupportedInstanceError(
            "reduce_matching_to_path requires a perfect matching with an independent partition");
    }
    for (const Bundle& b : instance.bundles) {
        if (b.weight != 1) {
            throw UnsupportedInstanceError("reduce_matching_to_path requires unit weights");
        }
    }
    if (!instance.budget) {
        throw UnsupportedInstanceError("reduce_matching_to_path requires a budget");
    }

    const int src_n = instance.graph.vertex_count;
    const int m = src_n / 2;  // matching edges
    std::vector<std::pair<int, int>> matching;
    matching.reserve(m);
    for (auto [u, v] : instance.graph.edges) matching.push_back(std::minmax(u, v));
    std::sort(matching.begin(), matching.end());

    // Relabel along the matching: sequence[2j], sequence[2j+1] form edge j.
    std::vector<int> sequence;
    sequence.reserve(src_n);
    for (auto [u, v] : matching) {
        sequence.push_back(u);
        sequence.push_back(v);
    }

    const int copies = 4;
    auto copy_id = [&](int copy, int src_vertex) { return copy * src_n + src_vertex; };
    const int x_base = copies * src_n;
    auto x_id = [&](int copy, int j) { return x_base + copy * (m - 1) + j; };
    const int y_base = x_base + copies * (m - 1);
    auto y_id = [&](int copy) { return y_base + copy; };

    Instance target;
    target.graph.vertex_count = y_base + 3;
    for (int copy = 0; copy < copies; ++copy) {
        for (int j = 0; j < m; ++j) {
            target.graph.edges.push_back(
                {copy_id(copy, sequence[2 * j]), copy_id(copy, sequence[2 * j + 1])});
            if (j + 1 < m) {
                target.graph.edges.push_back(
                    {copy_id(copy, sequence[2 * j + 1]), x_id(copy, j)});
                target.graph.edges.push_back(
                    {x_id(copy, j), copy_id(copy, sequence[2 * (j + 1)])});
            }
        }
        if (copy + 1 < copies) {
            target.graph.edges.push_back({copy_id(copy, sequence[src_n - 1]), y_id(copy)});
            target.graph.edges.push_back({y_id(copy), copy_id(copy + 1, sequence[0])});
        }
    }

    ReductionTrace trace;
    trace.vertex_images.resize(src_n);
    trace.bundle_images.resize(instance.bundles.size());
    for (int v = 0; v < src_n; ++v) {
        for (int copy = 0; copy < copies; ++copy) trace.vertex_images[v].push_back(copy_id(copy, v));
    }
    for (int copy = 0; copy < copies; ++copy) {
        for (std::size_t j = 0; j < instance.bundles.size(); ++j) {
            Bundle bundle;
            bundle.weight = 1;
            for (int v : instance.bundles[j].members) bundle.members.push_back(copy_id(copy, v));
            std::sort(bundle.members.begin(), bundle.members.end());
            trace.bundle_images[j].push_back(static_cast<int>(target.bundles.size()));
            target.bundles.push_back(std::move(bundle));
        }
    }
    Bundle connectors;
    connectors.weight = 1;
    for (int copy = 0; copy < copies; ++copy) {
        for (int j = 0; j < m - 1; ++j) connectors.members.push_back(x_id(copy, j));
    }
    for (int copy = 0; copy < 3; ++copy) connectors.members.push_back(y_id(copy));
    std::sort(connectors.members.begin(), connectors.members.end());
    target.bundles.push_back(std::move(connectors));

    target.budget = 4 * *instance.budget + 3;
    trace.target_budget = *target.budget;
    return {std::move(target), std::move(trace)};
}

namespace {

std::vector<int> normalized_list(const std::vector<int>& list) {
    std::vector<int> out = list;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void validate_listcol(const ListColoringInstance& lc) {
    if (static_cast<int>(lc.lists.size()) != lc.graph.vertex_count) {
        throw Error("list count does not match vertex count");
    }
    if (!bipartition(lc.graph)) {
        throw UnsupportedInstanceError("list coloring source must be bipartite");
    }
    for (const auto& list : lc.lists) {
        if (list.empty()) throw Error("empty color list");
        for (int c : list) {
            if (c < 1 || c > 3) throw Error("list color out of {1,2,3}");
        }
    }
}

}  // namespace

std::pair<Instance, ReductionTrace> reduce_listcol_to_bipartite4(const ListColoringInstance& lc) {
    validate_listcol(lc);
    const int n = lc.graph.vertex_count;

    // List classes, keyed by the sorted list.
    auto list_is = [&](int v, std::initializer_list<int> want) {
        return normalized_list(lc.lists[v]) == std::vector<int>(want);
    };

    // Copies per class, in the construction's listing order.
    // copy_slot[v][c] = target id of the c-th copy of v (c = 1,2,3).
    std::vector<std::array<int, 4>> copy_slot(n, {-1, -1, -1, -1});
    int next_id = n;
    auto add_copies = [&](std::initializer_list<int> cls, int which) {
        for (int v = 0; v < n; ++v) {
            if (list_is(v, cls)) copy_slot[v][which] = next_id++;
        }
    };
    add_copies({2}, 1);
    add_copies({3}, 1);
    add_copies({3}, 2);
    add_copies({3}, 3);
    add_copies({1, 3}, 1);
    add_copies({1, 3}, 2);
    add_copies({2, 3}, 1);

    const int aux_base = next_id;
    auto aux = [&](int i) { return aux_base + i - 1; };  // paper-style 1..16

    Instance target;
    target.graph.vertex_count = aux_base + 16;
    target.graph.edges = lc.graph.edges;
    for (int v = 0; v < n; ++v) {
        if (list_is(v, {2}) || list_is(v, {2, 3})) {
            target.graph.edges.push_back({v, copy_slot[v][1]});
        } else if (list_is(v, {3})) {
            target.graph.edges.push_back({v, copy_slot[v][2]});
            target.graph.edges.push_back({copy_slot[v][2], copy_slot[v][1]});
            target.graph.edges.push_back({v, copy_slot[v][3]});
        } else if (list_is(v, {1, 3})) {
            target.graph.edges.push_back({v, copy_slot[v][2]});
            target.graph.edges.push_back({copy_slot[v][2], copy_slot[v][1]});
        }
    }
    target.graph.edges.push_back({aux(1), aux(2)});
    target.graph.edges.push_back({aux(11), aux(12)});
    for (int i : {3, 4, 5, 7, 8, 9, 13, 14, 15}) {
        target.graph.edges.push_back({aux(i), aux(i + 1)});
    }

    Bundle b1, b2, b3, b4;
    b1.weight = b2.weight = b3.weight = b4.weight = 1;
    for (int v = 0; v < n; ++v) {
        if (list_is(v, {1})) b1.members.push_back(v);
        if (list_is(v, {2}) || list_is(v, {1, 2})) b2.members.push_back(v);
        if (list_is(v, {3}) || list_is(v, {1, 3}) || list_is(v, {2, 3}) ||
            list_is(v, {1, 2, 3})) {
            b3.members.push_back(v);
        }
        if (list_is(v, {2}) || list_is(v, {2, 3})) b1.members.push_back(copy_slot[v][1]);
        if (list_is(v, {3})) {
            b1.members.push_back(copy_slot[v][1]);
            b1.members.push_back(copy_slot[v][3]);
            b2.members.push_back(copy_slot[v][2]);
        }
        if (list_is(v, {1, 3})) {
            b1.members.push_back(copy_slot[v][1]);
            b2.members.push_back(copy_slot[v][2]);
        }
    }
    for (int i : {1, 3, 6}) b1.members.push_back(aux(i));
    for (int i : {2, 7, 10, 12}) b2.members.push_back(aux(i));
    for (int i : {4, 5, 8, 9, 14, 15}) b3.members.push_back(aux(i));
    for (int i : {11, 13, 16}) b4.members.push_back(aux(i));
    for (Bundle* b : {&b1, &b2, &b3, &b4}) std::sort(b->members.begin(), b->members.end());
    target.bundles = {std::move(b1), std::move(b2), std::move(b3), std::move(b4)};
    target.budget = 7;

    ReductionTrace trace;
    trace.vertex_images.resize(n);
    for (int v = 0; v < n; ++v) {
        trace.vertex_images[v].push_back(v);
        for (int c = 1; c <= 3; ++c) {
            if (copy_slot[v][c] != -1) trace.vertex_images[v].push_back(copy_slot[v][c]);
        }
    }
    trace.target_budget = 7;
    return {std::move(target), std::move(trace)};
}

std::pair<Instance, ReductionTrace> reduce_listcol_to_bipartite3_weighted(
    const ListColoringInstance& lc) {
    auto [four, trace] = reduce_listcol_to_bipartite4(lc);

    // Drop the last six auxiliary vertices (paper ids 11..16) along with
    // the edges among them, merge bundle 4 away and reweight.
    Instance target;
    target.graph.vertex_count = four.graph.vertex_count - 6;
    for (auto [u, v] : four.graph.edges) {
        if (u < target.graph.vertex_count && v < target.graph.vertex_count) {
            target.graph.edges.push_back({u, v});
        }
    }
    for (int j = 0; j < 3; ++j) {
        Bundle bundle;
        bundle.weight = j == 0 ? 2 : 1;
        for (int v : four.bundles[j].members) {
            if (v < target.graph.vertex_count) bundle.members.push_back(v);
        }
        target.bundles.push_back(std::move(bundle));
    }
    target.budget = 7;
    trace.target_budget = 7;
    return {std::move(target), std::move(trace)};
}

}  // namespace mscb
