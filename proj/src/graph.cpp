#include "mscb/graph.hpp"

#include <algorithm>
#include <queue>

namespace mscb {

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(vertex_count);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(vertex_count, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count == 0) return true;
    auto adj = g.adjacency();
    std::vector<char> seen(g.vertex_count, 0);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int u : adj[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                queue.push(u);
            }
        }
    }
    return reached == g.vertex_count;
}

bool is_tree(const Graph& g) {
    if (g.vertex_count == 0) return false;
    return static_cast<int>(g.edges.size()) == g.vertex_count - 1 && is_connected(g);
}

bool is_path_graph(const Graph& g) {
    if (!is_tree(g)) return false;
    auto deg = g.degrees();
    return std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 2; });
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    auto adj = g.adjacency();
    std::vector<int> side(g.vertex_count, -1);
    for (int root = 0; root < g.vertex_count; ++root) {
        if (side[root] != -1) continue;
        side[root] = 0;
        std::queue<int> queue;
        queue.push(root);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int u : adj[v]) {
                if (side[u] == -1) {
                    side[u] = 1 - side[v];
                    queue.push(u);
                } else if (side[u] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

int degeneracy(const Graph& g) {
    if (g.vertex_count == 0) return 0;
    auto adj = g.adjacency();
    std::vector<int> deg = g.degrees();
    std::vector<char> removed(g.vertex_count, 0);
    int result = 0;
    for (int step = 0; step < g.vertex_count; ++step) {
        int best = -1;
        for (int v = 0; v < g.vertex_count; ++v) {
            if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
        }
        result = std::max(result, deg[best]);
        removed[best] = 1;
        for (int u : adj[best]) {
            if (!removed[u]) --deg[u];
        }
    }
    return result;
}

}  // namespace mscb
