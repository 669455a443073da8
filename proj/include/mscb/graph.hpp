#ifndef MSCB_GRAPH_HPP
#define MSCB_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

namespace mscb {

/// Undirected simple graph over vertex ids 0..vertex_count-1.
/// Edges are stored exactly as supplied; validation lives in
/// validate_instance so that broken input can be reported instead of
/// rejected at construction time. The derived queries below assume a
/// valid edge set.
struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> es)
        : vertex_count(n), edges(std::move(es)) {}

    std::vector<std::vector<int>> adjacency() const;
    std::vector<int> degrees() const;

    friend bool operator==(const Graph&, const Graph&) = default;
};

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_path_graph(const Graph& g);

/// Proper 2-coloring as a side index (0/1) per vertex, or nullopt if the
/// graph has an odd cycle. Components are explored from their smallest
/// vertex, which gets side 0.
std::optional<std::vector<int>> bipartition(const Graph& g);

/// Degeneracy by repeated minimum-degree removal.
int degeneracy(const Graph& g);

}  // namespace mscb

#endif
