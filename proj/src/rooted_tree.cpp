#include <algorithm>

#include "mscb/errors.hpp"
#include "mscb/tree_solvers.hpp"

namespace mscb {

RootedTree RootedTree::build(const Graph& graph, int root) {
    if (!is_tree(graph)) throw UnsupportedInstanceError("graph is not a tree");
    RootedTree tree;
    tree.root = root;
    tree.parent.assign(graph.vertex_count, -1);
    tree.children.assign(graph.vertex_count, {});
    auto adj = graph.adjacency();

    // Iterative DFS; children end up ascending because adjacency is sorted.
    std::vector<int> stack{root};
    std::vector<char> seen(graph.vertex_count, 0);
    seen[root] = 1;
    std::vector<int> preorder;
    preorder.reserve(graph.vertex_count);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        preorder.push_back(v);
        for (int u : adj[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                tree.parent[u] = v;
                tree.children[v].push_back(u);
                stack.push_back(u);
            }
        }
    }
    tree.postorder.assign(preorder.rbegin(), preorder.rend());
    return tree;
}

}  // namespace mscb
