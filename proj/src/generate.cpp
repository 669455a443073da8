#include "mscb/generate.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mscb/errors.hpp"
#include "mscb/rng.hpp"

namespace mscb {

namespace {

void shuffle(std::vector<int>& values, SplitMix64& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        std::size_t j = rng.below(i);
        std::swap(values[i - 1], values[j]);
    }
}

Graph make_graph(const GeneratorSpec& spec, SplitMix64& rng) {
    Graph g;
    g.vertex_count = spec.n;
    switch (spec.shape) {
        case Shape::tree:
            for (int v = 1; v < spec.n; ++v) {
                g.edges.push_back({static_cast<int>(rng.below(v)), v});
            }
            break;
        case Shape::path:
            for (int v = 0; v + 1 < spec.n; ++v) g.edges.push_back({v, v + 1});
            break;
        case Shape::matching:
            if (spec.n < 2 || spec.n % 2 != 0) {
                throw Error("matching shape requires an even vertex count >= 2");
            }
            for (int v = 0; v + 1 < spec.n; v += 2) g.edges.push_back({v, v + 1});
            break;
        case Shape::bipartite: {
            int split = (spec.n + 1) / 2;
            for (int a = 0; a < split; ++a) {
                for (int b = split; b < spec.n; ++b) {
                    if (static_cast<int>(rng.below(1000)) < spec.edge_permille) {
                        g.edges.push_back({a, b});
                    }
                }
            }
            break;
        }
        case Shape::general:
            for (int u = 0; u < spec.n; ++u) {
                for (int v = u + 1; v < spec.n; ++v) {
                    if (static_cast<int>(rng.below(1000)) < spec.edge_permille) {
                        g.edges.push_back({u, v});
                    }
                }
            }
            break;
    }
    return g;
}

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); }
    void merge(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<std::vector<int>> partition_groups(const std::vector<int>& vertices, int groups,
                                               SplitMix64& rng) {
    std::vector<int> pool = vertices;
    shuffle(pool, rng);
    std::vector<std::vector<int>> out(groups);
    for (int i = 0; i < groups; ++i) out[i].push_back(pool[i]);
    for (std::size_t i = groups; i < pool.size(); ++i) {
        out[rng.below(groups)].push_back(pool[i]);
    }
    return out;
}

std::vector<std::vector<int>> make_members(const GeneratorSpec& spec, const Graph& g,
                                           SplitMix64& rng) {
    const int n = spec.n;
    const int ell = spec.bundle_count;
    if (ell < 1) throw Error("bundle count must be positive");

    switch (spec.family) {
        case FamilyClass::partition: {
            if (ell > n) throw Error("partition needs bundle count <= vertex count");
            std::vector<int> all(n);
            std::iota(all.begin(), all.end(), 0);
            return partition_groups(all, ell, rng);
        }
        case FamilyClass::connected_partition: {
            if (spec.shape != Shape::tree && spec.shape != Shape::path) {
                throw Error("connected partition requires a tree or path shape");
            }
            if (ell > n) throw Error("partition needs bundle count <= vertex count");
            std::vector<int> edge_order(g.edges.size());
            std::iota(edge_order.begin(), edge_order.end(), 0);
            shuffle(edge_order, rng);
            DisjointSets sets(n);
            for (int i = 0; i < n - ell; ++i) {
                sets.merge(g.edges[edge_order[i]].first, g.edges[edge_order[i]].second);
            }
            // Components become bundles, ordered by smallest member.
            std::vector<std::vector<int>> by_root(n);
            for (int v = 0; v < n; ++v) by_root[sets.find(v)].push_back(v);
            std::vector<std::vector<int>> members;
            for (int v = 0; v < n; ++v) {
                if (!by_root[v].empty()) members.push_back(std::move(by_root[v]));
            }
            return members;
        }
        case FamilyClass::independent_partition: {
            auto side = bipartition(g);
            if (!side) throw Error("independent partition requires a bipartite shape");
            std::vector<int> side_a, side_b;
            for (int v = 0; v < n; ++v) ((*side)[v] == 0 ? side_a : side_b).push_back(v);
            int need = (side_a.empty() ? 0 : 1) + (side_b.empty() ? 0 : 1);
            if (ell < need || ell > n) throw Error("bundle count incompatible with sides");
            int max_a = static_cast<int>(side_a.size());
            int max_b = static_cast<int>(side_b.size());
            int la = side_a.empty() ? 0
                                    : std::clamp((ell * max_a + n / 2) / std::max(n, 1),
                                                 std::max(1, ell - max_b), std::min(ell, max_a));
            if (!side_b.empty() && ell - la < 1) la = ell - 1;
            std::vector<std::vector<int>> members;
            if (la > 0) {
                for (auto& group : partition_groups(side_a, la, rng)) {
                    members.push_back(std::move(group));
                }
            }
            if (ell - la > 0) {
                for (auto& group : partition_groups(side_b, ell - la, rng)) {
                    members.push_back(std::move(group));
                }
            }
            return members;
        }
        case FamilyClass::overlapping: {
            std::vector<std::vector<int>> members(ell);
            if (spec.shape == Shape::path) {
                int max_width = spec.max_width > 0 ? spec.max_width : std::max(1, n / 2);
                max_width = std::min(max_width, n);
                int min_width = std::clamp(spec.min_width, 1, max_width);
                std::vector<std::pair<int, int>> intervals(ell);
                for (int j = 0; j < ell; ++j) {
                    int width = static_cast<int>(rng.range(min_width, max_width));
                    int start = static_cast<int>(rng.below(n - width + 1));
                    intervals[j] = {start, start + width - 1};
                }
                std::vector<char> covered(n, 0);
                for (const auto& [lo, hi] : intervals) {
                    for (int v = lo; v <= hi; ++v) covered[v] = 1;
                }
                for (int v = 0; v < n; ++v) {
                    if (covered[v]) continue;
                    auto& [lo, hi] = intervals[v % ell];
                    while (lo > v) covered[--lo] = 1;
                    while (hi < v) covered[++hi] = 1;
                }
                for (int j = 0; j < ell; ++j) {
                    for (int v = intervals[j].first; v <= intervals[j].second; ++v) {
                        members[j].push_back(v);
                    }
                }
            } else {
                std::vector<int> pool(n);
                std::iota(pool.begin(), pool.end(), 0);
                for (int j = 0; j < ell; ++j) {
                    int size = 1 + static_cast<int>(rng.below(std::max(1, n / 2)));
                    shuffle(pool, rng);
                    members[j].assign(pool.begin(), pool.begin() + std::min(size, n));
                    std::sort(members[j].begin(), members[j].end());
                }
                std::vector<char> covered(n, 0);
                for (const auto& m : members) {
                    for (int v : m) covered[v] = 1;
                }
                for (int v = 0; v < n; ++v) {
                    if (!covered[v]) {
                        members[v % ell].push_back(v);
                        std::sort(members[v % ell].begin(), members[v % ell].end());
                    }
                }
            }
            return members;
        }
    }
    throw Error("unknown family class");
}

}  // namespace

Instance generate(const GeneratorSpec& spec) {
    if (spec.n < 1) throw Error("vertex count must be positive");
    if (spec.weight_min < 1 || spec.weight_min > spec.weight_max) {
        throw Error("weight range must satisfy 1 <= min <= max");
    }
    SplitMix64 rng(spec.seed);
    Instance instance;
    instance.graph = make_graph(spec, rng);
    auto members = make_members(spec, instance.graph, rng);
    for (auto& m : members) {
        Bundle bundle;
        std::sort(m.begin(), m.end());
        bundle.members = std::move(m);
        bundle.weight = rng.range(spec.weight_min, spec.weight_max);
        instance.bundles.push_back(std::move(bundle));
    }
    return instance;
}

std::string to_string(Shape shape) {
    switch (shape) {
        case Shape::tree: return "tree";
        case Shape::path: return "path";
        case Shape::bipartite: return "bipartite";
        case Shape::matching: return "matching";
        case Shape::general: return "general";
    }
    return "?";
}

std::string to_string(FamilyClass family) {
    switch (family) {
        case FamilyClass::partition: return "partition";
        case FamilyClass::connected_partition: return "connected-partition";
        case FamilyClass::independent_partition: return "independent-partition";
        case FamilyClass::overlapping: return "overlapping";
    }
    return "?";
}

Shape shape_from_string(const std::string& name) {
    if (name == "tree") return Shape::tree;
    if (name == "path") return Shape::path;
    if (name == "bipartite") return Shape::bipartite;
    if (name == "matching") return Shape::matching;
    if (name == "general") return Shape::general;
    throw Error("unknown shape '" + name + "'");
}

FamilyClass family_from_string(const std::string& name) {
    if (name == "partition") return FamilyClass::partition;
    if (name == "connected-partition") return FamilyClass::connected_partition;
    if (name == "independent-partition") return FamilyClass::independent_partition;
    if (name == "overlapping") return FamilyClass::overlapping;
    throw Error("unknown family class '" + name + "'");
}

GeneratorSpec parse_generator_spec(const std::string& text) {
    GeneratorSpec spec;
    std::istringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw Error("generator spec item needs key=value: " + item);
        std::string key = item.substr(0, eq);
        std::string value = item.substr(eq + 1);
        if (key == "shape") {
            spec.shape = shape_from_string(value);
        } else if (key == "family") {
            spec.family = family_from_string(value);
        } else if (key == "n") {
            spec.n = std::stoi(value);
        } else if (key == "ell") {
            spec.bundle_count = std::stoi(value);
        } else if (key == "minw") {
            spec.min_width = std::stoi(value);
        } else if (key == "maxw") {
            spec.max_width = std::stoi(value);
        } else if (key == "wmin") {
            spec.weight_min = std::stoll(value);
        } else if (key == "wmax") {
            spec.weight_max = std::stoll(value);
        } else if (key == "permille") {
            spec.edge_permille = std::stoi(value);
        } else if (key == "seed") {
            spec.seed = std::stoull(value);
        } else {
            throw Error("unknown generator spec key '" + key + "'");
        }
    }
    return spec;
}

std::string to_string(const GeneratorSpec& spec) {
    std::ostringstream out;
    out << "shape=" << to_string(spec.shape) << ",family=" << to_string(spec.family)
        << ",n=" << spec.n << ",ell=" << spec.bundle_count << ",wmin=" << spec.weight_min
        << ",wmax=" << spec.weight_max << ",seed=" << spec.seed;
    return out.str();
}

}  // namespace mscb
