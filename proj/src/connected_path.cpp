#include <algorithm>
#include <chrono>
#include <limits>

#include "mscb/errors.hpp"
#include "mscb/tree_solvers.hpp"

namespace mscb {

namespace {

// State after coloring the prefix v_1..v_i of the path: the color of
// v_i plus the last positions colored 2 and 3 (0 if none). Those two
// positions are only ever compared against bundle left endpoints, so
// they are stored as ranks among the distinct left endpoints; the one
// pinned to the frontier (p = i when the color is 2, q = i when it is
// 3, and the previous vertex's position for color 1) is kept implicit.
//
// Cell families per level i:
//   kOne2   (i, 1, p = i-1, q = rank)   reached from color 2 at i-1
//   kOne3   (i, 1, p = rank, q = i-1)   reached from color 3 at i-1
//   kTwo    (i, 2, p = i,   q = rank)
//   kThree  (i, 3, p = rank, q = i)
enum Family : int { kOne2 = 0, kOne3 = 1, kTwo = 2, kThree = 3 };

struct BackRef {
    signed char family = -1;
    int index = -1;
};

struct Level {
    std::vector<std::int64_t> value[4];
    std::vector<BackRef> back[4];
};

struct PathProblem {
    std::vector<int> pos_to_vertex;  // 1-based positions
    std::vector<std::pair<int, int>> intervals;  // per bundle, positions
    std::vector<std::int64_t> weight;
    std::vector<int> lefts;          // distinct left endpoints, ascending
    std::vector<int> rank_of;        // position (0..n) -> #lefts <= position
    std::vector<std::vector<int>> bundles_at;  // position -> bundle ids
    std::vector<std::int64_t> start_sum;       // position -> sum of weights starting there
    int n = 0;
};

PathProblem build_path_problem(const Instance& instance) {
    const Graph& g = instance.graph;
    if (!is_path_graph(g)) {
        throw UnsupportedInstanceError("solve_connected_path requires a path");
    }
    PathProblem p;
    p.n = g.vertex_count;
    p.pos_to_vertex.assign(p.n + 1, -1);

    auto adj = g.adjacency();
    auto deg = g.degrees();
    int start = 0;
    for (int v = 0; v < p.n; ++v) {
        if (deg[v] <= 1) {
            start = v;
            break;
        }
    }
    int prev = -1, cur = start;
    for (int i = 1; i <= p.n; ++i) {
        p.pos_to_vertex[i] = cur;
        int next = -1;
        for (int u : adj[cur]) {
            if (u != prev) next = u;
        }
        prev = cur;
        cur = next;
    }

    std::vector<int> pos_of(p.n, 0);
    for (int i = 1; i <= p.n; ++i) pos_of[p.pos_to_vertex[i]] = i;

    const int ell = static_cast<int>(instance.bundles.size());
    p.intervals.resize(ell);
    p.weight.resize(ell);
    for (int j = 0; j < ell; ++j) {
        const Bundle& b = instance.bundles[j];
        int lo = p.n + 1, hi = 0;
        for (int v : b.members) {
            lo = std::min(lo, pos_of[v]);
            hi = std::max(hi, pos_of[v]);
        }
        if (hi - lo + 1 != static_cast<int>(b.members.size())) {
            throw UnsupportedInstanceError("bundle " + std::to_string(j) +
                                           " is not a contiguous segment of the path");
        }
        p.intervals[j] = {lo, hi};
        p.weight[j] = b.weight;
    }

    p.lefts.reserve(ell);
    for (const auto& [lo, hi] : p.intervals) p.lefts.push_back(lo);
    std::sort(p.lefts.begin(), p.lefts.end());
    p.lefts.erase(std::unique(p.lefts.begin(), p.lefts.end()), p.lefts.end());

    p.rank_of.assign(p.n + 1, 0);
    for (int x = 0, r = 0; x <= p.n; ++x) {
        while (r < static_cast<int>(p.lefts.size()) && p.lefts[r] <= x) ++r;
        p.rank_of[x] = r;
    }

    p.bundles_at.assign(p.n + 1, {});
    p.start_sum.assign(p.n + 1, 0);
    for (int j = 0; j < ell; ++j) {
        for (int i = p.intervals[j].first; i <= p.intervals[j].second; ++i) {
            p.bundles_at[i].push_back(j);
        }
        p.start_sum[p.intervals[j].first] += p.weight[j];
    }
    return p;
}

}  // namespace

SolveResult solve_connected_path(const Instance& instance) {
    auto started = std::chrono::steady_clock::now();
    PathProblem p = build_path_problem(instance);
    const int n = p.n;
    const int ranks = static_cast<int>(p.lefts.size()) + 1;  // rank values 0..L

    std::int64_t infinity = 1;
    for (std::int64_t w : p.weight) infinity += 3 * w;

    std::vector<Level> levels(n + 1);
    for (int i = 1; i <= n; ++i) {
        for (int f = 0; f < 4; ++f) {
            levels[i].value[f].assign(ranks, infinity);
            levels[i].back[f].assign(ranks, BackRef{});
        }
    }

    levels[1].value[kOne2][0] = p.start_sum[1];
    levels[1].value[kTwo][0] = 2 * p.start_sum[1];
    levels[1].value[kThree][0] = 3 * p.start_sum[1];

    // Scratch: prefix weight sums over left-endpoint ranks for bundles
    // containing the next position and starting strictly before it.
    std::vector<std::int64_t> wsum(ranks, 0);

    SolveStats stats;
    stats.dp_cells = static_cast<std::int64_t>(n) * 4 * ranks;

    for (int i = 1; i < n; ++i) {
        const Level& cur = levels[i];
        Level& next = levels[i + 1];
        const int rA = p.rank_of[i - 1];  // rank of position i-1
        const int rC = p.rank_of[i];

        std::fill(wsum.begin(), wsum.end(), 0);
        for (int j : p.bundles_at[i + 1]) {
            if (p.intervals[j].first <= i) wsum[p.rank_of[p.intervals[j].first]] += p.weight[j];
        }
        for (int r = 1; r < ranks; ++r) wsum[r] += wsum[r - 1];
        const std::int64_t wall = wsum[ranks - 1];

        auto relax = [&](Family family, int index, std::int64_t value, Family src_family,
                         int src_index) {
            if (value >= infinity) return;
            if (value < next.value[family][index]) {
                next.value[family][index] = value;
                next.back[family][index] = {static_cast<signed char>(src_family), src_index};
            }
        };

        const std::int64_t s1 = p.start_sum[i + 1];
        for (int r = 0; r < ranks; ++r) {
            // color 1 at i+1
            relax(kOne2, r, cur.value[kTwo][r] == infinity ? infinity
                                                           : cur.value[kTwo][r] + s1,
                  kTwo, r);
            relax(kOne3, r, cur.value[kThree][r] == infinity ? infinity
                                                             : cur.value[kThree][r] + s1,
                  kThree, r);

            // color 2 at i+1
            if (cur.value[kOne2][r] < infinity) {
                std::int64_t up = wall - wsum[std::max(rA, r)];
                relax(kTwo, r, cur.value[kOne2][r] + up + 2 * s1, kOne2, r);
            }
            if (cur.value[kOne3][r] < infinity) {
                std::int64_t up = wall - wsum[std::max(r, rA)];
                relax(kTwo, rA, cur.value[kOne3][r] + up + 2 * s1, kOne3, r);
            }
            if (cur.value[kThree][r] < infinity) {
                relax(kTwo, rC, cur.value[kThree][r] + 2 * s1, kThree, r);
            }

            // color 3 at i+1
            if (cur.value[kOne2][r] < infinity) {
                std::int64_t one_step = rA > r ? wsum[rA] - wsum[r] : 0;
                std::int64_t two_step = 2 * (wall - wsum[std::max(rA, r)]);
                relax(kThree, rA, cur.value[kOne2][r] + one_step + two_step + 3 * s1, kOne2,
                      r);
            }
            if (cur.value[kOne3][r] < infinity) {
                std::int64_t one_step = r > rA ? wsum[r] - wsum[rA] : 0;
                std::int64_t two_step = 2 * (wall - wsum[std::max(r, rA)]);
                relax(kThree, r, cur.value[kOne3][r] + one_step + two_step + 3 * s1, kOne3,
                      r);
            }
            if (cur.value[kTwo][r] < infinity) {
                std::int64_t one_step = wall - wsum[r];
                relax(kThree, rC, cur.value[kTwo][r] + one_step + 3 * s1, kTwo, r);
            }
        }
    }

    Family best_family = kOne2;
    int best_index = 0;
    std::int64_t best = infinity;
    for (int f = 0; f < 4; ++f) {
        for (int r = 0; r < ranks; ++r) {
            if (levels[n].value[f][r] < best) {
                best = levels[n].value[f][r];
                best_family = static_cast<Family>(f);
                best_index = r;
            }
        }
    }
    if (best >= infinity) throw Error("path table has no finite final cell");

    Coloring colors(n, 0);
    Family family = best_family;
    int index = best_index;
    for (int i = n; i >= 1; --i) {
        int color = family == kTwo ? 2 : family == kThree ? 3 : 1;
        colors[p.pos_to_vertex[i]] = color;
        BackRef ref = levels[i].back[family][index];
        if (i > 1) {
            family = static_cast<Family>(ref.family);
            index = ref.index;
        }
    }

    stats.elapsed_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - started)
                           .count();
    return finalize_result(instance, std::move(colors), "connected-path", stats);
}

}  // namespace mscb
