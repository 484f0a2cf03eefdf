#pragma once

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "compsub/bits.hpp"

namespace compsub {

struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using VertexSet = Bits;
using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1 with bit-row adjacency.
// Treated as a value: derived graphs (complement, induced subgraphs) are
// new values, so instances can be shared freely across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), rows_(static_cast<size_t>(n), Bits(n)) {}

    static Graph from_edges(int n, const std::vector<Edge>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int order() const { return n_; }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (const Bits& r : rows_) twice += static_cast<size_t>(r.count());
        return twice / 2;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw input_error("self-loop " + std::to_string(u));
        rows_[static_cast<size_t>(u)].set(v);
        rows_[static_cast<size_t>(v)].set(u);
    }

    bool adjacent(int u, int v) const { return rows_[static_cast<size_t>(u)].test(v); }
    const Bits& neighbors(int v) const { return rows_[static_cast<size_t>(v)]; }
    int degree(int v) const { return rows_[static_cast<size_t>(v)].count(); }

    Bits closed_neighborhood_of(int v) const {
        Bits b = rows_[static_cast<size_t>(v)];
        b.set(v);
        return b;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw input_error("vertex " + std::to_string(v) + " out of range 0.." + std::to_string(n_ - 1));
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

private:
    int n_ = 0;
    std::vector<Bits> rows_;
};

struct Bipartition {
    Bits left;
    Bits right;

    bool partitions(const Graph& g) const {
        if (left.universe() != g.order() || right.universe() != g.order()) return false;
        if (left.intersects(right)) return false;
        return (left | right) == Bits::full(g.order());
    }
};

// Edges crossing a bipartition; `perfect_on` checks the perfect-matching-cut
// condition (every vertex covered exactly once).
struct MatchingCut {
    std::vector<Edge> edges;  // each (u, v) with u on the left, v on the right
};

struct BlockCutTree {
    std::vector<Bits> blocks;                   // vertex set per block
    Bits cutpoints;                             // all cutpoints
    std::vector<std::vector<int>> block_cuts;   // per block: the cutpoints it contains
};

inline Graph complement(const Graph& g) {
    int n = g.order();
    Graph c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_of_new;  // new index -> original vertex
    std::vector<int> new_of_old;  // original vertex -> new index, -1 outside
};

inline InducedSubgraph induced_subgraph(const Graph& g, const Bits& s) {
    if (s.universe() != g.order()) throw input_error("vertex set universe does not match graph order");
    InducedSubgraph r;
    r.old_of_new = s.to_vector();
    r.new_of_old.assign(static_cast<size_t>(g.order()), -1);
    for (size_t i = 0; i < r.old_of_new.size(); ++i) r.new_of_old[static_cast<size_t>(r.old_of_new[i])] = static_cast<int>(i);
    int k = static_cast<int>(r.old_of_new.size());
    r.graph = Graph(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(r.old_of_new[static_cast<size_t>(i)], r.old_of_new[static_cast<size_t>(j)]))
                r.graph.add_edge(i, j);
    return r;
}

inline Bits closed_neighborhood(const Graph& g, const Bits& s) {
    Bits r = s;
    s.for_each([&](int v) { r |= g.neighbors(v); });
    return r;
}

inline std::vector<Edge> cut_edges(const Graph& g, const Bipartition& p) {
    if (!p.partitions(g)) throw input_error("bipartition does not partition the vertex set");
    std::vector<Edge> cut;
    p.left.for_each([&](int u) {
        Bits cross = g.neighbors(u) & p.right;
        cross.for_each([&](int v) { cut.push_back({u, v}); });
    });
    return cut;
}

inline bool is_perfect_matching_cut(const Graph& g, const Bipartition& p) {
    if (!p.partitions(g)) throw input_error("bipartition does not partition the vertex set");
    for (int v = 0; v < g.order(); ++v) {
        const Bits& other = p.left.test(v) ? p.right : p.left;
        if (g.neighbors(v).count_and(other) != 1) return false;
    }
    return true;
}

// Same test on a left-mask without constructing a Bipartition; hot path for
// the enumeration scans.
inline bool is_perfect_matching_cut_mask(const Graph& g, const Bits& left) {
    Bits right = Bits::full(g.order()).andnot(left);
    for (int v = 0; v < g.order(); ++v)
        if (g.neighbors(v).count_and(left.test(v) ? right : left) != 1) return false;
    return true;
}

inline std::vector<Bits> connected_components(const Graph& g) {
    int n = g.order();
    std::vector<Bits> comps;
    Bits seen(n);
    for (int s = 0; s < n; ++s) {
        if (seen.test(s)) continue;
        Bits comp(n);
        comp.set(s);
        Bits frontier(n);
        frontier.set(s);
        while (!frontier.empty()) {
            Bits next(n);
            frontier.for_each([&](int v) { next |= g.neighbors(v); });
            next = next.andnot(comp);
            comp |= next;
            frontier = next;
        }
        seen |= comp;
        comps.push_back(comp);
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    return connected_components(g).size() == 1;
}

namespace detail {

// Hopcroft-Tarjan lowpoint DFS; collects cutpoints and blocks from an edge
// stack. Iterative to keep large inputs off the call stack.
struct BlockDfs {
    const Graph& g;
    std::vector<int> num, low, parent;
    std::vector<Edge> estack;
    std::vector<Bits> blocks;
    Bits cutpoints;
    int counter = 0;

    explicit BlockDfs(const Graph& gr)
        : g(gr),
          num(static_cast<size_t>(gr.order()), -1),
          low(static_cast<size_t>(gr.order()), 0),
          parent(static_cast<size_t>(gr.order()), -1),
          cutpoints(gr.order()) {}

    // Pop the block hanging off tree edge (p, child): every stacked edge
    // whose lower endpoint lies in the child's subtree, then (p, child).
    void pop_block(int p, int child) {
        Bits blk(g.order());
        while (!estack.empty() && num[static_cast<size_t>(estack.back().first)] >= num[static_cast<size_t>(child)]) {
            blk.set(estack.back().first);
            blk.set(estack.back().second);
            estack.pop_back();
        }
        if (!estack.empty() && estack.back() == Edge{p, child}) estack.pop_back();
        blk.set(p);
        blk.set(child);
        blocks.push_back(blk);
    }

    void run(int root) {
        struct Frame { int v; int it; };
        std::vector<Frame> st;
        num[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = counter++;
        st.push_back({root, -1});
        int root_children = 0;
        while (!st.empty()) {
            int v = st.back().v;
            int w = g.neighbors(v).next(st.back().it);
            if (w < 0) {
                st.pop_back();
                if (!st.empty()) {
                    int p = st.back().v;
                    low[static_cast<size_t>(p)] = std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(v)]);
                    if (low[static_cast<size_t>(v)] >= num[static_cast<size_t>(p)]) {
                        if (p != root || ++root_children > 1) cutpoints.set(p);
                        pop_block(p, v);
                    }
                }
                continue;
            }
            st.back().it = w;
            if (num[static_cast<size_t>(w)] == -1) {
                parent[static_cast<size_t>(w)] = v;
                estack.push_back({v, w});
                num[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = counter++;
                st.push_back({w, -1});
            } else if (w != parent[static_cast<size_t>(v)] && num[static_cast<size_t>(w)] < num[static_cast<size_t>(v)]) {
                estack.push_back({v, w});
                low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], num[static_cast<size_t>(w)]);
            }
        }
    }
};

}  // namespace detail

// Block/cutpoint decomposition of a connected graph. A bridge is a block on
// two vertices; a single vertex is its own block.
inline BlockCutTree blocks_and_cutpoints(const Graph& g) {
    if (!is_connected(g)) throw input_error("blocks_and_cutpoints requires a connected graph");
    BlockCutTree t;
    int n = g.order();
    t.cutpoints = Bits(n);
    if (n == 0) return t;
    if (n == 1) {
        t.blocks.push_back(Bits::of(1, {0}));
        t.block_cuts.push_back({});
        return t;
    }
    detail::BlockDfs dfs(g);
    dfs.run(0);
    // root correction: the root is a cutpoint iff it has >= 2 DFS children,
    // which BlockDfs already tracked; the final dangling block (if the root
    // had exactly one child) was popped when that child finished.
    t.blocks = std::move(dfs.blocks);
    t.cutpoints = dfs.cutpoints;
    for (const Bits& b : t.blocks) {
        std::vector<int> cuts;
        b.for_each([&](int v) { if (t.cutpoints.test(v)) cuts.push_back(v); });
        t.block_cuts.push_back(std::move(cuts));
    }
    return t;
}

// K_2 and K_1 count as biconnected (they are blocks).
inline bool is_biconnected(const Graph& g) {
    int n = g.order();
    if (n == 0 || n == 1) return true;
    if (!is_connected(g)) return false;
    if (n == 2) return g.adjacent(0, 1);
    return blocks_and_cutpoints(g).blocks.size() == 1;
}

enum class Side { Left, Right };

// Matching partners of x on the other side of a perfect matching cut.
inline Bits corresponding_set(const MatchingCut& m, const Bits& x, Side side) {
    Bits r(x.universe());
    Bits named(x.universe());
    for (const Edge& e : m.edges) named.set(side == Side::Left ? e.first : e.second);
    if (!x.is_subset_of(named)) throw input_error("corresponding_set: set not contained in the named side");
    for (const Edge& e : m.edges) {
        int from = side == Side::Left ? e.first : e.second;
        int to = side == Side::Left ? e.second : e.first;
        if (x.test(from)) r.set(to);
    }
    return r;
}

// --- small named graphs, used across generators and tests ---

inline Graph make_empty(int n) { return Graph(n); }

inline Graph make_complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph make_path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph make_cycle(int n) {
    Graph g = make_path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

inline Graph relabel(const Graph& g, const std::vector<int>& image) {
    Graph r(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v)) r.add_edge(image[static_cast<size_t>(u)], image[static_cast<size_t>(v)]);
    return r;
}

}  // namespace compsub
