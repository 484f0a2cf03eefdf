#pragma once

#include <cstdint>
#include <functional>
#include <mutex>
#include <set>
#include <vector>

#include "compsub/graph.hpp"
#include "compsub/parallel.hpp"

namespace compsub::enumeration {

// Canonical labeling for small graphs (order <= 64): branch and bound over
// vertex orderings maximizing the row-by-row adjacency bitstring, with
// twin skipping. Used by the exhaustive generators and test oracles; not a
// general-purpose canonizer.

using Code = std::vector<std::uint64_t>;  // [n, level-1 chunk, ..., level-(n-1) chunk]

namespace detail {

struct Canonizer {
    int n;
    std::vector<std::uint64_t> row;
    std::vector<int> perm;
    std::vector<std::uint64_t> cur;   // cur[k-1] = adjacency bits of perm[k] vs perm[0..k-1]
    std::vector<std::uint64_t> best;
    std::vector<int> best_perm;
    bool have_best = false;
    std::uint64_t used = 0;

    explicit Canonizer(const Graph& g) : n(g.order()) {
        if (n > 64) throw resource_error("canonical labeling supports order <= 64");
        row.assign(static_cast<size_t>(n), 0);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && g.adjacent(u, v)) row[static_cast<size_t>(u)] |= 1ULL << v;
        perm.assign(static_cast<size_t>(n), -1);
        cur.assign(static_cast<size_t>(n), 0);
    }

    std::uint64_t chunk_of(int v, int k) const {
        std::uint64_t c = 0;
        for (int i = 0; i < k; ++i)
            c = (c << 1) | ((row[static_cast<size_t>(v)] >> perm[static_cast<size_t>(i)]) & 1ULL);
        return c;
    }

    // -1 prefix below best, 0 equal, +1 above (or no best yet)
    int prefix_relation(int k) const {
        if (!have_best) return 1;
        for (int i = 1; i < k; ++i) {
            if (cur[static_cast<size_t>(i)] != best[static_cast<size_t>(i)])
                return cur[static_cast<size_t>(i)] < best[static_cast<size_t>(i)] ? -1 : 1;
        }
        return 0;
    }

    bool twins(int u, int v) const {
        std::uint64_t x = row[static_cast<size_t>(u)] ^ row[static_cast<size_t>(v)];
        x &= ~(1ULL << u);
        x &= ~(1ULL << v);
        return x == 0;
    }

    void dfs(int k) {
        if (k == n) {
            if (!have_best || prefix_relation(n) > 0) {
                best = cur;
                best_perm = perm;
                have_best = true;
            }
            return;
        }
        int rel = prefix_relation(k);
        if (rel < 0) return;
        std::uint64_t cmax = 0;
        bool any = false;
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1ULL) continue;
            std::uint64_t c = chunk_of(v, k);
            if (!any || c > cmax) cmax = c;
            any = true;
        }
        if (rel == 0 && have_best && cmax < best[static_cast<size_t>(k)]) return;
        std::vector<int> tried;
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1ULL) continue;
            if (chunk_of(v, k) != cmax) continue;
            bool dup = false;
            for (int u : tried)
                if (twins(u, v)) { dup = true; break; }
            if (dup) continue;
            tried.push_back(v);
            perm[static_cast<size_t>(k)] = v;
            cur[static_cast<size_t>(k)] = cmax;
            used |= 1ULL << v;
            dfs(k + 1);
            used &= ~(1ULL << v);
        }
    }
};

}  // namespace detail

inline Code canonical_code(const Graph& g) {
    int n = g.order();
    Code code;
    code.push_back(static_cast<std::uint64_t>(n));
    if (n == 0) return code;
    detail::Canonizer cz(g);
    cz.dfs(0);
    for (int k = 1; k < n; ++k) code.push_back(cz.best[static_cast<size_t>(k)]);
    return code;
}

inline Graph graph_from_code(const Code& code) {
    int n = static_cast<int>(code[0]);
    Graph g(n);
    for (int k = 1; k < n; ++k) {
        std::uint64_t c = code[static_cast<size_t>(k)];
        for (int i = 0; i < k; ++i)
            if ((c >> (k - 1 - i)) & 1ULL) g.add_edge(k, i);
    }
    return g;
}

inline Graph canonical_form(const Graph& g) { return graph_from_code(canonical_code(g)); }

inline bool isomorphic_by_code(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    return canonical_code(a) == canonical_code(b);
}

// Admission filter for the generated class: called on every child with the
// index of the vertex that was just added. The class must be hereditary
// (closed under induced subgraphs) for level pruning to be exhaustive.
using Admit = std::function<bool(const Graph&, int)>;

inline Graph extend(const Graph& parent, std::uint64_t mask) {
    int k = parent.order();
    Graph child(k + 1);
    for (int u = 0; u < k; ++u) {
        for (int v = u + 1; v < k; ++v)
            if (parent.adjacent(u, v)) child.add_edge(u, v);
        if ((mask >> u) & 1ULL) child.add_edge(u, k);
    }
    return child;
}

// All isomorphism classes of each order 1..max_order (index = order), with
// an optional hereditary filter. Every class on k+1 vertices arises from
// some class on k vertices by adding one vertex, so a level-by-level sweep
// with canonical deduplication is exhaustive.
inline std::vector<std::vector<Graph>> levels_up_to(int max_order, const Admit& admit = {}, int threads = 1) {
    std::vector<std::vector<Graph>> levels(static_cast<size_t>(max_order) + 1);
    if (max_order < 1) return levels;
    Graph k1(1);
    if (!admit || admit(k1, 0)) levels[1].push_back(k1);
    for (int k = 1; k < max_order; ++k) {
        const auto& parents = levels[static_cast<size_t>(k)];
        std::set<Code> codes;
        std::mutex mu;
        parallel_for(parents.size(), threads, [&](std::uint64_t pi) {
            const Graph& p = parents[static_cast<size_t>(pi)];
            std::vector<Code> local;
            for (std::uint64_t mask = 0; mask < (1ULL << k); ++mask) {
                Graph child = extend(p, mask);
                if (admit && !admit(child, k)) continue;
                local.push_back(canonical_code(child));
            }
            std::lock_guard<std::mutex> lk(mu);
            for (auto& c : local) codes.insert(std::move(c));
        });
        auto& out = levels[static_cast<size_t>(k) + 1];
        out.reserve(codes.size());
        for (const Code& c : codes) out.push_back(graph_from_code(c));
    }
    return levels;
}

// Visits every admitted child of every parent without deduplication; the
// final level of a big sweep can be consumed this way when only rare
// survivors need canonical treatment.
inline void for_each_child(const std::vector<Graph>& parents, const Admit& admit, int threads,
                           const std::function<void(const Graph&)>& visit) {
    parallel_for(parents.size(), threads, [&](std::uint64_t pi) {
        const Graph& p = parents[static_cast<size_t>(pi)];
        int k = p.order();
        for (std::uint64_t mask = 0; mask < (1ULL << k); ++mask) {
            Graph child = extend(p, mask);
            if (admit && !admit(child, k)) continue;
            visit(child);
        }
    });
}

}  // namespace compsub::enumeration
