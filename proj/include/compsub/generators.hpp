#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "compsub/graph.hpp"
#include "compsub/graph_io.hpp"
#include "compsub/recognizers.hpp"
#include "compsub/solver.hpp"

namespace compsub {

namespace detail {

// Engine-portable bounded draw and shuffle so fixed seeds give identical
// instances across standard library implementations.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(p[static_cast<size_t>(i)], p[static_cast<size_t>(draw_below(rng, static_cast<std::uint64_t>(i) + 1))]);
    return p;
}

}  // namespace detail

// Disjoint union of h and its complement plus a matching i <-> pi(i); the
// construction is its own certificate.
struct BuiltInstance {
    Graph graph;
    DecompositionCertificate certificate;
};

inline BuiltInstance matched_complement(const Graph& h, const std::vector<int>& pi) {
    int n = h.order();
    if (static_cast<int>(pi.size()) != n) throw input_error("matched_complement: permutation size mismatch");
    {
        Bits seen(n);
        for (int v : pi) {
            if (v < 0 || v >= n || seen.test(v)) throw input_error("matched_complement: not a permutation");
            seen.set(v);
        }
    }
    Graph g(2 * n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (h.adjacent(u, v)) g.add_edge(u, v);
            else g.add_edge(n + u, n + v);
        }
    for (int i = 0; i < n; ++i) g.add_edge(i, n + pi[static_cast<size_t>(i)]);

    BuiltInstance out{std::move(g), {}};
    auto& c = out.certificate;
    c.method = "construction";
    for (int i = 0; i < n; ++i) {
        c.left.push_back(i);
        c.right.push_back(n + i);
        c.matching.push_back({i, n + pi[static_cast<size_t>(i)]});
        c.iso.push_back({i, n + i});
    }
    std::sort(c.matching.begin(), c.matching.end());
    CertCheck chk = verify_certificate(out.graph, c);
    if (!chk.ok) throw std::logic_error("matched_complement built a bad certificate: " + chk.diagnostic);
    return out;
}

inline BuiltInstance complementary_prism(const Graph& h) {
    std::vector<int> identity(static_cast<size_t>(h.order()));
    std::iota(identity.begin(), identity.end(), 0);
    return matched_complement(h, identity);
}

inline Graph prism_of_clique(int n) {
    if (n < 1) throw input_error("prism_of_clique: n must be >= 1");
    return complementary_prism(make_complete(n)).graph;
}

// Connected split graph without isolated vertices, deterministic per seed.
inline Graph random_split_graph(int n, std::uint64_t seed) {
    if (n < 2) throw input_error("random_split_graph: n must be >= 2 (smaller graphs cannot be connected without isolated vertices)");
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
    int clique_size = 1 + static_cast<int>(detail::draw_below(rng, static_cast<std::uint64_t>(n - 1)));
    Graph g(n);
    for (int u = 0; u < clique_size; ++u)
        for (int v = u + 1; v < clique_size; ++v) g.add_edge(u, v);
    for (int i = clique_size; i < n; ++i)
        for (int c = 0; c < clique_size; ++c)
            if (detail::draw_below(rng, 2) == 1) g.add_edge(i, c);
    // connectivity repair: every independent vertex needs a clique neighbor
    for (int i = clique_size; i < n; ++i)
        if (g.degree(i) == 0) g.add_edge(i, static_cast<int>(detail::draw_below(rng, static_cast<std::uint64_t>(clique_size))));
    return g;
}

// ------------------------------------------------------------ the gadget  --

// Instance of the reduction: g is the disjoint union of A, complement(B),
// K_n and I_n, with a complete join A-K and seeded perfect matchings A-I and
// K-B. Vertex layout: A = [0,n), K = [n,2n), complement(B) = [2n,3n),
// I = [3n,4n). The instance is a yes-instance iff A and B are isomorphic.
struct GadgetInstance {
    Graph a;
    Graph b;
    Graph graph;
    std::uint64_t seed = 0;
    std::vector<int> a_to_i;    // A vertex i matched to I vertex 3n + a_to_i[i]
    std::vector<int> k_to_bbar; // K vertex n + j matched to 2n + k_to_bbar[j]
};

inline GadgetInstance gi_gadget(const Graph& a, const Graph& b, std::uint64_t seed) {
    int n = a.order();
    if (b.order() != n) throw input_error("gi_gadget: inputs must have equal order");
    if (n < 3) throw input_error("gi_gadget: order must be at least 3");
    if (!is_split(a)) throw input_error("gi_gadget: first input is not a split graph");
    if (!is_split(b)) throw input_error("gi_gadget: second input is not a split graph");
    if (!is_connected(a)) throw input_error("gi_gadget: first input is not connected");
    if (!is_connected(b)) throw input_error("gi_gadget: second input is not connected");
    for (int v = 0; v < n; ++v)
        if (a.degree(v) == 0 || b.degree(v) == 0)
            throw input_error("gi_gadget: inputs must not contain isolated vertices");

    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0xda942042e4dd58b5ULL);
    GadgetInstance inst;
    inst.a = a;
    inst.b = b;
    inst.seed = seed;
    inst.a_to_i = detail::random_permutation(rng, n);
    inst.k_to_bbar = detail::random_permutation(rng, n);

    Graph g(4 * n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (a.adjacent(u, v)) g.add_edge(u, v);           // A
            g.add_edge(n + u, n + v);                          // K
            if (!b.adjacent(u, v)) g.add_edge(2 * n + u, 2 * n + v);  // complement(B)
        }
    for (int u = 0; u < n; ++u)
        for (int k = 0; k < n; ++k) g.add_edge(u, n + k);      // join A-K
    for (int i = 0; i < n; ++i) g.add_edge(i, 3 * n + inst.a_to_i[static_cast<size_t>(i)]);
    for (int j = 0; j < n; ++j) g.add_edge(n + j, 2 * n + inst.k_to_bbar[static_cast<size_t>(j)]);
    inst.graph = std::move(g);
    return inst;
}

inline nlohmann::json gadget_provenance(const GadgetInstance& inst) {
    nlohmann::json j;
    j["kind"] = "gadget";
    j["n"] = inst.a.order();
    j["a_graph6"] = to_graph6(inst.a);
    j["b_graph6"] = to_graph6(inst.b);
    j["seed"] = inst.seed;
    j["layout"] = "A=[0,n) K=[n,2n) Bbar=[2n,3n) I=[3n,4n)";
    j["a_to_i"] = inst.a_to_i;
    j["k_to_bbar"] = inst.k_to_bbar;
    return j;
}

// Induced cycle of length >= min_len, or nothing; used to check the gadget
// class guarantee (no C_k or complement(C_k) with k >= 7).
// Grows induced paths from the smallest cycle vertex. Interior vertices of a
// chordless cycle never touch the start, so a start-adjacent vertex can only
// close the cycle, never be extended past.
inline std::optional<std::vector<int>> find_long_induced_cycle(const Graph& g, int min_len) {
    int n = g.order();
    std::vector<int> path;
    std::optional<std::vector<int>> result;
    auto dfs = [&](auto&& self, int start, int last, const Bits& banned) -> bool {
        if (path.size() >= 3 && g.adjacent(last, start)) {
            // second vertex below the last kills the reflected duplicate
            if (static_cast<int>(path.size()) >= min_len && path[1] < path.back()) {
                result = path;
                return true;
            }
            return false;
        }
        Bits cand = g.neighbors(last).andnot(banned);
        for (int v = cand.first(); v >= 0; v = cand.next(v)) {
            if (v <= start) continue;
            bool chord = false;
            for (size_t i = 1; i + 1 < path.size(); ++i)
                if (g.adjacent(v, path[i])) { chord = true; break; }
            if (chord) continue;
            // from the third vertex on, touching the start is only allowed
            // for the vertex that closes the cycle
            if (path.size() >= 2 && g.adjacent(v, start) && static_cast<int>(path.size()) + 1 < min_len) continue;
            path.push_back(v);
            Bits nb = banned;
            nb.set(v);
            if (self(self, start, v, nb)) return true;
            path.pop_back();
        }
        return false;
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        Bits banned(n);
        banned.set(s);
        if (dfs(dfs, s, s, banned)) return result;
    }
    return std::nullopt;
}

inline bool free_of_long_cycles_and_complements(const Graph& g, int min_len = 7) {
    if (find_long_induced_cycle(g, min_len)) return false;
    if (find_long_induced_cycle(complement(g), min_len)) return false;
    return true;
}

}  // namespace compsub
