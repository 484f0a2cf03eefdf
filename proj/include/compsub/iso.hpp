#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "compsub/graph.hpp"
#include "compsub/recognizers.hpp"

namespace compsub {

// An isomorphism is stored as the image vector: image[u] is the vertex of
// the second graph that u maps to.
using IsoMapping = std::vector<int>;

inline bool is_isomorphism(const Graph& g1, const Graph& g2, const IsoMapping& image) {
    if (g1.order() != g2.order() || static_cast<int>(image.size()) != g1.order()) return false;
    Bits hit(g2.order());
    for (int u = 0; u < g1.order(); ++u) {
        int v = image[static_cast<size_t>(u)];
        if (v < 0 || v >= g2.order() || hit.test(v)) return false;
        hit.set(v);
    }
    for (int u = 0; u < g1.order(); ++u)
        for (int v = u + 1; v < g1.order(); ++v)
            if (g1.adjacent(u, v) != g2.adjacent(image[static_cast<size_t>(u)], image[static_cast<size_t>(v)])) return false;
    return true;
}

// ------------------------------------------------------- cotree canonical --

// Deterministic code: leaves emit a fixed token, internal nodes emit their
// label followed by the sorted child codes. Equal codes <=> isomorphic
// cographs.
inline std::string cotree_canonical_code(const Cotree& t) {
    if (t.root < 0) return "";
    std::vector<std::string> code(t.nodes.size());
    for (size_t i = 0; i < t.nodes.size(); ++i) {  // nodes are stored children before parents
        const auto& nd = t.nodes[i];
        if (nd.kind == Cotree::Kind::Leaf) {
            code[i] = "x";
            continue;
        }
        std::vector<std::string> kids;
        kids.reserve(nd.children.size());
        for (int c : nd.children) kids.push_back(code[static_cast<size_t>(c)]);
        std::sort(kids.begin(), kids.end());
        std::string s(1, nd.kind == Cotree::Kind::Union ? 'u' : 'j');
        s += '(';
        for (const std::string& k : kids) s += k;
        s += ')';
        code[i] = std::move(s);
    }
    return code[static_cast<size_t>(t.root)];
}

namespace detail {

inline void align_cotrees(const Cotree& t1, int n1, const Cotree& t2, int n2,
                          const std::vector<std::string>& c1, const std::vector<std::string>& c2,
                          IsoMapping& image) {
    const auto& a = t1.nodes[static_cast<size_t>(n1)];
    const auto& b = t2.nodes[static_cast<size_t>(n2)];
    if (a.kind == Cotree::Kind::Leaf) {
        image[static_cast<size_t>(a.vertex)] = b.vertex;
        return;
    }
    auto sorted_children = [](const Cotree::Node& nd, const std::vector<std::string>& codes) {
        std::vector<int> ch = nd.children;
        std::stable_sort(ch.begin(), ch.end(), [&](int x, int y) {
            return codes[static_cast<size_t>(x)] < codes[static_cast<size_t>(y)];
        });
        return ch;
    };
    std::vector<int> ca = sorted_children(a, c1), cb = sorted_children(b, c2);
    for (size_t i = 0; i < ca.size(); ++i) align_cotrees(t1, ca[i], t2, cb[i], c1, c2, image);
}

inline std::vector<std::string> per_node_codes(const Cotree& t) {
    std::vector<std::string> code(t.nodes.size());
    for (size_t i = 0; i < t.nodes.size(); ++i) {
        const auto& nd = t.nodes[i];
        if (nd.kind == Cotree::Kind::Leaf) {
            code[i] = "x";
            continue;
        }
        std::vector<std::string> kids;
        for (int c : nd.children) kids.push_back(code[static_cast<size_t>(c)]);
        std::sort(kids.begin(), kids.end());
        std::string s(1, nd.kind == Cotree::Kind::Union ? 'u' : 'j');
        s += '(';
        for (const std::string& k : kids) s += k;
        s += ')';
        code[i] = std::move(s);
    }
    return code;
}

}  // namespace detail

// Concrete isomorphism between two cographs by aligning canonical cotrees,
// or nothing when the codes differ. Non-cograph input is a caller error.
inline std::optional<IsoMapping> cograph_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.order() != g2.order()) return std::nullopt;
    auto r1 = cograph_cotree(g1);
    auto r2 = cograph_cotree(g2);
    if (!std::holds_alternative<Cotree>(r1) || !std::holds_alternative<Cotree>(r2))
        throw input_error("cograph_isomorphic requires cograph inputs");
    const Cotree& t1 = std::get<Cotree>(r1);
    const Cotree& t2 = std::get<Cotree>(r2);
    if (g1.order() == 0) return IsoMapping{};
    auto c1 = detail::per_node_codes(t1);
    auto c2 = detail::per_node_codes(t2);
    if (c1[static_cast<size_t>(t1.root)] != c2[static_cast<size_t>(t2.root)]) return std::nullopt;
    IsoMapping image(static_cast<size_t>(g1.order()), -1);
    detail::align_cotrees(t1, t1.root, t2, t2.root, c1, c2, image);
    if (!is_isomorphism(g1, g2, image)) throw std::logic_error("cotree alignment produced a bad mapping");
    return image;
}

// ------------------------------------------------------- backtracking iso --

namespace detail {

// Shared color refinement: both graphs refine against one key table so equal
// colors mean equal refinement history.
inline std::pair<std::vector<int>, std::vector<int>> refine_colors(const Graph& g1, const Graph& g2) {
    int n = g1.order();
    std::vector<int> c1(static_cast<size_t>(n)), c2(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        c1[static_cast<size_t>(v)] = g1.degree(v);
        c2[static_cast<size_t>(v)] = g2.degree(v);
    }
    for (int round = 0; round < n; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> table;
        auto key_of = [&](const Graph& g, const std::vector<int>& c, int v) {
            std::vector<int> nb;
            g.neighbors(v).for_each([&](int w) { nb.push_back(c[static_cast<size_t>(w)]); });
            std::sort(nb.begin(), nb.end());
            return std::make_pair(c[static_cast<size_t>(v)], std::move(nb));
        };
        std::vector<std::pair<int, std::vector<int>>> k1(static_cast<size_t>(n)), k2(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            k1[static_cast<size_t>(v)] = key_of(g1, c1, v);
            k2[static_cast<size_t>(v)] = key_of(g2, c2, v);
            table[k1[static_cast<size_t>(v)]] = 0;
            table[k2[static_cast<size_t>(v)]] = 0;
        }
        int next = 0;
        for (auto& [k, id] : table) id = next++;
        std::vector<int> n1(static_cast<size_t>(n)), n2(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            n1[static_cast<size_t>(v)] = table[k1[static_cast<size_t>(v)]];
            n2[static_cast<size_t>(v)] = table[k2[static_cast<size_t>(v)]];
        }
        if (n1 == c1 && n2 == c2) break;
        c1 = std::move(n1);
        c2 = std::move(n2);
    }
    return {c1, c2};
}

}  // namespace detail

// Exact small-order isomorphism oracle: color refinement plus backtracking.
// Intended for desk-scale validation; orders above `hard_limit` are refused.
inline std::optional<IsoMapping> backtracking_isomorphic(const Graph& g1, const Graph& g2, int hard_limit = 24) {
    if (g1.order() != g2.order()) return std::nullopt;
    int n = g1.order();
    if (n > hard_limit)
        throw resource_error("backtracking_isomorphic: order " + std::to_string(n) + " exceeds limit " + std::to_string(hard_limit));
    if (g1.edge_count() != g2.edge_count()) return std::nullopt;
    if (n == 0) return IsoMapping{};

    auto [c1, c2] = detail::refine_colors(g1, g2);
    {
        std::vector<int> h1 = c1, h2 = c2;
        std::sort(h1.begin(), h1.end());
        std::sort(h2.begin(), h2.end());
        if (h1 != h2) return std::nullopt;
    }

    // map scarce colors first
    std::vector<int> class_size(static_cast<size_t>(n) * 0 + 1, 0);
    int maxc = 0;
    for (int v = 0; v < n; ++v) maxc = std::max(maxc, std::max(c1[static_cast<size_t>(v)], c2[static_cast<size_t>(v)]));
    class_size.assign(static_cast<size_t>(maxc) + 1, 0);
    for (int v = 0; v < n; ++v) ++class_size[static_cast<size_t>(c1[static_cast<size_t>(v)])];
    std::vector<int> order(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<size_t>(v)] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int sa = class_size[static_cast<size_t>(c1[static_cast<size_t>(a)])];
        int sb = class_size[static_cast<size_t>(c1[static_cast<size_t>(b)])];
        if (sa != sb) return sa < sb;
        if (g1.degree(a) != g1.degree(b)) return g1.degree(a) > g1.degree(b);
        return a < b;
    });

    IsoMapping image(static_cast<size_t>(n), -1);
    Bits used(n);

    auto dfs = [&](auto&& self, int idx) -> bool {
        if (idx == n) return true;
        int u = order[static_cast<size_t>(idx)];
        for (int v = 0; v < n; ++v) {
            if (used.test(v) || c2[static_cast<size_t>(v)] != c1[static_cast<size_t>(u)]) continue;
            bool ok = true;
            for (int j = 0; j < idx && ok; ++j) {
                int w = order[static_cast<size_t>(j)];
                if (g1.adjacent(u, w) != g2.adjacent(v, image[static_cast<size_t>(w)])) ok = false;
            }
            if (!ok) continue;
            image[static_cast<size_t>(u)] = v;
            used.set(v);
            if (self(self, idx + 1)) return true;
            used.reset(v);
            image[static_cast<size_t>(u)] = -1;
        }
        return false;
    };

    if (!dfs(dfs, 0)) return std::nullopt;
    if (!is_isomorphism(g1, g2, image)) throw std::logic_error("backtracking produced a bad mapping");
    return image;
}

// ------------------------------------------------ cluster + apex extension --

// Per-clique statistics with respect to the ordered modulator pair. Cliques
// can be matched exactly when all four numbers agree.
struct CliqueTypeSignature {
    int size = 0;
    int only_w = 0;
    int only_w2 = 0;
    int both = 0;

    auto tie() const { return std::tie(size, only_w, only_w2, both); }
    bool operator<(const CliqueTypeSignature& o) const { return tie() < o.tie(); }
    bool operator==(const CliqueTypeSignature& o) const { return tie() == o.tie(); }
};

// Extends the modulator mapping f (given as aligned vertex lists) to a full
// isomorphism g1 -> h2, where g1 minus s1 and h2 minus s2 are cluster
// graphs. Within a matched pair of cliques vertices are interchangeable
// class by class, so matching the signature multisets is exact.
inline std::optional<IsoMapping> cluster_apex_isomorphism(const Graph& g1, const Graph& h2,
                                                          const std::vector<int>& s1,
                                                          const std::vector<int>& s2) {
    if (g1.order() != h2.order()) throw input_error("cluster_apex_isomorphism: order mismatch");
    if (s1.size() != s2.size() || s1.size() > 2) throw input_error("cluster_apex_isomorphism: bad modulator sizes");
    int n = g1.order();
    Bits m1(n), m2(n);
    for (int v : s1) { g1.check_vertex(v); m1.set(v); }
    for (int v : s2) { h2.check_vertex(v); m2.set(v); }
    if (m1.count() != static_cast<int>(s1.size()) || m2.count() != static_cast<int>(s2.size()))
        throw input_error("cluster_apex_isomorphism: repeated modulator vertex");
    if (!detail::is_cluster_without(g1, m1) || !detail::is_cluster_without(h2, m2))
        throw input_error("cluster_apex_isomorphism: removing the modulator must leave a cluster graph");

    // the modulators must correspond under f
    for (size_t i = 0; i < s1.size(); ++i)
        for (size_t j = i + 1; j < s1.size(); ++j)
            if (g1.adjacent(s1[i], s1[j]) != h2.adjacent(s2[i], s2[j])) return std::nullopt;

    auto signature = [](const Graph& g, const Bits& clique, const std::vector<int>& s) {
        CliqueTypeSignature sig;
        sig.size = clique.count();
        Bits nw = s.size() > 0 ? (g.neighbors(s[0]) & clique) : Bits(g.order());
        Bits nw2 = s.size() > 1 ? (g.neighbors(s[1]) & clique) : Bits(g.order());
        sig.both = nw.count_and(nw2);
        sig.only_w = nw.count() - sig.both;
        sig.only_w2 = nw2.count() - sig.both;
        return sig;
    };

    auto cliques1 = detail::components_in_mask(g1, Bits::full(n).andnot(m1), false);
    auto cliques2 = detail::components_in_mask(h2, Bits::full(n).andnot(m2), false);
    if (cliques1.size() != cliques2.size()) return std::nullopt;

    using Entry = std::pair<CliqueTypeSignature, Bits>;
    std::vector<Entry> e1, e2;
    for (const Bits& c : cliques1) e1.push_back({signature(g1, c, s1), c});
    for (const Bits& c : cliques2) e2.push_back({signature(h2, c, s2), c});
    auto by_sig = [](const Entry& a, const Entry& b) {
        if (!(a.first == b.first)) return a.first < b.first;
        return a.second.words() < b.second.words();
    };
    std::sort(e1.begin(), e1.end(), by_sig);
    std::sort(e2.begin(), e2.end(), by_sig);
    for (size_t i = 0; i < e1.size(); ++i)
        if (!(e1[i].first == e2[i].first)) return std::nullopt;

    IsoMapping image(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < s1.size(); ++i) image[static_cast<size_t>(s1[i])] = s2[i];

    auto clique_class = [](const Graph& g, int v, const std::vector<int>& s) {
        int c = 0;
        if (s.size() > 0 && g.adjacent(v, s[0])) c |= 1;
        if (s.size() > 1 && g.adjacent(v, s[1])) c |= 2;
        return c;
    };
    for (size_t i = 0; i < e1.size(); ++i) {
        std::array<std::vector<int>, 4> cls1, cls2;
        e1[i].second.for_each([&](int v) { cls1[static_cast<size_t>(clique_class(g1, v, s1))].push_back(v); });
        e2[i].second.for_each([&](int v) { cls2[static_cast<size_t>(clique_class(h2, v, s2))].push_back(v); });
        for (int c = 0; c < 4; ++c) {
            if (cls1[static_cast<size_t>(c)].size() != cls2[static_cast<size_t>(c)].size()) return std::nullopt;
            for (size_t k = 0; k < cls1[static_cast<size_t>(c)].size(); ++k)
                image[static_cast<size_t>(cls1[static_cast<size_t>(c)][k])] = cls2[static_cast<size_t>(c)][k];
        }
    }
    if (!is_isomorphism(g1, h2, image)) return std::nullopt;
    return image;
}

// Set-based entry point: tries every bijection s1 -> s2 (at most two).
inline std::optional<IsoMapping> cluster_apex_isomorphism_any(const Graph& g1, const Graph& h2,
                                                              const Bits& s1, const Bits& s2) {
    std::vector<int> a = s1.to_vector(), b = s2.to_vector();
    if (a.size() != b.size()) return std::nullopt;
    if (auto r = cluster_apex_isomorphism(g1, h2, a, b)) return r;
    if (a.size() == 2) {
        std::swap(b[0], b[1]);
        if (auto r = cluster_apex_isomorphism(g1, h2, a, b)) return r;
    }
    return std::nullopt;
}

}  // namespace compsub
