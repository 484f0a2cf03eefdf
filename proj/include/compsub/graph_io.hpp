#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "compsub/graph.hpp"

namespace compsub {

// graph6 (McKay): printable chars 63..126, 6 data bits per char, upper
// triangle in column order x(0,1), x(0,2), x(1,2), x(0,3), ...
inline std::string to_graph6(const Graph& g) {
    int n = g.order();
    if (n > 258047) throw resource_error("graph6 writer supports order <= 258047");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph from_graph6(std::string_view s) {
    constexpr std::string_view header = ">>graph6<<";
    if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
    if (s.empty()) throw input_error("empty graph6 string");
    size_t pos = 0;
    auto take = [&]() -> int {
        if (pos >= s.size()) throw input_error("truncated graph6 string");
        int c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw input_error("invalid graph6 byte at position " + std::to_string(pos - 1));
        return c - 63;
    };
    long long n;
    if (static_cast<unsigned char>(s[0]) == 126) {
        ++pos;
        if (pos < s.size() && static_cast<unsigned char>(s[pos]) == 126)
            throw resource_error("graph6 orders above 258047 are not supported");
        long long a = take(), b = take(), c = take();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = take();
    }
    Graph g(static_cast<int>(n));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                acc = take();
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) g.add_edge(i, j);
            --nbits;
        }
    }
    if (pos < s.size()) throw input_error("trailing bytes after graph6 data");
    return g;
}

// Edge-list text: first line "n m", then m lines "u v" (0-based).
// Blank lines and lines starting with '#' are ignored.
inline Graph from_edge_list(std::istream& in) {
    std::string line;
    long lineno = 0;
    auto next_data_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos || line[i] == '#') continue;
            return true;
        }
        return false;
    };
    if (!next_data_line()) throw input_error("edge list: missing header line \"n m\"");
    long long n, m;
    {
        std::istringstream hs(line);
        if (!(hs >> n >> m) || n < 0 || m < 0)
            throw input_error("edge list line " + std::to_string(lineno) + ": expected \"n m\"");
        std::string rest;
        if (hs >> rest) throw input_error("edge list line " + std::to_string(lineno) + ": unexpected token \"" + rest + "\"");
    }
    Graph g(static_cast<int>(n));
    for (long long k = 0; k < m; ++k) {
        if (!next_data_line())
            throw input_error("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(k));
        std::istringstream es(line);
        long long u, v;
        if (!(es >> u >> v))
            throw input_error("edge list line " + std::to_string(lineno) + ": expected \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw input_error("edge list line " + std::to_string(lineno) + ": vertex out of range");
        if (u == v) throw input_error("edge list line " + std::to_string(lineno) + ": self-loop");
        if (g.adjacent(static_cast<int>(u), static_cast<int>(v)))
            throw input_error("edge list line " + std::to_string(lineno) + ": duplicate edge");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_data_line())
        throw input_error("edge list line " + std::to_string(lineno) + ": data after the declared edge count");
    return g;
}

inline Graph from_edge_list(const std::string& text) {
    std::istringstream in(text);
    return from_edge_list(in);
}

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v)) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace compsub
