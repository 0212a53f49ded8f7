#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "isk4/graph.hpp"

namespace isk4 {

// graph6 codec, single-byte order only (n <= 62).  The body packs the upper
// triangle of the adjacency matrix in column order x(0,1), x(0,2), x(1,2),
// x(0,3), ..., six bits per byte (high bit first), each byte offset by 63.

inline Graph parse_graph6(const std::string& line) {
    if (line.empty()) throw FormatError("empty graph6 line");
    for (char c : line)
        if (c < 63 || c > 126) throw FormatError("graph6 byte out of range 63..126");
    if (line[0] == 126) throw FormatError("graph6 orders above 62 are not supported");
    int n = line[0] - 63;
    int nbits = n * (n - 1) / 2;
    int nbytes = (nbits + 5) / 6;
    if ((int)line.size() != 1 + nbytes)
        throw FormatError("graph6 body has wrong length for order " + std::to_string(n));
    std::vector<std::pair<int, int>> es;
    int idx = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++idx) {
            int byte = line[1 + idx / 6] - 63;
            if ((byte >> (5 - idx % 6)) & 1) es.emplace_back(row, col);
        }
    // trailing pad bits must be zero
    for (int i = nbits; i < 6 * nbytes; ++i) {
        int byte = line[1 + i / 6] - 63;
        if ((byte >> (5 - i % 6)) & 1) throw FormatError("graph6 padding bits are nonzero");
    }
    return Graph(n, es);
}

inline std::string write_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > 62) throw FormatError("graph6 orders above 62 are not supported");
    int nbits = n * (n - 1) / 2;
    std::string out(1 + (nbits + 5) / 6, char(63));
    out[0] = char(63 + n);
    int idx = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++idx)
            if (g.adjacent(row, col)) out[1 + idx / 6] += char(1 << (5 - idx % 6));
    return out;
}

// Reads every graph6 line of a file body (blank lines and the optional
// ">>graph6<<" header are skipped).
inline std::vector<Graph> parse_graph6_file(const std::string& text) {
    std::vector<Graph> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line == ">>graph6<<") continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

// Edge-list format: optional header "n <count>", then lines "u v".
// Isolated vertices exist only when the header declares them.
inline Graph parse_edgelist(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int declared_n = -1;
    std::vector<std::pair<int, int>> es;
    int max_id = -1;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string a;
        if (!(ls >> a)) continue;  // blank
        if (first && a == "n") {
            if (!(ls >> declared_n) || declared_n < 0) throw FormatError("bad edge-list header");
            first = false;
            continue;
        }
        first = false;
        long long u, v;
        try {
            u = std::stoll(a);
        } catch (...) {
            throw FormatError("bad edge-list token: " + a);
        }
        if (!(ls >> v)) throw FormatError("edge line needs two endpoints: " + line);
        if (u < 0 || v < 0) throw FormatError("negative vertex id");
        if (u == v) throw FormatError("self-loop " + std::to_string(u));
        if (u >= kMaxVertices || v >= kMaxVertices)
            throw FormatError("vertex id beyond supported order 64");
        max_id = std::max(max_id, (int)std::max(u, v));
        es.emplace_back((int)u, (int)v);
    }
    int n = declared_n >= 0 ? declared_n : max_id + 1;
    if (max_id >= n) throw FormatError("vertex id >= declared order");
    try {
        return Graph(n, es);
    } catch (const Error& e) {
        throw FormatError(e.what());
    }
}

}  // namespace isk4
