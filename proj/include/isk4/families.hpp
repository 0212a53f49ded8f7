#pragma once

#include <numeric>
#include <vector>

#include "isk4/graph.hpp"

namespace isk4 {

// Small named families used all over the test harness.

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, es);
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph(n, es);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph(n, es);
}

inline Graph complete_multipartite(const std::vector<int>& parts) {
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    std::vector<int> side;
    for (size_t p = 0; p < parts.size(); ++p)
        for (int i = 0; i < parts[p]; ++i) side.push_back((int)p);
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (side[i] != side[j]) es.emplace_back(i, j);
    return Graph(n, es);
}

inline Graph complete_bipartite(int a, int b) { return complete_multipartite({a, b}); }

// Two hubs joined by `branches` internally disjoint paths, each with
// `inner` internal vertices.  theta_graph(3, 2) is the classic theta.
inline Graph theta_graph(int branches, int inner) {
    int n = 2 + branches * inner;
    std::vector<std::pair<int, int>> es;
    int next = 2;
    for (int b = 0; b < branches; ++b) {
        int prev = 0;
        for (int i = 0; i < inner; ++i) {
            es.emplace_back(prev, next);
            prev = next++;
        }
        es.emplace_back(prev, 1);
    }
    return Graph(n, es);
}

inline Graph prism_graph() {
    return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
}

inline Graph petersen_graph() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);      // outer C5
        es.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        es.emplace_back(i, 5 + i);            // spokes
    }
    return Graph(10, es);
}

// Cycle v_0..v_{len-1} plus a hub (id len) adjacent to the listed rim vertices.
inline Graph wheel_like(int len, const std::vector<int>& rim_neighbors) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < len; ++i) es.emplace_back(i, (i + 1) % len);
    for (int r : rim_neighbors) es.emplace_back(len, r);
    return Graph(len + 1, es);
}

}  // namespace isk4
