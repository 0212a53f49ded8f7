#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "isk4/graph.hpp"

namespace isk4 {

// A chordless cycle of length >= 4, stored in canonical orientation: the
// least vertex first, then the smaller of the two traversal directions.
struct Hole {
    std::vector<int> cycle;
    const Graph* host = nullptr;

    int length() const { return (int)cycle.size(); }
    Mask mask() const { return to_mask(cycle); }
    bool operator==(const Hole& o) const { return cycle == o.cycle; }
    bool operator<(const Hole& o) const {
        return cycle.size() != o.cycle.size() ? cycle.size() < o.cycle.size()
                                              : cycle < o.cycle;
    }
};

inline std::vector<int> canonical_cycle(std::vector<int> cyc) {
    auto lo = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), lo, cyc.end());
    if (cyc.size() > 2 && cyc[1] > cyc.back()) {
        std::reverse(cyc.begin() + 1, cyc.end());
    }
    return cyc;
}

// True iff the sequence is a chordless cycle of g with length >= 4.
inline bool is_hole_of(const Graph& g, const std::vector<int>& cyc) {
    int k = (int)cyc.size();
    if (k < 4) return false;
    Mask seen = 0;
    for (int v : cyc) {
        if (v < 0 || v >= g.vertex_count() || (seen & bit(v))) return false;
        seen |= bit(v);
    }
    for (int i = 0; i < k; ++i) {
        Mask expect = bit(cyc[(i + 1) % k]) | bit(cyc[(i + k - 1) % k]);
        if ((g.neighbors(cyc[i]) & seen) != expect) return false;
    }
    return true;
}

// Visits every hole of length <= max_len (all lengths when max_len is 0)
// exactly once, in canonical orientation.  The search roots each hole at its
// minimum vertex and breaks the reflection by requiring second < last.
inline void for_each_hole(const Graph& g, int max_len,
                          const std::function<void(const Hole&)>& visit) {
    int n = g.vertex_count();
    int cap = max_len > 0 ? max_len : n;
    if (cap < 4) return;
    std::vector<int> path;
    path.reserve(cap);

    // Every vertex on the path except the root is adjacent to exactly its
    // path predecessor; adjacency back to the root is only allowed when the
    // cycle closes on the spot (anything else would be a chord).
    std::function<void(Mask)> extend = [&](Mask path_mask) {
        int root = path[0];
        int last = path.back();
        for (int w : Bits{g.neighbors(last) & ~full_mask(root + 1) & ~path_mask}) {
            Mask back = g.neighbors(w) & path_mask;
            bool closes = g.adjacent(w, root);
            if (closes) {
                if ((int)path.size() + 1 >= 4 && back == (bit(last) | bit(root)) &&
                    path[1] < w) {
                    path.push_back(w);
                    visit(Hole{path, &g});
                    path.pop_back();
                }
                continue;  // extending past w would leave the w-root chord
            }
            if (back != bit(last)) continue;
            if ((int)path.size() + 1 >= cap) continue;
            path.push_back(w);
            extend(path_mask | bit(w));
            path.pop_back();
        }
    };

    for (int root = 0; root < n; ++root) {
        for (int a : Bits{g.neighbors(root) & ~full_mask(root + 1)}) {
            path.assign({root, a});
            extend(bit(root) | bit(a));
        }
    }
}

inline std::vector<Hole> enumerate_holes(const Graph& g, int max_len = 0) {
    std::vector<Hole> out;
    for_each_hole(g, max_len, [&](const Hole& h) { out.push_back(h); });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace isk4
