#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "isk4/cutsets.hpp"
#include "isk4/graph.hpp"

namespace isk4 {

// A tree whose vertices carry subsets of the labels {x, y}.
struct LabeledTree {
    Graph tree;
    Mask labels_x = 0;
    Mask labels_y = 0;
};

struct TreeSplit {
    enum class Tag { disjoint_paths, split_vertex };
    Tag tag = Tag::split_vertex;
    std::vector<int> path_p, path_q;  // each runs x-labelled -> y-labelled
    int vertex = -1;
    Mask tx = 0, ty = 0;
};

// The unique u-w path of a tree.
inline std::vector<int> tree_path(const Graph& t, int u, int w) {
    std::array<int, kMaxVertices> parent{};
    parent.fill(-2);
    parent[u] = -1;
    std::vector<int> queue{u};
    for (size_t q = 0; q < queue.size() && parent[w] == -2; ++q)
        for (int nb : Bits{t.neighbors(queue[q])})
            if (parent[nb] == -2) {
                parent[nb] = queue[q];
                queue.push_back(nb);
            }
    std::vector<int> path;
    for (int v = w; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

// Rooted parent/depth tables for allocation-free tree path masks.
struct TreePathTable {
    std::array<int, kMaxVertices> parent{};
    std::array<int, kMaxVertices> depth{};

    explicit TreePathTable(const Graph& t) {
        parent.fill(-2);
        if (t.vertex_count() == 0) return;
        parent[0] = -1;
        depth[0] = 0;
        std::array<int, kMaxVertices> queue{};
        int head = 0, tail = 0;
        queue[tail++] = 0;
        while (head < tail) {
            int v = queue[head++];
            for (int w : Bits{t.neighbors(v)})
                if (parent[w] == -2) {
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    queue[tail++] = w;
                }
        }
    }

    Mask path_mask(int u, int w) const {
        Mask m = 0;
        while (depth[u] > depth[w]) {
            m |= bit(u);
            u = parent[u];
        }
        while (depth[w] > depth[u]) {
            m |= bit(w);
            w = parent[w];
        }
        while (u != w) {
            m |= bit(u) | bit(w);
            u = parent[u];
            w = parent[w];
        }
        return m | bit(u);
    }
};

// The Menger-style dichotomy on labelled trees: either two vertex-disjoint
// x->y paths, or a vertex v splitting the tree into label-separating
// subtrees T_x, T_y.  Exactly one outcome ever applies.
inline TreeSplit tree_label_split(const LabeledTree& t) {
    const Graph& T = t.tree;
    if (!is_tree(T)) throw PreconditionError("tree_label_split", "input must be a tree");
    if ((t.labels_x | t.labels_y) & ~T.vertices())
        throw PreconditionError("tree_label_split", "labels must be tree vertices");

    // With at most one label of a kind, that vertex (any vertex when the
    // label is unused) already blocks every x->y path.
    if (std::popcount(t.labels_x) <= 1) {
        int v = t.labels_x ? std::countr_zero(t.labels_x) : 0;
        TreeSplit s;
        s.tag = TreeSplit::Tag::split_vertex;
        s.vertex = v;
        s.tx = bit(v);
        s.ty = T.vertices();
        return s;
    }
    if (std::popcount(t.labels_y) <= 1) {
        int v = t.labels_y ? std::countr_zero(t.labels_y) : 0;
        TreeSplit s;
        s.tag = TreeSplit::Tag::split_vertex;
        s.vertex = v;
        s.ty = bit(v);
        s.tx = T.vertices();
        return s;
    }

    TreePathTable paths(T);
    Mask common = T.vertices();
    for (int u : Bits{t.labels_x})
        for (int w : Bits{t.labels_y}) {
            common &= paths.path_mask(u, w);
            if (!common) break;
        }
    if (common) {
        int v = std::countr_zero(common);
        TreeSplit s;
        s.tag = TreeSplit::Tag::split_vertex;
        s.vertex = v;
        s.tx = bit(v);
        s.ty = bit(v);
        for (Mask comp : components(T, T.vertices() & ~bit(v))) {
            if (comp & t.labels_x)
                s.tx |= comp;
            else
                s.ty |= comp;
        }
        return s;
    }

    // Paths are subtrees; with no common vertex the Helly property forces
    // some pair to be disjoint.
    for (int u1 : Bits{t.labels_x})
        for (int w1 : Bits{t.labels_y}) {
            Mask p = paths.path_mask(u1, w1);
            for (int u2 : Bits{t.labels_x})
                for (int w2 : Bits{t.labels_y}) {
                    if (std::make_pair(u2, w2) <= std::make_pair(u1, w1)) continue;
                    if (p & paths.path_mask(u2, w2)) continue;
                    TreeSplit s;
                    s.tag = TreeSplit::Tag::disjoint_paths;
                    s.path_p = tree_path(T, u1, w1);
                    s.path_q = tree_path(T, u2, w2);
                    return s;
                }
        }
    throw Error("tree_label_split: Helly property failed");  // unreachable
}

// Four vertices a, b, c, d in cyclic order along `cyc` with degrees
// 2, >=3, 2, >=3 in g; the lexicographically least such quadruple.
inline std::optional<std::array<int, 4>> four_degree_pattern(const Graph& g,
                                                             const std::vector<int>& cyc) {
    int len = (int)cyc.size();
    if (len < 3) throw PreconditionError("four_degree_pattern", "not a cycle");
    Mask seen = 0;
    for (int i = 0; i < len; ++i) {
        int v = cyc[i];
        if (v < 0 || v >= g.vertex_count() || (seen & bit(v)) ||
            !g.adjacent(v, cyc[(i + 1) % len]))
            throw PreconditionError("four_degree_pattern", "not a cycle");
        seen |= bit(v);
    }
    std::optional<std::array<int, 4>> best;
    auto offer = [&](int a, int b, int c, int d) {
        std::array<int, 4> cand{cyc[a], cyc[b], cyc[c], cyc[d]};
        if (!best || cand < *best) best = cand;
    };
    auto deg2 = [&](int pos) { return g.degree(cyc[pos]) == 2; };
    auto deg3 = [&](int pos) { return g.degree(cyc[pos]) >= 3; };
    for (int p = 0; p < len; ++p)
        for (int q = p + 1; q < len; ++q)
            for (int r = q + 1; r < len; ++r)
                for (int s = r + 1; s < len; ++s) {
                    if (deg2(p) && deg3(q) && deg2(r) && deg3(s)) {
                        offer(p, q, r, s);
                        offer(r, s, p, q);
                    }
                    if (deg3(p) && deg2(q) && deg3(r) && deg2(s)) {
                        offer(q, r, s, p);
                        offer(s, p, q, r);
                    }
                }
    return best;
}

// Blocks of a proper 2-cutset decomposition: each side plus a degree-2
// marker standing in for the other side.
struct BlockPair {
    Graph g_x, g_y;
    int marker_y_in_x = -1;         // m_Y, lives in g_x
    int marker_x_in_y = -1;         // m_X, lives in g_y
    std::vector<int> map_x, map_y;  // block id -> parent id, -1 for the marker
};

inline bool valid_proper_two_witness(const Graph& g, const CutsetWitness& w) {
    if (w.kind != CutsetWitness::Kind::proper_two) return false;
    auto [a, b] = w.anchor;
    if (a < 0 || b < 0 || a >= g.vertex_count() || b >= g.vertex_count() || a == b) return false;
    if (g.adjacent(a, b)) return false;
    Mask xs = to_mask(w.side_x), ys = to_mask(w.side_y), ab = bit(a) | bit(b);
    if (!xs || !ys || (xs & ys) || ((xs | ys | ab) != g.vertices())) return false;
    for (int v : Bits{xs})
        if (g.neighbors(v) & ys) return false;
    auto good_side = [&](Mask side) {
        auto sub = induced(g, side | ab);
        int na = -1, nb = -1;
        for (size_t i = 0; i < sub.vertex_map.size(); ++i) {
            if (sub.vertex_map[i] == a) na = (int)i;
            if (sub.vertex_map[i] == b) nb = (int)i;
        }
        Mask comp = component_of(sub.graph, na, sub.graph.vertices());
        if (!(comp & bit(nb))) return false;  // needs an ab-path
        return !is_path_graph(sub.graph);
    };
    return good_side(xs) && good_side(ys);
}

inline BlockPair chordless_blocks(const Graph& g, const CutsetWitness& w) {
    if (!valid_proper_two_witness(g, w))
        throw PreconditionError("chordless_blocks", "invalid proper 2-cutset witness");
    auto [a, b] = w.anchor;
    auto build = [&](Mask side) {
        auto sub = induced(g, side | bit(a) | bit(b));
        Mask marker_nbrs = 0;
        for (size_t i = 0; i < sub.vertex_map.size(); ++i)
            if (sub.vertex_map[i] == a || sub.vertex_map[i] == b) marker_nbrs |= bit((int)i);
        Graph block = sub.graph.extended(marker_nbrs);
        std::vector<int> map = sub.vertex_map;
        map.push_back(-1);
        return std::make_pair(block, map);
    };
    BlockPair out;
    auto [gx, mx] = build(to_mask(w.side_x));
    auto [gy, my] = build(to_mask(w.side_y));
    out.g_x = gx;
    out.map_x = mx;
    out.marker_y_in_x = gx.vertex_count() - 1;
    out.g_y = gy;
    out.map_y = my;
    out.marker_x_in_y = gy.vertex_count() - 1;
    return out;
}

}  // namespace isk4
