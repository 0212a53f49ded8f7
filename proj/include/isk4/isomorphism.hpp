#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "isk4/graph.hpp"

namespace isk4 {

// Canonical form: the minimum adjacency bit-string over all vertex orderings
// whose position degrees follow the sorted (ascending) degree sequence.  The
// restriction is isomorphism-invariant, so equal codes <=> isomorphic graphs.
// Bits are in colex column order x(0,1), x(0,2), x(1,2), x(0,4), ... which is
// also the graph6 body order.  Supports n <= 16 (128 code bits).

struct CanonCode {
    std::array<std::uint64_t, 2> w{0, 0};
    bool operator==(const CanonCode& o) const { return w == o.w; }
    bool operator<(const CanonCode& o) const { return w < o.w; }
    void set(int pos) { w[pos >> 6] |= std::uint64_t{1} << (63 - (pos & 63)); }
    void clear(int pos) { w[pos >> 6] &= ~(std::uint64_t{1} << (63 - (pos & 63))); }
    bool get(int pos) const { return (w[pos >> 6] >> (63 - (pos & 63))) & 1; }
};

struct CanonResult {
    CanonCode code;
    std::vector<int> perm;  // perm[position] = original vertex
};

struct CanonHash {
    size_t operator()(const CanonCode& c) const {
        return std::hash<std::uint64_t>()(c.w[0] * 0x9e3779b97f4a7c15ULL ^ c.w[1]);
    }
};

namespace detail {

struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<int> pos_degree;               // required degree per position
    std::array<Mask, kMaxVertices> twins{};    // pairwise interchangeable vertices
    std::array<int, 16> placed{};
    CanonCode cur, best;
    std::vector<int> best_perm;
    bool have_best = false;

    explicit CanonSearch(const Graph& gr) : g(gr), n(gr.vertex_count()) {
        pos_degree = g.degree_sequence();
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if ((g.neighbors(u) & ~bit(v)) == (g.neighbors(v) & ~bit(u))) {
                    twins[u] |= bit(v);
                    twins[v] |= bit(u);
                }
    }

    // Compare `value` (p bits) against best's bits at [off, off+p); <0/=0/>0.
    int cmp_best(int off, int p, unsigned value) const {
        for (int i = 0; i < p; ++i) {
            int b = (value >> (p - 1 - i)) & 1;
            int bb = best.get(off + i) ? 1 : 0;
            if (b != bb) return b - bb;
        }
        return 0;
    }

    void write_bits(int off, int p, unsigned value) {
        for (int i = 0; i < p; ++i) {
            if ((value >> (p - 1 - i)) & 1)
                cur.set(off + i);
            else
                cur.clear(off + i);
        }
    }

    // `less` means the code prefix written so far is strictly below the best;
    // returns whether this subtree replaced the best, which resets the state
    // (our prefix then *equals* the new best's prefix).
    bool dfs(int p, Mask used, bool less) {
        if (p == n) {
            if (!have_best || less) {
                best = cur;
                best_perm.assign(placed.begin(), placed.begin() + n);
                have_best = true;
                return true;
            }
            return false;
        }
        int off = p * (p - 1) / 2;
        struct Cand {
            unsigned value;
            int v;
        };
        std::array<Cand, kMaxVertices> cands;
        int nc = 0;
        for (int v = 0; v < n; ++v) {
            if (used & bit(v)) continue;
            if (g.degree(v) != pos_degree[p]) continue;
            unsigned value = 0;
            Mask nb = g.neighbors(v);
            for (int i = 0; i < p; ++i) value = value << 1 | ((nb >> placed[i]) & 1);
            cands[nc++] = {value, v};
        }
        std::sort(cands.begin(), cands.begin() + nc,
                  [](const Cand& a, const Cand& b) {
                      return a.value != b.value ? a.value < b.value : a.v < b.v;
                  });
        Mask tried = 0;
        bool updated_any = false;
        for (int c = 0; c < nc; ++c) {
            auto [value, v] = cands[c];
            if (twins[v] & tried) continue;  // an interchangeable vertex was tried
            tried |= bit(v);
            bool cless = less;
            if (!cless && have_best) {
                int d = cmp_best(off, p, value);
                if (d > 0) break;  // candidates are sorted, the rest are >= too
                if (d < 0) cless = true;
            }
            write_bits(off, p, value);
            placed[p] = v;
            if (dfs(p + 1, used | bit(v), cless)) {
                updated_any = true;
                less = false;
            }
        }
        return updated_any;
    }
};

}  // namespace detail

inline CanonResult canonical_form(const Graph& g) {
    if (g.vertex_count() > 16) throw Error("canonical_form supports n <= 16");
    if (g.vertex_count() == 0) return {CanonCode{}, {}};
    detail::CanonSearch s(g);
    s.dfs(0, 0, false);
    return {s.best, s.best_perm};
}

inline Graph canonical_graph(const Graph& g) {
    auto r = canonical_form(g);
    return g.relabeled(r.perm);
}

// Exact isomorphism test by backtracking with degree pruning; `pins` are
// required vertex correspondences (gv -> hv).
inline bool are_isomorphic(const Graph& g, const Graph& h,
                           const std::vector<std::pair<int, int>>& pins = {}) {
    int n = g.vertex_count();
    if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    if (g.degree_sequence() != h.degree_sequence()) return false;

    std::vector<int> order;
    Mask ordered = 0;
    for (auto [gv, hv] : pins) {
        if (gv < 0 || gv >= n || hv < 0 || hv >= n) return false;
        if (g.degree(gv) != h.degree(hv)) return false;
        if (!(ordered & bit(gv))) {
            order.push_back(gv);
            ordered |= bit(gv);
        }
    }
    // place remaining vertices neighbors-first so adjacency prunes early
    while ((int)order.size() < n) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (ordered & bit(v)) continue;
            bool touches = (g.neighbors(v) & ordered) != 0;
            if (pick == -1 ||
                (touches && !((g.neighbors(pick) & ordered) != 0)) ||
                (touches == ((g.neighbors(pick) & ordered) != 0) &&
                 g.degree(v) > g.degree(pick)))
                pick = v;
        }
        order.push_back(pick);
        ordered |= bit(pick);
    }

    std::array<int, kMaxVertices> map_gh{};
    map_gh.fill(-1);
    std::array<int, kMaxVertices> pin_of{};
    pin_of.fill(-1);
    for (auto [gv, hv] : pins) {
        if (pin_of[gv] != -1 && pin_of[gv] != hv) return false;
        pin_of[gv] = hv;
    }

    std::function<bool(int, Mask)> place = [&](int idx, Mask used_h) -> bool {
        if (idx == n) return true;
        int gv = order[idx];
        for (int hv = 0; hv < n; ++hv) {
            if (used_h & bit(hv)) continue;
            if (pin_of[gv] != -1 && pin_of[gv] != hv) continue;
            if (h.degree(hv) != g.degree(gv)) continue;
            bool ok = true;
            for (int j = 0; j < idx && ok; ++j)
                if (g.adjacent(gv, order[j]) != h.adjacent(hv, map_gh[order[j]])) ok = false;
            if (!ok) continue;
            map_gh[gv] = hv;
            if (place(idx + 1, used_h | bit(hv))) return true;
            map_gh[gv] = -1;
        }
        return false;
    };
    return place(0, 0);
}

}  // namespace isk4
