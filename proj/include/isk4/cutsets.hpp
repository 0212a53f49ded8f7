#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "isk4/graph.hpp"

namespace isk4 {

struct CutsetWitness {
    enum class Kind { clique, star, double_star, proper_two };
    Kind kind = Kind::clique;
    std::vector<int> cutset;                        // sorted
    int center = -1;                                // star
    std::array<int, 2> anchor{-1, -1};              // double_star x,y / proper_two a,b
    std::vector<int> side_x, side_y;                // proper_two split
    std::vector<std::vector<int>> side_partition;   // components of g minus cutset
};

// True iff no component of g minus `cut` meets both sides.
inline bool verify_separation(const Graph& g, Mask cut, Mask a_side, Mask b_side) {
    if ((cut & a_side) || (cut & b_side) || (a_side & b_side))
        throw PreconditionError("verify_separation", "cut and sides must be pairwise disjoint");
    for (Mask comp : components(g, g.vertices() & ~cut))
        if ((comp & a_side) && (comp & b_side)) return false;
    return true;
}

inline bool is_cutset(const Graph& g, Mask cut) {
    return components(g, g.vertices() & ~cut).size() >= 2;
}

namespace detail {

inline std::vector<std::vector<int>> side_partition_of(const Graph& g, Mask cut) {
    std::vector<std::vector<int>> out;
    for (Mask c : components(g, g.vertices() & ~cut)) out.push_back(to_vertices(c));
    return out;
}

// Subsets of `pool` ordered by (size, lexicographic), passed as masks.
inline bool first_subset_where(const std::vector<int>& pool, int max_size,
                               const std::function<bool(Mask)>& accept, Mask base) {
    int d = (int)pool.size();
    std::vector<int> idx;
    std::function<bool(int, int, Mask)> rec = [&](int k, int from, Mask acc) -> bool {
        if (k == 0) return accept(acc);
        for (int i = from; i <= d - k; ++i)
            if (rec(k - 1, i + 1, acc | bit(pool[i]))) return true;
        return false;
    };
    for (int k = 0; k <= std::min(d, max_size); ++k)
        if (rec(k, 0, base)) return true;
    return false;
}

}  // namespace detail

// Smallest clique cutset of size <= kmax, lexicographically least among the
// smallest.  Degenerate inputs (n <= 2) have none by convention.
inline std::optional<CutsetWitness> find_clique_cutset(const Graph& g, int kmax) {
    if (g.vertex_count() <= 2) return std::nullopt;
    if (!is_connected(g)) throw PreconditionError("find_clique_cutset", "graph must be connected");
    std::optional<CutsetWitness> found;
    std::vector<int> members;
    std::function<bool(int, int, Mask)> rec = [&](int size, int from, Mask clique) -> bool {
        if (size == 0) {
            if (!is_cutset(g, clique)) return false;
            CutsetWitness w;
            w.kind = CutsetWitness::Kind::clique;
            w.cutset = to_vertices(clique);
            w.side_partition = detail::side_partition_of(g, clique);
            found = std::move(w);
            return true;
        }
        for (int v = from; v < g.vertex_count(); ++v) {
            if ((g.neighbors(v) & clique) != clique) continue;  // must extend the clique
            if (rec(size - 1, v + 1, clique | bit(v))) return true;
        }
        return false;
    };
    for (int k = 1; k <= kmax && !found; ++k) rec(k, 0, 0);
    return found;
}

namespace detail {

// Does some cutset C with must_keep <= C <= closed separate two vertices
// outside it?  Exact: if any subset works, the maximal candidate
// closed \ {u, w} already separates the same pair.
inline std::optional<Mask> maximal_separating_candidate(const Graph& g, Mask closed,
                                                        Mask must_keep) {
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (must_keep & bit(u)) continue;
        for (int w = u + 1; w < g.vertex_count(); ++w) {
            if (must_keep & bit(w)) continue;
            Mask cut = closed & ~bit(u) & ~bit(w);
            Mask left = g.vertices() & ~cut;
            if (!(component_of(g, u, left) & bit(w))) return cut;
        }
    }
    return std::nullopt;
}

// Shrink a cutset to inclusionwise minimality, dropping high ids first so
// the survivors are lexicographically small.  `keep` is never dropped.
inline Mask shrink_cutset(const Graph& g, Mask cut, Mask keep) {
    auto vs = to_vertices(cut & ~keep);
    for (auto it = vs.rbegin(); it != vs.rend(); ++it)
        if (is_cutset(g, cut & ~bit(*it))) cut &= ~bit(*it);
    return cut;
}

// Past this pool size the (size, lex) subset sweep is replaced by the
// separating-pair construction plus a greedy shrink; only very high degree
// corpus inputs ever take that path.
constexpr int kExactCutsetPoolLimit = 20;

}  // namespace detail

// Star cutsets: {c} plus a neighbor subset.  Centers ascend; per center the
// candidates go by (size, lex), so the winner is an inclusionwise-minimal
// star cutset for the least feasible center.
inline std::optional<CutsetWitness> find_star_cutset(const Graph& g) {
    if (g.vertex_count() <= 2) return std::nullopt;
    if (!is_connected(g)) throw PreconditionError("find_star_cutset", "graph must be connected");
    for (int c = 0; c < g.vertex_count(); ++c) {
        auto make = [&](Mask cut) {
            CutsetWitness w;
            w.kind = CutsetWitness::Kind::star;
            w.center = c;
            w.cutset = to_vertices(cut);
            w.side_partition = detail::side_partition_of(g, cut);
            return w;
        };
        if (g.degree(c) > detail::kExactCutsetPoolLimit) {
            auto cand = detail::maximal_separating_candidate(g, g.closed_neighbors(c), bit(c));
            if (cand) return make(detail::shrink_cutset(g, *cand, bit(c)));
            continue;
        }
        auto pool = to_vertices(g.neighbors(c));
        std::optional<CutsetWitness> found;
        detail::first_subset_where(
            pool, (int)pool.size(),
            [&](Mask cut) {
                if (!is_cutset(g, cut)) return false;
                found = make(cut);
                return true;
            },
            bit(c));
        if (found) return found;
    }
    return std::nullopt;
}

// Double star cutsets: an edge xy plus a subset of N(x) u N(y).
inline std::optional<CutsetWitness> find_double_star_cutset(const Graph& g) {
    if (g.vertex_count() <= 2) return std::nullopt;
    if (!is_connected(g)) throw PreconditionError("find_double_star_cutset", "graph must be connected");
    for (auto [x, y] : g.edges()) {
        Mask anchors = bit(x) | bit(y);
        Mask pool_mask = (g.neighbors(x) | g.neighbors(y)) & ~anchors;
        auto make = [&, x = x, y = y](Mask cut) {
            CutsetWitness w;
            w.kind = CutsetWitness::Kind::double_star;
            w.anchor = {x, y};
            w.cutset = to_vertices(cut);
            w.side_partition = detail::side_partition_of(g, cut);
            return w;
        };
        if (std::popcount(pool_mask) > detail::kExactCutsetPoolLimit) {
            auto cand = detail::maximal_separating_candidate(g, pool_mask | anchors, anchors);
            if (cand) return make(detail::shrink_cutset(g, *cand, anchors));
            continue;
        }
        auto pool = to_vertices(pool_mask);
        std::optional<CutsetWitness> found;
        detail::first_subset_where(
            pool, (int)pool.size(),
            [&](Mask cut) {
                if (!is_cutset(g, cut)) return false;
                found = make(cut);
                return true;
            },
            anchors);
        if (found) return found;
    }
    return std::nullopt;
}

// Proper 2-cutset: non-adjacent a, b with a split (X, Y, a, b) such that no
// edge joins X and Y, both sides carry an ab-path, and neither side induces a
// chordless path.  Component groupings are tried in ascending mask order.
inline std::optional<CutsetWitness> find_proper_two_cutset(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 3) return std::nullopt;
    if (!is_connected(g)) throw PreconditionError("find_proper_two_cutset", "graph must be connected");
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (g.adjacent(a, b)) continue;
            Mask ab = bit(a) | bit(b);
            auto comps = components(g, g.vertices() & ~ab);
            int k = (int)comps.size();
            if (k < 2) continue;
            if (k > detail::kExactCutsetPoolLimit)
                throw Error("proper 2-cutset search: too many components to group at pair (" +
                            std::to_string(a) + ", " + std::to_string(b) + ")");
            std::vector<bool> touches_both(k);
            for (int i = 0; i < k; ++i) {
                bool ta = false, tb = false;
                for (int v : Bits{comps[i]}) {
                    ta = ta || g.adjacent(v, a);
                    tb = tb || g.adjacent(v, b);
                }
                touches_both[i] = ta && tb;
            }
            auto side_is_chordless_path = [&](Mask side) {
                return is_path_graph(induced(g, side | ab).graph);
            };
            for (unsigned m = 1; m + 1 < (1u << k); ++m) {
                Mask xs = 0, ys = 0;
                bool x_path = false, y_path = false;
                for (int i = 0; i < k; ++i) {
                    if ((m >> i) & 1) {
                        xs |= comps[i];
                        x_path = x_path || touches_both[i];
                    } else {
                        ys |= comps[i];
                        y_path = y_path || touches_both[i];
                    }
                }
                if (!x_path || !y_path) continue;
                if (side_is_chordless_path(xs) || side_is_chordless_path(ys)) continue;
                CutsetWitness w;
                w.kind = CutsetWitness::Kind::proper_two;
                w.anchor = {a, b};
                w.cutset = {a, b};
                w.side_x = to_vertices(xs);
                w.side_y = to_vertices(ys);
                w.side_partition = detail::side_partition_of(g, ab);
                return w;
            }
        }
    return std::nullopt;
}

}  // namespace isk4
