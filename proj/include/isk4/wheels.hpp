#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "isk4/cutsets.hpp"
#include "isk4/graph.hpp"
#include "isk4/holes.hpp"
#include "isk4/recognition.hpp"

namespace isk4 {

// A hole plus a center with >= 3 neighbors (spokes) on it.
struct Wheel {
    Hole hole;
    int center = -1;
    std::vector<int> spokes;  // in hole traversal order, from hole.cycle[0]

    int spoke_count() const { return (int)spokes.size(); }
    Mask hole_mask() const { return hole.mask(); }
};

inline std::optional<Wheel> make_wheel(const Graph& g, const Hole& h, int center) {
    if (h.mask() & bit(center)) return std::nullopt;
    Wheel w;
    w.hole = h;
    w.center = center;
    for (int v : h.cycle)
        if (g.adjacent(center, v)) w.spokes.push_back(v);
    if (w.spoke_count() < 3) return std::nullopt;
    return w;
}

// Every (hole, center) pair, center-first: for each x of degree >= 3,
// the holes of g minus x that see at least three neighbors of x.
inline std::vector<Wheel> enumerate_wheels(const Graph& g) {
    std::vector<Wheel> out;
    for (int x = 0; x < g.vertex_count(); ++x) {
        if (g.degree(x) < 3) continue;
        auto sub = induced(g, g.vertices() & ~bit(x));
        for_each_hole(sub.graph, 0, [&](const Hole& h) {
            std::vector<int> cyc;
            for (int v : h.cycle) cyc.push_back(sub.vertex_map[v]);
            // vertex_map is monotone, so the mapped cycle stays canonical
            if (auto w = make_wheel(g, Hole{cyc, &g}, x)) out.push_back(*w);
        });
    }
    std::sort(out.begin(), out.end(), [](const Wheel& a, const Wheel& b) {
        if (a.hole.cycle.size() != b.hole.cycle.size())
            return a.hole.cycle.size() < b.hole.cycle.size();
        if (a.hole.cycle != b.hole.cycle) return a.hole.cycle < b.hole.cycle;
        return a.center < b.center;
    });
    return out;
}

// Sector i: the hole subpath from spoke i to spoke i+1 (indices mod n),
// following the hole's stored orientation.
inline std::vector<int> sector_path(const Wheel& w, int i) {
    const auto& cyc = w.hole.cycle;
    int len = (int)cyc.size();
    int n = w.spoke_count();
    int from = (int)(std::find(cyc.begin(), cyc.end(), w.spokes[i % n]) - cyc.begin());
    int to = (int)(std::find(cyc.begin(), cyc.end(), w.spokes[(i + 1) % n]) - cyc.begin());
    std::vector<int> path;
    for (int p = from;; p = (p + 1) % len) {
        path.push_back(cyc[p]);
        if (p == to) break;
    }
    return path;
}

inline Mask sector_mask(const Wheel& w, int i) { return to_mask(sector_path(w, i)); }

inline Mask sector_interior(const Wheel& w, int i) {
    int n = w.spoke_count();
    return sector_mask(w, i) & ~bit(w.spokes[i % n]) & ~bit(w.spokes[(i + 1) % n]);
}

struct WheelTypeResult {
    enum class Type { type0, type1, type2, improper };
    Type type = Type::improper;
    int sector = -1;  // for type2
};

// Type of u w.r.t. (H, x): 0/1 hole-neighbors, or 2 inside one sector.
inline WheelTypeResult classify_wrt_wheel(const Graph& g, const Wheel& w, int u) {
    if ((w.hole_mask() & bit(u)) || (g.closed_neighbors(w.center) & bit(u)))
        throw PreconditionError("classify_wrt_wheel", "u must avoid the hole and N[center]");
    Mask on_hole = g.neighbors(u) & w.hole_mask();
    int cnt = std::popcount(on_hole);
    if (cnt == 0) return {WheelTypeResult::Type::type0, -1};
    if (cnt == 1) return {WheelTypeResult::Type::type1, -1};
    if (cnt == 2)
        for (int i = 0; i < w.spoke_count(); ++i)
            if ((on_hole & sector_mask(w, i)) == on_hole)
                return {WheelTypeResult::Type::type2, i};
    return {WheelTypeResult::Type::improper, -1};
}

inline bool is_proper_wheel(const Graph& g, const Wheel& w) {
    Mask eligible = g.vertices() & ~w.hole_mask() & ~g.closed_neighbors(w.center);
    for (int u : Bits{eligible})
        if (classify_wrt_wheel(g, w, u).type == WheelTypeResult::Type::improper) return false;
    return true;
}

// Appendix of a hole: a chordless path outside H whose interior never touches
// H, attached at two vertices; either a single vertex with two non-adjacent
// hole neighbors, or a longer path with one hole neighbor per endpoint.
struct Appendix {
    enum class Kind { single_vertex, proper_path };
    Kind kind = Kind::single_vertex;
    std::vector<int> path;
    std::array<int, 2> attachment{-1, -1};  // u1 next to path.front(), u2 next to path.back()
};

inline std::vector<Appendix> hole_appendices(const Graph& g, const Hole& h) {
    Mask hm = h.mask();
    std::vector<Appendix> out;
    for (int v : Bits{g.vertices() & ~hm}) {
        Mask on = g.neighbors(v) & hm;
        if (std::popcount(on) != 2) continue;
        int u1 = std::countr_zero(on);
        int u2 = 63 - std::countl_zero(on);
        if (g.adjacent(u1, u2)) continue;
        out.push_back({Appendix::Kind::single_vertex, {v}, {u1, u2}});
    }
    // proper paths: endpoints carry exactly one hole neighbor, interiors none
    std::vector<int> path;
    std::function<void(Mask)> extend = [&](Mask pm) {
        int last = path.back();
        for (int v : Bits{g.neighbors(last) & ~hm & ~pm}) {
            if ((g.neighbors(v) & pm) != bit(last)) continue;  // chordless
            Mask on = g.neighbors(v) & hm;
            int cnt = std::popcount(on);
            if (cnt == 0) {
                path.push_back(v);
                extend(pm | bit(v));
                path.pop_back();
            } else if (cnt == 1) {
                int u1 = std::countr_zero(g.neighbors(path.front()) & hm);
                int u2 = std::countr_zero(on);
                if (u1 != u2 && path.front() < v) {
                    path.push_back(v);
                    out.push_back({Appendix::Kind::proper_path, path, {u1, u2}});
                    path.pop_back();
                }
            }
        }
    };
    for (int p1 : Bits{g.vertices() & ~hm}) {
        if (std::popcount(g.neighbors(p1) & hm) != 1) continue;
        path.assign(1, p1);
        extend(bit(p1));
    }
    std::sort(out.begin(), out.end(), [](const Appendix& a, const Appendix& b) {
        if (a.attachment != b.attachment) return a.attachment < b.attachment;
        return a.path < b.path;
    });
    return out;
}

// The two u1u2-subpaths of the hole, as vertex masks including u1 and u2.
inline std::array<Mask, 2> hole_sectors_wrt(const Hole& h, const Appendix& p) {
    const auto& cyc = h.cycle;
    int len = (int)cyc.size();
    int i1 = (int)(std::find(cyc.begin(), cyc.end(), p.attachment[0]) - cyc.begin());
    int i2 = (int)(std::find(cyc.begin(), cyc.end(), p.attachment[1]) - cyc.begin());
    Mask a = 0;
    for (int i = i1;; i = (i + 1) % len) {
        a |= bit(cyc[i]);
        if (i == i2) break;
    }
    Mask b = 0;
    for (int i = i2;; i = (i + 1) % len) {
        b |= bit(cyc[i]);
        if (i == i1) break;
    }
    return {a, b};
}

// Appendices P, Q of the same hole are crossing when their attachments are
// disjoint and one sector of H w.r.t. P holds v1 while the other holds v2.
inline bool crossing(const Hole& h, const Appendix& p, const Appendix& q) {
    Mask pa = to_mask({p.attachment[0], p.attachment[1]});
    Mask qa = to_mask({q.attachment[0], q.attachment[1]});
    if (pa & qa) return false;
    auto sect = hole_sectors_wrt(h, p);
    Mask v1 = bit(q.attachment[0]), v2 = bit(q.attachment[1]);
    return ((sect[0] & v1) && (sect[1] & v2)) || ((sect[0] & v2) && (sect[1] & v1));
}

// Wheel appendix: a hole appendix whose two sectors w.r.t. it each properly
// contain a wheel sector, with the center seeing at most one path vertex.
inline std::vector<Appendix> wheel_appendices(const Graph& g, const Wheel& w) {
    std::vector<Appendix> out;
    for (const Appendix& p : hole_appendices(g, w.hole)) {
        if (std::popcount(g.neighbors(w.center) & to_mask(p.path)) > 1) continue;
        auto sect = hole_sectors_wrt(w.hole, p);
        bool ok = true;
        for (Mask s : sect) {
            bool contains = false;
            for (int i = 0; i < w.spoke_count() && !contains; ++i) {
                Mask sm = sector_mask(w, i);
                if ((sm & s) == sm && sm != s) contains = true;
            }
            if (!contains) ok = false;
        }
        if (ok) out.push_back(p);
    }
    return out;
}

// A short connection between consecutive sectors S_i, S_{i+1}: a chordless
// path of >= 2 vertices avoiding H and N[x], touching S_i \ {x_{i+1}} at one
// end, S_{i+1} \ {x_{i+1}} at the other, with x_{i+1} the only hole vertex
// allowed to see its interior.
struct ShortConnection {
    std::vector<int> path;
    int sector = -1;  // between sectors sector and sector+1
    std::array<int, 2> contacts{-1, -1};
};

inline std::optional<ShortConnection> find_short_connection(const Graph& g, const Wheel& w) {
    Mask hm = w.hole_mask();
    Mask pool = g.vertices() & ~hm & ~g.closed_neighbors(w.center);
    int pool_size = std::popcount(pool);
    int n = w.spoke_count();
    for (int k = 2; k <= pool_size; ++k) {
        for (int i = 0; i < n; ++i) {
            int mid = w.spokes[(i + 1) % n];
            Mask h_but_mid = hm & ~bit(mid);
            Mask s1 = sector_mask(w, i) & ~bit(mid);
            Mask s2 = sector_mask(w, i + 1) & ~bit(mid);
            std::vector<int> path;
            std::optional<ShortConnection> hit;
            std::function<bool(Mask)> extend = [&](Mask pm) -> bool {
                int last = path.back();
                if ((int)path.size() == k) {
                    Mask on = g.neighbors(last) & h_but_mid;
                    if (std::popcount(on) != 1) return false;
                    int u2 = std::countr_zero(on);
                    if (!(s2 & bit(u2))) return false;
                    int u1 = std::countr_zero(g.neighbors(path.front()) & h_but_mid);
                    hit = ShortConnection{path, i, {u1, u2}};
                    return true;
                }
                for (int v : Bits{g.neighbors(last) & pool & ~pm}) {
                    if ((g.neighbors(v) & pm) != bit(last)) continue;  // chordless
                    if ((int)path.size() + 1 < k && (g.neighbors(v) & h_but_mid)) continue;
                    path.push_back(v);
                    if (extend(pm | bit(v))) return true;
                    path.pop_back();
                }
                return false;
            };
            for (int p1 : Bits{pool}) {
                Mask on = g.neighbors(p1) & h_but_mid;
                if (std::popcount(on) != 1) continue;
                int u1 = std::countr_zero(on);
                if (!(s1 & bit(u1))) continue;
                path.assign(1, p1);
                if (extend(bit(p1))) return hit;
            }
        }
    }
    return std::nullopt;
}

// The sector cutsets of Lemma-style wheel decompositions: for each i,
// (N[x] \ H) u {x_i, x_{i+1}} must separate the sector interior from the
// rest of the hole.
struct WheelDecomposition {
    Wheel wheel;
    struct SectorCut {
        std::vector<int> cutset;
        std::vector<std::vector<int>> side_partition;
    };
    std::vector<SectorCut> sector_cutsets;
};

inline std::optional<WheelDecomposition> wheel_decomposition(const Graph& g, const Wheel& w) {
    WheelDecomposition d;
    d.wheel = w;
    Mask hm = w.hole_mask();
    int n = w.spoke_count();
    for (int i = 0; i < n; ++i) {
        Mask cut = (g.closed_neighbors(w.center) & ~hm) | bit(w.spokes[i]) |
                   bit(w.spokes[(i + 1) % n]);
        Mask inside = sector_interior(w, i) & ~cut;
        Mask outside = (hm & ~sector_mask(w, i)) & ~cut;
        if (!verify_separation(g, cut, inside, outside)) return std::nullopt;
        WheelDecomposition::SectorCut sc;
        sc.cutset = to_vertices(cut);
        sc.side_partition = detail::side_partition_of(g, cut);
        d.sector_cutsets.push_back(std::move(sc));
    }
    return d;
}

// The decomposition outcome for {triangle, ISK4}-free graphs, tried in
// theorem order: series-parallel, complete bipartite, clique cutset of size
// at most two (the empty clique when disconnected), wheel decomposition on a
// proper wheel with fewest spokes.
struct DecompositionOutcome {
    enum class Tag { series_parallel, complete_bipartite, clique_cutset, wheel_decomposition };
    Tag tag = Tag::series_parallel;
    std::vector<std::vector<int>> bipartition;
    std::optional<CutsetWitness> cutset;
    std::optional<WheelDecomposition> wheel;
};

inline DecompositionOutcome decompose(const Graph& g, long long budget = kDefaultIskBudget) {
    if (auto t = triangle_witness(g))
        throw OutOfClassError("triangle-free", {(*t)[0], (*t)[1], (*t)[2]});
    if (auto w = contains_isk4(g, budget))
        throw OutOfClassError("isk4-free", to_vertices(w->vertex_set));

    DecompositionOutcome out;
    if (is_series_parallel(g)) {
        out.tag = DecompositionOutcome::Tag::series_parallel;
        return out;
    }
    auto mp = multipartite_class(g);
    if (mp.kind == MultipartiteResult::Kind::complete_bipartite) {
        out.tag = DecompositionOutcome::Tag::complete_bipartite;
        out.bipartition = mp.parts;
        return out;
    }
    if (!is_connected(g)) {
        CutsetWitness w;
        w.kind = CutsetWitness::Kind::clique;  // the empty clique disconnects
        w.side_partition = detail::side_partition_of(g, 0);
        out.tag = DecompositionOutcome::Tag::clique_cutset;
        out.cutset = std::move(w);
        return out;
    }
    if (auto cc = find_clique_cutset(g, 2)) {
        out.tag = DecompositionOutcome::Tag::clique_cutset;
        out.cutset = std::move(cc);
        return out;
    }
    auto wheels = enumerate_wheels(g);
    std::vector<Wheel> proper;
    for (const Wheel& w : wheels)
        if (is_proper_wheel(g, w)) proper.push_back(w);
    std::sort(proper.begin(), proper.end(), [](const Wheel& a, const Wheel& b) {
        if (a.spoke_count() != b.spoke_count()) return a.spoke_count() < b.spoke_count();
        if (a.hole.cycle.size() != b.hole.cycle.size())
            return a.hole.cycle.size() < b.hole.cycle.size();
        if (a.hole.cycle != b.hole.cycle) return a.hole.cycle < b.hole.cycle;
        return a.center < b.center;
    });
    for (const Wheel& w : proper) {
        if (w.spoke_count() != proper.front().spoke_count()) break;
        if (auto d = wheel_decomposition(g, w)) {
            out.tag = DecompositionOutcome::Tag::wheel_decomposition;
            out.wheel = std::move(d);
            return out;
        }
    }
    throw TheoremViolationError(
        "no decomposition outcome applies to a {triangle, ISK4}-free graph");
}

// Structural wheel validity against its host graph.
inline bool verify_wheel(const Graph& g, const Wheel& w) {
    if (!is_hole_of(g, w.hole.cycle)) return false;
    if (w.center < 0 || w.center >= g.vertex_count() || (w.hole_mask() & bit(w.center)))
        return false;
    std::vector<int> spokes;
    for (int v : w.hole.cycle)
        if (g.adjacent(w.center, v)) spokes.push_back(v);
    return spokes.size() >= 3 && spokes == w.spokes;
}

// Re-checks a decomposition outcome from scratch.
inline bool verify_decomposition(const Graph& g, const DecompositionOutcome& out) {
    switch (out.tag) {
        case DecompositionOutcome::Tag::series_parallel:
            return is_series_parallel(g);
        case DecompositionOutcome::Tag::complete_bipartite: {
            if (out.bipartition.size() != 2) return false;
            Mask a = to_mask(out.bipartition[0]), b = to_mask(out.bipartition[1]);
            if (!a || !b || (a & b) || ((a | b) != g.vertices())) return false;
            for (int u : Bits{a})
                if ((g.neighbors(u) & b) != b || (g.neighbors(u) & a)) return false;
            return true;
        }
        case DecompositionOutcome::Tag::clique_cutset: {
            if (!out.cutset || out.cutset->cutset.size() > 2) return false;
            Mask cm = to_mask(out.cutset->cutset);
            for (int u : out.cutset->cutset)
                for (int v : out.cutset->cutset)
                    if (u < v && !g.adjacent(u, v)) return false;
            return components(g, g.vertices() & ~cm).size() >= 2;
        }
        case DecompositionOutcome::Tag::wheel_decomposition: {
            if (!out.wheel) return false;
            const Wheel& w = out.wheel->wheel;
            if (!verify_wheel(g, w)) return false;
            int n = w.spoke_count();
            if ((int)out.wheel->sector_cutsets.size() != n) return false;
            Mask hm = w.hole_mask();
            for (int i = 0; i < n; ++i) {
                Mask cut = (g.closed_neighbors(w.center) & ~hm) | bit(w.spokes[i]) |
                           bit(w.spokes[(i + 1) % n]);
                if (to_mask(out.wheel->sector_cutsets[i].cutset) != cut) return false;
                if (!verify_separation(g, cut, sector_interior(w, i) & ~cut,
                                       (hm & ~sector_mask(w, i)) & ~cut))
                    return false;
            }
            return true;
        }
    }
    return false;
}

}  // namespace isk4
