#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "isk4/enumerate.hpp"
#include "isk4/graph.hpp"

namespace isk4 {

constexpr long long kDefaultIskBudget = 100'000'000;

// An induced subdivision of K4: four branch vertices joined by six internally
// disjoint paths, with no edges inside the vertex set besides path edges.
struct IskWitness {
    std::array<int, 4> branch_vertices;
    std::vector<std::vector<int>> paths;  // one per K4 edge, endpoints included
    Mask vertex_set = 0;
};

inline bool verify_isk4_witness(const Graph& g, const IskWitness& w) {
    if (w.paths.size() != 6) return false;
    auto sub = induced(g, w.vertex_set);
    const Graph& h = sub.graph;
    std::array<int, kMaxVertices> inv{};
    for (size_t i = 0; i < sub.vertex_map.size(); ++i) inv[sub.vertex_map[i]] = (int)i;
    int edges_expected = 0;
    for (const auto& p : w.paths) {
        if (p.size() < 2) return false;
        for (size_t i = 0; i + 1 < p.size(); ++i)
            if (!g.adjacent(p[i], p[i + 1])) return false;
        edges_expected += (int)p.size() - 1;
    }
    if (h.edge_count() != edges_expected) return false;  // no chords anywhere
    for (int b : w.branch_vertices)
        if (h.degree(inv[b]) != 3) return false;
    for (int v = 0; v < h.vertex_count(); ++v) {
        int orig = sub.vertex_map[v];
        bool is_branch = std::count(w.branch_vertices.begin(), w.branch_vertices.end(), orig);
        if (!is_branch && h.degree(v) != 2) return false;
    }
    return is_connected(h);
}

namespace detail {

struct IskSearch {
    const Graph& g;
    long long budget;
    long long nodes_left;
    std::array<int, 4> branch{};
    Mask witness = 0;
    std::array<std::vector<int>, 6> paths;
    static constexpr std::array<std::pair<int, int>, 6> kPairs{
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

    IskSearch(const Graph& gr, long long b) : g(gr), budget(b), nodes_left(b) {}

    void spend() {
        if (--nodes_left < 0) throw BudgetExceededError(budget);
    }

    bool pair_done(int pi) {
        if (pi == 6) return true;
        auto [ia, ib] = kPairs[pi];
        int a = branch[ia], b = branch[ib];
        if (g.adjacent(a, b)) {
            // an edge between branch vertices forces the edge-path
            paths[pi] = {a, b};
            return pair_done(pi + 1);
        }
        paths[pi] = {a};
        if (grow(pi, a, b)) return true;
        paths[pi].clear();
        return false;
    }

    // Extend the current path; a new vertex may touch the partial witness
    // only at its predecessor, plus the target when it closes the path.
    bool grow(int pi, int prev, int target) {
        for (int v : Bits{g.neighbors(prev) & ~witness}) {
            spend();
            Mask back = g.neighbors(v) & witness;
            if (back == (bit(prev) | bit(target))) {
                paths[pi].push_back(v);
                paths[pi].push_back(target);
                witness |= bit(v);
                if (pair_done(pi + 1)) return true;
                witness &= ~bit(v);
                paths[pi].pop_back();
                paths[pi].pop_back();
            } else if (back == bit(prev)) {
                paths[pi].push_back(v);
                witness |= bit(v);
                if (grow(pi, v, target)) return true;
                witness &= ~bit(v);
                paths[pi].pop_back();
            }
        }
        return false;
    }
};

}  // namespace detail

// Exact search for an induced subdivision of K4.  Exceeding the node budget
// raises BudgetExceededError; it is never reported as "absent".
inline std::optional<IskWitness> contains_isk4(const Graph& g,
                                               long long budget = kDefaultIskBudget) {
    int n = g.vertex_count();
    if (n < 4 || g.edge_count() < 6) return std::nullopt;
    std::vector<int> hi;  // candidate branch vertices
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 3) hi.push_back(v);
    if ((int)hi.size() < 4) return std::nullopt;

    detail::IskSearch s(g, budget);
    int k = (int)hi.size();
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            for (int c = b + 1; c < k; ++c)
                for (int d = c + 1; d < k; ++d) {
                    s.branch = {hi[a], hi[b], hi[c], hi[d]};
                    s.witness = bit(hi[a]) | bit(hi[b]) | bit(hi[c]) | bit(hi[d]);
                    if (s.pair_done(0)) {
                        IskWitness w;
                        w.branch_vertices = s.branch;
                        w.paths.assign(s.paths.begin(), s.paths.end());
                        w.vertex_set = s.witness;
                        return w;
                    }
                }
    return std::nullopt;
}

inline bool is_isk4_free(const Graph& g, long long budget = kDefaultIskBudget) {
    return !contains_isk4(g, budget).has_value();
}

// Six vertices inducing K_{3,3}, or absent.  First hit in lexicographic
// order of (side A triple, side B triple).
inline std::optional<std::vector<int>> contains_k33(const Graph& g) {
    int n = g.vertex_count();
    for (int a0 = 0; a0 < n; ++a0)
        for (int a1 = a0 + 1; a1 < n; ++a1) {
            if (g.adjacent(a0, a1)) continue;
            for (int a2 = a1 + 1; a2 < n; ++a2) {
                if (g.adjacent(a0, a2) || g.adjacent(a1, a2)) continue;
                Mask common = g.neighbors(a0) & g.neighbors(a1) & g.neighbors(a2);
                if (std::popcount(common) < 3) continue;
                auto cs = to_vertices(common);
                for (size_t i = 0; i < cs.size(); ++i)
                    for (size_t j = i + 1; j < cs.size(); ++j) {
                        if (g.adjacent(cs[i], cs[j])) continue;
                        for (size_t l = j + 1; l < cs.size(); ++l) {
                            if (g.adjacent(cs[i], cs[l]) || g.adjacent(cs[j], cs[l])) continue;
                            std::vector<int> out{a0, a1, a2, cs[i], cs[j], cs[l]};
                            std::sort(out.begin(), out.end());
                            return out;
                        }
                    }
            }
        }
    return std::nullopt;
}

namespace detail {

struct PrismSearch {
    const Graph& g;
    std::array<int, 3> from{}, to{};  // paired a_i -> to[i]
    Mask witness = 0;
    std::array<std::vector<int>, 3> paths;

    explicit PrismSearch(const Graph& gr) : g(gr) {}

    bool path_done(int pi) {
        if (pi == 3) return true;
        int a = from[pi], b = to[pi];
        if (g.adjacent(a, b)) {
            paths[pi] = {a, b};
            return path_done(pi + 1);
        }
        paths[pi] = {a};
        if (grow(pi, a, b)) return true;
        paths[pi].clear();
        return false;
    }

    bool grow(int pi, int prev, int target) {
        for (int v : Bits{g.neighbors(prev) & ~witness}) {
            Mask back = g.neighbors(v) & witness;
            if (back == (bit(prev) | bit(target))) {
                witness |= bit(v);
                paths[pi].push_back(v);
                paths[pi].push_back(target);
                if (path_done(pi + 1)) return true;
                witness &= ~bit(v);
                paths[pi].pop_back();
                paths[pi].pop_back();
            } else if (back == bit(prev)) {
                witness |= bit(v);
                paths[pi].push_back(v);
                if (grow(pi, v, target)) return true;
                witness &= ~bit(v);
                paths[pi].pop_back();
            }
        }
        return false;
    }
};

}  // namespace detail

// Vertex set inducing a prism (two disjoint triangles joined by three
// internally disjoint paths), or absent.
inline std::optional<std::vector<int>> contains_prism(const Graph& g) {
    int n = g.vertex_count();
    if (n < 6) return std::nullopt;
    std::vector<std::array<int, 3>> tris;
    for (int u = 0; u < n; ++u)
        for (int v : Bits{g.neighbors(u) & ~full_mask(u + 1)})
            for (int w : Bits{g.neighbors(u) & g.neighbors(v) & ~full_mask(v + 1)})
                tris.push_back({u, v, w});
    for (size_t t1 = 0; t1 < tris.size(); ++t1)
        for (size_t t2 = 0; t2 < tris.size(); ++t2) {
            if (t1 == t2) continue;
            Mask m1 = to_mask({tris[t1][0], tris[t1][1], tris[t1][2]});
            Mask m2 = to_mask({tris[t2][0], tris[t2][1], tris[t2][2]});
            if (m1 & m2) continue;
            // pair a_i with tris[t2][i]; cross edges other than the pairing
            // would be chords of the prism
            bool ok = true;
            for (int i = 0; i < 3 && ok; ++i)
                for (int j = 0; j < 3 && ok; ++j)
                    if (i != j && g.adjacent(tris[t1][i], tris[t2][j])) ok = false;
            if (!ok) continue;
            detail::PrismSearch s(g);
            s.from = tris[t1];
            s.to = tris[t2];
            s.witness = m1 | m2;
            if (s.path_done(0)) {
                std::vector<int> out = to_vertices(s.witness);
                return out;
            }
        }
    return std::nullopt;
}

// True iff no subgraph of g is a subdivision of K4.  Works by reduction on a
// simple shadow: delete degree <= 1 vertices, suppress degree-2 vertices
// (merging any parallel edge on the spot); series-parallel iff everything
// reduces away.
inline bool is_series_parallel(const Graph& g) {
    int n = g.vertex_count();
    std::vector<Mask> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
    Mask alive = g.vertices();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : Bits{alive}) {
            int d = std::popcount(adj[v]);
            if (d <= 1) {
                alive &= ~bit(v);
                for (int u : Bits{adj[v]}) adj[u] &= ~bit(v);
                adj[v] = 0;
                changed = true;
            } else if (d == 2) {
                int a = std::countr_zero(adj[v]);
                int b = 63 - std::countl_zero(adj[v]);
                alive &= ~bit(v);
                adj[a] &= ~bit(v);
                adj[b] &= ~bit(v);
                adj[v] = 0;
                if (!((adj[a] >> b) & 1)) {  // merge parallel edges silently
                    adj[a] |= bit(b);
                    adj[b] |= bit(a);
                }
                changed = true;
            }
        }
    }
    return alive == 0;
}

struct MultipartiteResult {
    enum class Kind { neither, complete_bipartite, complete_tripartite };
    Kind kind = Kind::neither;
    std::vector<std::vector<int>> parts;  // ordered by least vertex
};

// Complete multipartite <=> the complement is a disjoint union of cliques;
// the parts are then the complement's components.  Only 2 or 3 non-empty
// parts qualify here.
inline MultipartiteResult multipartite_class(const Graph& g) {
    MultipartiteResult r;
    if (g.vertex_count() == 0) return r;
    Graph co = g.complement();
    auto comps = components(co, co.vertices());
    for (Mask c : comps) {
        int sz = std::popcount(c);
        for (int v : Bits{c})
            if (std::popcount(co.neighbors(v) & c) != sz - 1) return r;  // not a clique
    }
    if (comps.size() == 2)
        r.kind = MultipartiteResult::Kind::complete_bipartite;
    else if (comps.size() == 3)
        r.kind = MultipartiteResult::Kind::complete_tripartite;
    else
        return r;
    for (Mask c : comps) r.parts.push_back(to_vertices(c));
    return r;
}

inline bool is_complete_bipartite(const Graph& g) {
    return multipartite_class(g).kind == MultipartiteResult::Kind::complete_bipartite;
}

struct ChordlessStatus {
    bool chordless = false;
    bool sparse = false;
};

// An edge uv is a chord of some cycle iff G minus the edge still joins u and
// v by two internally disjoint paths; by Menger that means no single vertex
// deletion separates them there.
inline ChordlessStatus chordless_status(const Graph& g) {
    ChordlessStatus st;
    st.chordless = true;
    for (auto [u, v] : g.edges()) {
        auto joined_avoiding = [&](Mask banned) {
            Mask allowed = g.vertices() & ~banned;
            Mask comp = bit(u), frontier = bit(u);
            while (frontier) {
                Mask next = 0;
                for (int x : Bits{frontier}) {
                    Mask nb = g.neighbors(x);
                    if (x == u) nb &= ~bit(v);
                    if (x == v) nb &= ~bit(u);
                    next |= nb & allowed & ~comp;
                }
                comp |= next;
                frontier = next;
            }
            return (comp & bit(v)) != 0;
        };
        if (!joined_avoiding(0)) continue;
        bool is_chord = true;
        for (int w = 0; w < g.vertex_count() && is_chord; ++w) {
            if (w == u || w == v) continue;
            if (!joined_avoiding(bit(w))) is_chord = false;
        }
        if (is_chord) {
            st.chordless = false;
            break;
        }
    }
    st.sparse = true;
    for (auto [u, v] : g.edges())
        if (g.degree(u) > 2 && g.degree(v) > 2) {
            st.sparse = false;
            break;
        }
    return st;
}

inline bool is_bipartite(const Graph& g) {
    std::array<int, kMaxVertices> color{};
    color.fill(-1);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : Bits{g.neighbors(v)}) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

struct ClassProfile {
    bool triangle_free = false;
    bool isk4_free = false;
    bool k33_free = false;
    std::optional<int> girth;
    bool series_parallel = false;
    bool complete_bipartite = false;
    bool complete_tripartite = false;
    bool chordless = false;
    bool sparse = false;
};

inline ClassProfile classify(const Graph& g, long long budget = kDefaultIskBudget) {
    ClassProfile p;
    p.triangle_free = is_triangle_free(g);
    p.isk4_free = is_isk4_free(g, budget);
    p.k33_free = !contains_k33(g).has_value();
    p.girth = girth(g);
    p.series_parallel = is_series_parallel(g);
    auto mp = multipartite_class(g);
    p.complete_bipartite = mp.kind == MultipartiteResult::Kind::complete_bipartite;
    p.complete_tripartite = mp.kind == MultipartiteResult::Kind::complete_tripartite;
    auto cs = chordless_status(g);
    p.chordless = cs.chordless;
    p.sparse = cs.sparse;
    return p;
}

// Named class filters for the enumerator and the CLI.
inline Filter standard_filter(const std::string& name) {
    auto mk = [&](bool prunes, std::function<bool(const Graph&)> f) {
        return Filter{name, prunes, std::move(f)};
    };
    if (name == "triangle-free") return mk(true, [](const Graph& g) { return is_triangle_free(g); });
    if (name == "girth5") return mk(true, [](const Graph& g) { return has_girth_at_least(g, 5); });
    if (name == "isk4-free") return mk(true, [](const Graph& g) { return is_isk4_free(g); });
    if (name == "k33-free")
        return mk(true, [](const Graph& g) { return !contains_k33(g).has_value(); });
    if (name == "chordless")
        return mk(true, [](const Graph& g) { return chordless_status(g).chordless; });
    if (name == "sparse") return mk(true, [](const Graph& g) { return chordless_status(g).sparse; });
    if (name == "series-parallel")
        return mk(true, [](const Graph& g) { return is_series_parallel(g); });
    if (name == "acyclic") return mk(true, [](const Graph& g) { return is_acyclic(g); });
    if (name == "bipartite") return mk(true, [](const Graph& g) { return is_bipartite(g); });
    if (name == "connected") return mk(true, [](const Graph& g) { return is_connected(g); });
    if (name == "two-connected")
        return mk(false, [](const Graph& g) { return is_two_connected(g); });
    throw Error("unknown filter: " + name);
}

}  // namespace isk4
