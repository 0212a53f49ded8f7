#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "isk4/errors.hpp"

namespace isk4 {

// Vertex sets are 64-bit masks; every graph here lives on dense ids 0..n-1
// with n <= 64 (graph6 input is capped at 62, the search harness at 12).
using Mask = std::uint64_t;

constexpr int kMaxVertices = 64;

inline Mask bit(int v) { return Mask{1} << v; }

inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Range over the set bits of a mask, ascending.
struct Bits {
    Mask mask;
    struct iterator {
        Mask rest;
        int operator*() const { return std::countr_zero(rest); }
        iterator& operator++() {
            rest &= rest - 1;
            return *this;
        }
        bool operator!=(const iterator& o) const { return rest != o.rest; }
    };
    iterator begin() const { return {mask}; }
    iterator end() const { return {0}; }
};

inline std::vector<int> to_vertices(Mask m) {
    std::vector<int> out;
    for (int v : Bits{m}) out.push_back(v);
    return out;
}

inline Mask to_mask(const std::vector<int>& vs) {
    Mask m = 0;
    for (int v : vs) m |= bit(v);
    return m;
}

// Immutable simple undirected graph.  All "mutations" build new graphs, so
// instances can be shared freely across harness workers.
class Graph {
  public:
    Graph() = default;

    Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n), adj_(n, 0) {
        if (n < 0 || n > kMaxVertices) throw Error("graph order out of range (0..64)");
        for (auto [u, v] : edge_list) add_edge_checked(u, v);
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    Mask vertices() const { return full_mask(n_); }

    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
    Mask neighbors(int v) const { return adj_[v]; }
    Mask closed_neighbors(int v) const { return adj_[v] | bit(v); }
    int degree(int v) const { return std::popcount(adj_[v]); }

    int min_degree() const {
        int d = n_ == 0 ? 0 : kMaxVertices + 1;
        for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
        return n_ == 0 ? 0 : d;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v : Bits{adj_[u] & ~full_mask(u + 1)}) out.emplace_back(u, v);
        return out;
    }

    std::vector<int> degree_sequence() const {  // ascending
        std::vector<int> d(n_);
        for (int v = 0; v < n_; ++v) d[v] = degree(v);
        std::sort(d.begin(), d.end());
        return d;
    }

    // New graph with one extra vertex (id n) adjacent to `nbrs`.
    Graph extended(Mask nbrs) const {
        Graph g;
        g.n_ = n_ + 1;
        if (g.n_ > kMaxVertices) throw Error("graph order out of range (0..64)");
        g.adj_ = adj_;
        g.adj_.push_back(nbrs & vertices());
        for (int v : Bits{g.adj_[n_]}) g.adj_[v] |= bit(n_);
        g.m_ = m_ + std::popcount(g.adj_[n_]);
        return g;
    }

    Graph with_edge(int u, int v) const {
        Graph g = *this;
        g.add_edge_checked(u, v);
        return g;
    }

    Graph complement() const {
        Graph g;
        g.n_ = n_;
        g.adj_.resize(n_);
        for (int v = 0; v < n_; ++v) g.adj_[v] = ~adj_[v] & vertices() & ~bit(v);
        g.m_ = n_ * (n_ - 1) / 2 - m_;
        return g;
    }

    Graph relabeled(const std::vector<int>& perm) const {  // perm[new] = old
        Graph g;
        g.n_ = n_;
        g.m_ = m_;
        g.adj_.assign(n_, 0);
        std::array<int, kMaxVertices> inv{};
        for (int i = 0; i < n_; ++i) inv[perm[i]] = i;
        for (int i = 0; i < n_; ++i)
            for (int w : Bits{adj_[perm[i]]}) g.adj_[i] |= bit(inv[w]);
        return g;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

  private:
    void add_edge_checked(int u, int v) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw Error("edge endpoint out of range");
        if (u == v) throw Error("self-loop");
        if (adjacent(u, v)) throw Error("duplicate edge");
        adj_[u] |= bit(v);
        adj_[v] |= bit(u);
        ++m_;
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<Mask> adj_;
};

// Induced subgraph plus the id remapping that produced it.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_map;  // vertex_map[new id] = old id, ascending
};

inline InducedSubgraph induced(const Graph& g, Mask keep) {
    keep &= g.vertices();
    InducedSubgraph out;
    out.vertex_map = to_vertices(keep);
    std::array<int, kMaxVertices> inv{};
    for (size_t i = 0; i < out.vertex_map.size(); ++i) inv[out.vertex_map[i]] = (int)i;
    std::vector<std::pair<int, int>> es;
    for (size_t i = 0; i < out.vertex_map.size(); ++i)
        for (int w : Bits{g.neighbors(out.vertex_map[i]) & keep})
            if (w > out.vertex_map[i]) es.emplace_back((int)i, inv[w]);
    out.graph = Graph((int)out.vertex_map.size(), es);
    return out;
}

inline Mask component_of(const Graph& g, int start, Mask allowed) {
    Mask comp = bit(start), frontier = bit(start);
    while (frontier) {
        Mask next = 0;
        for (int v : Bits{frontier}) next |= g.neighbors(v) & allowed & ~comp;
        comp |= next;
        frontier = next;
    }
    return comp;
}

// Components of g restricted to `allowed`, each a mask, ordered by least vertex.
inline std::vector<Mask> components(const Graph& g, Mask allowed) {
    std::vector<Mask> comps;
    Mask left = allowed & g.vertices();
    while (left) {
        Mask c = component_of(g, std::countr_zero(left), left);
        comps.push_back(c);
        left &= ~c;
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    return component_of(g, 0, g.vertices()) == g.vertices();
}

inline bool is_acyclic(const Graph& g) {
    // forest <=> every component has |V| - 1 edges <=> m == n - #components
    int k = (int)components(g, g.vertices()).size();
    return g.edge_count() == g.vertex_count() - k;
}

inline bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && is_connected(g) && is_acyclic(g);
}

inline bool is_cycle_graph(const Graph& g) {
    if (g.vertex_count() < 3 || !is_connected(g)) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

inline bool is_path_graph(const Graph& g) {
    if (g.vertex_count() == 0 || !is_connected(g)) return false;
    if (g.edge_count() != g.vertex_count() - 1) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

struct ConnectivityReport {
    std::vector<std::vector<int>> components;  // sorted vertex lists, by least vertex
    std::vector<int> cut_vertices;             // ascending
    bool is_two_connected = false;
};

namespace detail {

struct CutVertexDfs {
    const Graph& g;
    std::array<int, kMaxVertices> num{}, low{};
    int counter = 0;
    Mask cuts = 0;

    explicit CutVertexDfs(const Graph& gr) : g(gr) { num.fill(0); }

    void run(int v, int parent) {
        num[v] = low[v] = ++counter;
        int children = 0;
        for (int w : Bits{g.neighbors(v)}) {
            if (w == parent) continue;
            if (num[w]) {
                low[v] = std::min(low[v], num[w]);
            } else {
                ++children;
                run(w, v);
                low[v] = std::min(low[v], low[w]);
                if (parent != -1 && low[w] >= num[v]) cuts |= bit(v);
            }
        }
        if (parent == -1 && children >= 2) cuts |= bit(v);
    }
};

}  // namespace detail

inline ConnectivityReport connectivity(const Graph& g) {
    ConnectivityReport r;
    for (Mask c : components(g, g.vertices())) r.components.push_back(to_vertices(c));
    detail::CutVertexDfs dfs(g);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!dfs.num[v]) dfs.run(v, -1);
    r.cut_vertices = to_vertices(dfs.cuts);
    r.is_two_connected =
        g.vertex_count() >= 3 && r.components.size() == 1 && r.cut_vertices.empty();
    return r;
}

inline bool is_two_connected(const Graph& g) { return connectivity(g).is_two_connected; }

// Length of a shortest cycle; empty for forests.  Every shortest cycle
// contains an edge uv whose removal leaves dist(u, v) = girth - 1, so
// minimising over edges is exact.
inline std::optional<int> girth(const Graph& g) {
    int best = -1;
    for (auto [u, v] : g.edges()) {
        // BFS from u avoiding the edge uv itself
        std::array<int, kMaxVertices> dist{};
        dist.fill(-1);
        dist[u] = 0;
        Mask seen = bit(u), frontier = bit(u);
        int d = 0;
        while (frontier && dist[v] == -1) {
            ++d;
            Mask next = 0;
            for (int w : Bits{frontier}) {
                Mask nb = g.neighbors(w);
                if (w == u) nb &= ~bit(v);
                if (w == v) nb &= ~bit(u);
                next |= nb;
            }
            next &= ~seen;
            for (int w : Bits{next}) dist[w] = d;
            seen |= next;
            frontier = next;
        }
        if (dist[v] != -1 && (best == -1 || dist[v] + 1 < best)) best = dist[v] + 1;
    }
    if (best == -1) return std::nullopt;
    return best;
}

inline bool has_girth_at_least(const Graph& g, int k) {
    auto gi = girth(g);
    return !gi || *gi >= k;
}

// Lexicographically least triangle, or absent.
inline std::optional<std::array<int, 3>> triangle_witness(const Graph& g) {
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : Bits{g.neighbors(u) & ~full_mask(u + 1)}) {
            Mask common = g.neighbors(u) & g.neighbors(v) & ~full_mask(v + 1);
            if (common) return std::array<int, 3>{u, v, std::countr_zero(common)};
        }
    return std::nullopt;
}

inline bool is_triangle_free(const Graph& g) { return !triangle_witness(g).has_value(); }

}  // namespace isk4
