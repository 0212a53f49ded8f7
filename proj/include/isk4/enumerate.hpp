#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_set>
#include <vector>

#include "isk4/graph.hpp"
#include "isk4/isomorphism.hpp"

namespace isk4 {

// A class filter for the enumerator.  Filters closed under vertex deletion
// (`prunes_augmentation`) cut the search at every layer; the rest only gate
// the final emission.  "connected" also prunes: every connected graph keeps a
// non-cut vertex, so connected parents reach every connected class.
struct Filter {
    std::string name;
    bool prunes_augmentation = false;
    std::function<bool(const Graph&)> pred;
};

constexpr int kEnumerationHardCap = 12;

inline int enumeration_cap(const std::vector<Filter>& filters) {
    int cap = 9;
    for (const auto& f : filters) {
        if (f.name == "connected") cap = std::max(cap, 10);
        if (f.prunes_augmentation && f.name != "connected") cap = kEnumerationHardCap;
    }
    return cap;
}

// One representative per isomorphism class, generated by vertex augmentation
// with canonical-code isomorph rejection.  Emitted graphs carry their
// canonical labeling and each layer is sorted by code, so the stream is
// deterministic no matter how callers schedule work.  `visit(g)` is called for
// every graph with 1 <= vertex_count <= n passing all filters.
inline void for_each_graph(int n, const std::vector<Filter>& filters,
                           const std::function<void(const Graph&)>& visit, int cap = -1) {
    if (cap < 0) cap = enumeration_cap(filters);
    cap = std::min(cap, kEnumerationHardCap);
    if (n < 0 || n > cap)
        throw CapExceededError("enumeration cap exceeded: n = " + std::to_string(n) +
                               ", cap = " + std::to_string(cap));

    auto prunes = [&](const Graph& g) {
        for (const auto& f : filters)
            if (f.prunes_augmentation && !f.pred(g)) return false;
        return true;
    };
    auto emits = [&](const Graph& g) {
        for (const auto& f : filters)
            if (!f.prunes_augmentation && !f.pred(g)) return false;
        return true;
    };

    std::vector<Graph> layer;
    {
        Graph k1(1, {});
        if (prunes(k1)) layer.push_back(k1);
    }
    for (int k = 1; k <= n && !layer.empty(); ++k) {
        for (const Graph& g : layer)
            if (emits(g)) visit(g);
        if (k == n) break;
        std::vector<std::pair<CanonCode, Graph>> next;
        std::unordered_set<CanonCode, CanonHash> seen;
        for (const Graph& parent : layer) {
            for (Mask nbrs = 0; nbrs < (Mask{1} << k); ++nbrs) {
                Graph child = parent.extended(nbrs);
                if (!prunes(child)) continue;
                auto canon = canonical_form(child);
                if (!seen.insert(canon.code).second) continue;
                next.emplace_back(canon.code, child.relabeled(canon.perm));
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        layer.clear();
        for (auto& [code, g] : next) layer.push_back(std::move(g));
    }
}

// Representatives on exactly n vertices.
inline std::vector<Graph> enumerate_graphs(int n, const std::vector<Filter>& filters = {},
                                           int cap = -1) {
    std::vector<Graph> out;
    for_each_graph(
        n, filters,
        [&](const Graph& g) {
            if (g.vertex_count() == n) out.push_back(g);
        },
        cap);
    return out;
}

// Representatives with 1 <= vertex_count <= n.
inline std::vector<Graph> enumerate_graphs_up_to(int n, const std::vector<Filter>& filters = {},
                                                 int cap = -1) {
    std::vector<Graph> out;
    for_each_graph(n, filters, [&](const Graph& g) { out.push_back(g); }, cap);
    return out;
}

}  // namespace isk4
