// Minimal library walkthrough: build a wheel-shaped graph, classify it,
// decompose it, and print the sector cutsets.

#include <cstdio>

#include "isk4/families.hpp"
#include "isk4/graph6.hpp"
#include "isk4/wheels.hpp"

using namespace isk4;

int main() {
    Graph g = wheel_like(12, {0, 3, 6, 9});
    std::printf("graph %s: n=%d m=%d girth=%d\n", write_graph6(g).c_str(), g.vertex_count(),
                g.edge_count(), girth(g).value_or(-1));

    auto outcome = decompose(g);
    if (outcome.tag == DecompositionOutcome::Tag::wheel_decomposition) {
        const auto& wd = *outcome.wheel;
        std::printf("wheel decomposition, center %d, %d spokes\n", wd.wheel.center,
                    wd.wheel.spoke_count());
        for (size_t i = 0; i < wd.sector_cutsets.size(); ++i) {
            std::printf("  sector %zu cutset:", i);
            for (int v : wd.sector_cutsets[i].cutset) std::printf(" %d", v);
            std::printf("\n");
        }
    }
    std::printf("verified: %s\n", verify_decomposition(g, outcome) ? "yes" : "no");
    return 0;
}
