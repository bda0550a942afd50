#pragma once

#include <cstdint>
#include <vector>

#include "twofold/graph.hpp"

namespace twofold {

// Ordered partition of 0..n-1 into disjoint cells. Cells are sorted
// internally and ordered by (cell invariant key, smallest vertex), so the
// layout is reproducible across runs and relabelings.
struct VertexPartition {
    std::vector<std::vector<int>> cells;
    std::vector<uint32_t> cell_key;  // invariant key per cell, same order

    bool discrete() const {
        for (const auto& c : cells)
            if (c.size() > 1) return false;
        return true;
    }
    int cell_count() const { return (int)cells.size(); }
};

struct Refinement {
    VertexPartition partition;
    std::vector<uint32_t> key;  // stable per-vertex invariant key
};

// Iterated neighborhood refinement: start from the degree partition and
// re-key every vertex by the multiset of its neighbors' keys until the
// partition stabilizes. Keys are assigned by signature rank, so they are
// invariant under every permutation that transports neighborhoods onto
// neighborhoods; the stable partition is a prepartition of the
// two-fold-projection orbit partition.
Refinement ne_refinement(const Graph& g);

// True iff every cell of `fine` lies inside one cell of `coarse`.
bool is_prepartition_of(const VertexPartition& coarse, const std::vector<std::vector<int>>& fine);

}  // namespace twofold
