#include "twofold/refinement.hpp"

#include <algorithm>
#include <map>

namespace twofold {

Refinement ne_refinement(const Graph& g) {
    int n = g.size();
    std::vector<uint32_t> color(n);
    {
        std::vector<int> degs;
        for (int v = 0; v < n; ++v) degs.push_back(g.degree(v));
        std::vector<int> sorted = degs;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v)
            color[v] = (uint32_t)(std::lower_bound(sorted.begin(), sorted.end(), degs[v]) -
                                  sorted.begin());
    }

    size_t ncolors = 0;
    while (true) {
        // signature: own key plus sorted multiset of neighbor keys
        std::map<std::pair<uint32_t, std::vector<uint32_t>>, uint32_t> rank;
        std::vector<std::pair<uint32_t, std::vector<uint32_t>>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<uint32_t> nb;
            const Bitset& row = g.row(v);
            for (int w = row.next(0); w >= 0; w = row.next(w + 1)) nb.push_back(color[w]);
            std::sort(nb.begin(), nb.end());
            sig[v] = {color[v], std::move(nb)};
            rank[sig[v]] = 0;
        }
        uint32_t next = 0;
        for (auto& [s, r] : rank) r = next++;
        for (int v = 0; v < n; ++v) color[v] = rank[sig[v]];
        if (rank.size() == ncolors) break;
        ncolors = rank.size();
    }

    Refinement out;
    out.key = color;
    std::map<uint32_t, std::vector<int>> cells;
    for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
    for (auto& [key, cell] : cells) {
        out.partition.cells.push_back(cell);
        out.partition.cell_key.push_back(key);
    }
    return out;
}

bool is_prepartition_of(const VertexPartition& coarse,
                        const std::vector<std::vector<int>>& fine) {
    int n = 0;
    for (const auto& c : coarse.cells) n += (int)c.size();
    std::vector<int> cell_of(n, -1);
    for (size_t i = 0; i < coarse.cells.size(); ++i)
        for (int v : coarse.cells[i]) cell_of[v] = (int)i;
    for (const auto& c : fine)
        for (int v : c)
            if (cell_of[v] != cell_of[c[0]]) return false;
    return true;
}

}  // namespace twofold
