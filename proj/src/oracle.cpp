#include "twofold/oracle.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "twofold/errors.hpp"

namespace twofold {
namespace oracle {

namespace {

struct MaskGraph {
    int n = 0;
    std::array<uint16_t, kMaxOracleVertices> row{};
};

MaskGraph to_masks(const Graph& g, const char* who) {
    if (g.size() > kMaxOracleVertices)
        throw ResourceError(std::string(who) + ": oracle cap of " +
                            std::to_string(kMaxOracleVertices) + " vertices exceeded");
    MaskGraph m;
    m.n = g.size();
    for (int v = 0; v < m.n; ++v)
        for (int w = 0; w < m.n; ++w)
            if (g.adjacent(v, w)) m.row[v] |= uint16_t(1) << w;
    return m;
}

uint16_t map_mask(uint16_t mask, const std::vector<int>& img) {
    uint16_t out = 0;
    while (mask) {
        int v = std::countr_zero(mask);
        mask &= mask - 1;
        out |= uint16_t(1) << img[v];
    }
    return out;
}

}  // namespace

PermGroup brute_aut(const Graph& g) {
    MaskGraph m = to_masks(g, "brute_aut");
    std::vector<int> perm(m.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Permutation> found;
    do {
        bool ok = true;
        for (int v = 0; v < m.n && ok; ++v)
            ok = map_mask(m.row[v], perm) == m.row[perm[v]];
        if (ok) found.emplace_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return PermGroup(m.n, found, found);
}

BruteAutPi brute_aut_pi(const Graph& g) {
    if (!is_reduced(g)) throw PreconditionError("brute_aut_pi: graph is not reduced");
    MaskGraph m = to_masks(g, "brute_aut_pi");

    // mask -> owning vertex, or -1
    std::vector<int> owner(1 << m.n, -1);
    for (int v = 0; v < m.n; ++v) owner[m.row[v]] = v;

    std::vector<int> perm(m.n), gam(m.n);
    std::iota(perm.begin(), perm.end(), 0);
    BruteAutPi out;
    do {
        bool ok = true;
        for (int v = 0; v < m.n; ++v) {
            int w = owner[map_mask(m.row[v], perm)];
            if (w < 0) {
                ok = false;
                break;
            }
            gam[v] = w;
        }
        if (ok) {
            out.elements.emplace_back(perm);
            out.gamma.emplace_back(gam);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

bool brute_iso(const Graph& g1, const Graph& g2) {
    if (g1.size() != g2.size()) return false;
    MaskGraph a = to_masks(g1, "brute_iso");
    MaskGraph b = to_masks(g2, "brute_iso");
    {
        std::vector<int> d1, d2;
        for (int v = 0; v < a.n; ++v) d1.push_back(std::popcount(a.row[v]));
        for (int v = 0; v < b.n; ++v) d2.push_back(std::popcount(b.row[v]));
        std::sort(d1.begin(), d1.end());
        std::sort(d2.begin(), d2.end());
        if (d1 != d2) return false;
    }

    std::vector<int> img(a.n, -1);
    uint16_t used = 0;
    // depth-first with pairwise consistency on the assigned prefix
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == a.n) return true;
        for (int w = 0; w < a.n; ++w) {
            if ((used >> w) & 1) continue;
            if (std::popcount(a.row[v]) != std::popcount(b.row[w])) continue;
            bool ok = (((a.row[v] >> v) & 1) == ((b.row[w] >> w) & 1));
            for (int u = 0; u < v && ok; ++u)
                ok = (((a.row[v] >> u) & 1) == ((b.row[w] >> img[u]) & 1));
            if (!ok) continue;
            img[v] = w;
            used |= uint16_t(1) << w;
            if (self(self, v + 1)) return true;
            used &= ~(uint16_t(1) << w);
            img[v] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

BruteCensus brute_census(const Graph& g, bool allow_loops) {
    if (!is_connected(g) || is_bipartite(g))
        throw PreconditionError("brute_census: graph must be connected and nonbipartite");
    BruteAutPi ap = brute_aut_pi(g);

    BruteCensus out;
    for (size_t i = 0; i < ap.elements.size(); ++i) {
        const Permutation& psi = ap.elements[i];
        if (!(ap.gamma[i] == inverse(psi))) continue;  // Ant
        bool hits_neighbor = false;
        for (int v = 0; v < g.size() && !hits_neighbor; ++v)
            hits_neighbor = g.adjacent(v, psi(v));
        if (hits_neighbor && !allow_loops) continue;  // Ant0
        // witness adjacency: B[i][j] = A[i][psi(j)]
        Graph witness(g.size(), allow_loops);
        for (int r = 0; r < g.size(); ++r)
            for (int c = 0; c < g.size(); ++c)
                if (g.adjacent(r, psi(c))) witness.add_edge(r, c);
        out.pool.push_back(psi);
        out.witnesses.push_back(std::move(witness));
    }

    std::vector<int> cls(out.pool.size(), -1);
    for (size_t i = 0; i < out.pool.size(); ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = (int)out.classes.size();
        out.classes.push_back({(int)i});
        for (size_t j = i + 1; j < out.pool.size(); ++j)
            if (cls[j] < 0 && brute_iso(out.witnesses[i], out.witnesses[j])) {
                cls[j] = cls[i];
                out.classes.back().push_back((int)j);
            }
    }
    return out;
}

}  // namespace oracle
}  // namespace twofold
