#include "twofold/double_cover.hpp"

#include <algorithm>
#include <map>

#include "twofold/errors.hpp"

namespace twofold {

Graph double_cover(const Graph& g) {
    if (g.has_loop()) throw PreconditionError("double_cover: graph must be simple");
    int n = g.size();
    Graph b(2 * n);
    for (int u = 0; u < n; ++u) {
        const Bitset& nb = g.row(u);
        for (int v = nb.next(0); v >= 0; v = nb.next(v + 1)) b.add_edge(u, n + v);
    }
    return b;
}

TwoFoldStructure::TwoFoldStructure(Graph graph, std::vector<Permutation> elements,
                                   std::vector<Permutation> gamma_images)
    : graph_(std::move(graph)) {
    // sort elements, carrying gamma along
    std::vector<int> order(elements.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return elements[a] < elements[b]; });
    for (int i : order) {
        elements_.push_back(std::move(elements[i]));
        gamma_perm_.push_back(std::move(gamma_images[i]));
    }

    int m = (int)elements_.size();
    gamma_.resize(m);
    inv_.resize(m);
    for (int i = 0; i < m; ++i) {
        gamma_[i] = index_of(gamma_perm_[i]);
        inv_[i] = index_of(inverse(elements_[i]));
        if (gamma_[i] < 0 || inv_[i] < 0)
            throw InternalError("aut_pi result is not closed under gamma/inverse");
    }

    for (int i = 0; i < m; ++i) {
        if (gamma_[i] == i) aut_.push_back(i);
        if (gamma_[i] == inv_[i]) {
            ant_.push_back(i);
            bool hits = false;
            for (int v = 0; v < graph_.size() && !hits; ++v)
                hits = graph_.adjacent(v, elements_[i](v));
            if (!hits) ant0_.push_back(i);
        }
    }
    std::vector<int> im;
    for (int i = 0; i < m; ++i) im.push_back(index_of(compose(inverse(elements_[i]), gamma_perm_[i])));
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    im_alpha_ = std::move(im);

    connected_ = is_connected(graph_);
    bipartite_ = is_bipartite(graph_);
    orbits_ = PermGroup(graph_.size(), elements_, elements_).orbits();
    refinement_ = ne_refinement(graph_);
}

int TwoFoldStructure::index_of(const Permutation& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || !(*it == p)) return -1;
    return (int)(it - elements_.begin());
}

int TwoFoldStructure::compose_idx(int i, int j) const {
    return index_of(compose(elements_[i], elements_[j]));
}

const Permutation& TwoFoldStructure::gamma_of(const Permutation& p) const {
    int i = index_of(p);
    if (i < 0) throw InputError("gamma_of: permutation is not a two-fold projection");
    return gamma_perm_[i];
}

Permutation TwoFoldStructure::alpha_of(const Permutation& p) const {
    int i = index_of(p);
    if (i < 0) throw InputError("alpha_of: permutation is not a two-fold projection");
    return compose(inverse(p), gamma_perm_[i]);
}

std::optional<long long> TwoFoldStructure::inst() const {
    if (!connected_ || bipartite_) return std::nullopt;
    return aut_pi_order() / aut_order();
}

TwoFoldStructure aut_pi(const Graph& g, const SearchLimits& limits) {
    if (g.has_loop()) throw PreconditionError("aut_pi: graph must be simple");
    if (!is_reduced(g)) throw PreconditionError("aut_pi: graph is not reduced");
    std::vector<TfPair> pairs = find_tf_pairs(g, g, /*find_all=*/true, limits);
    std::vector<Permutation> elements, gammas;
    elements.reserve(pairs.size());
    gammas.reserve(pairs.size());
    for (auto& pr : pairs) {
        elements.push_back(std::move(pr.p));
        gammas.push_back(std::move(pr.q));
    }
    return TwoFoldStructure(g, std::move(elements), std::move(gammas));
}

PermGroup automorphism_group(const Graph& g, const SearchLimits& limits) {
    std::vector<Permutation> elements = find_isomorphisms(g, g, /*find_all=*/true, limits);
    return PermGroup(g.size(), elements, elements);
}

StabilityVerdict is_stable(const Graph& g, const SearchLimits& limits) {
    StabilityVerdict v{StabilityKind::kStable, "", 0, std::nullopt, std::nullopt};
    bool reduced = is_reduced(g);
    bool connected = is_connected(g);
    bool bipartite = is_bipartite(g);
    if (!connected || bipartite || !reduced) {
        v.kind = StabilityKind::kTriviallyUnstable;
        v.reason = !reduced ? "not reduced" : (!connected ? "disconnected" : "bipartite");
        v.aut_order = automorphism_group(g, limits).order();
        if (reduced && !g.has_loop()) {
            TwoFoldStructure tfs = aut_pi(g, limits);
            v.aut_pi_order = tfs.aut_pi_order();
        }
        return v;
    }
    TwoFoldStructure tfs = aut_pi(g, limits);
    v.aut_order = tfs.aut_order();
    v.aut_pi_order = tfs.aut_pi_order();
    v.inst = tfs.inst();
    v.kind = (tfs.aut_order() == tfs.aut_pi_order()) ? StabilityKind::kStable
                                                     : StabilityKind::kUnstable;
    return v;
}

TwoFoldStructure aut_tau(const Graph& g, const SearchLimits& limits) {
    Graph comp = complement(g);
    if (!is_reduced(comp)) throw PreconditionError("aut_tau: complement is not reduced");
    return aut_pi(comp, limits);
}

bool verify_distance_parity(const Graph& g, const Permutation& pi) {
    auto d = distance_matrix(g);
    auto band = [](int dist) {
        if (dist == kInfDist) return kInfDist;
        return (dist + 1) / 2;  // {2n-1, 2n} -> n, 0 -> 0
    };
    for (int v = 0; v < g.size(); ++v)
        for (int w = 0; w < g.size(); ++w)
            if (band(d[v][w]) != band(d[pi(v)][pi(w)])) return false;
    return true;
}

SquareSubgroupReport square_subgroup_check(const Graph& g, const SearchLimits& limits) {
    if (!is_reduced(g)) throw PreconditionError("square_subgroup_check: graph is not reduced");
    TwoFoldStructure tfs = aut_pi(g, limits);
    Graph sq = square(g);
    PermGroup aut_sq = automorphism_group(sq, limits);
    SquareSubgroupReport rep;
    rep.aut_pi_order = tfs.aut_pi_order();
    rep.aut_square_order = aut_sq.order();
    rep.contained = true;
    for (const auto& p : tfs.elements())
        if (!aut_sq.contains(p)) {
            rep.contained = false;
            break;
        }
    rep.hypotheses_met = !has_triangle(g) && !has_hexagon(g) && !has_nested_neighborhoods(g);
    rep.equal = rep.contained && rep.aut_pi_order == rep.aut_square_order;
    return rep;
}

}  // namespace twofold
