#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twofold/graph.hpp"
#include "twofold/perm_group.hpp"
#include "twofold/refinement.hpp"
#include "twofold/search.hpp"

namespace twofold {

// Canonical double cover: vertex (v,b) becomes v + b*n; (u,0)-(v,1) is an
// edge iff (u,v) is one. The output is bipartite with parts {0..n-1} and
// {n..2n-1}.
Graph double_cover(const Graph& g);

// Aut^pi of a reduced graph together with the gamma pairing and every set
// derived from it. Element indices refer to the sorted `elements` list.
class TwoFoldStructure {
public:
    TwoFoldStructure(Graph graph, std::vector<Permutation> elements,
                     std::vector<Permutation> gamma_images);

    const Graph& graph() const { return graph_; }
    int degree() const { return graph_.size(); }

    const std::vector<Permutation>& elements() const { return elements_; }
    long long aut_pi_order() const { return (long long)elements_.size(); }
    long long aut_order() const { return (long long)aut_.size(); }

    int index_of(const Permutation& p) const;  // -1 when absent
    // gamma / alpha by element index
    int gamma_idx(int i) const { return gamma_[i]; }
    int inverse_idx(int i) const { return inv_[i]; }
    int compose_idx(int i, int j) const;  // index of elements[i] o elements[j]

    const Permutation& gamma_of(const Permutation& p) const;
    Permutation alpha_of(const Permutation& p) const;

    const std::vector<int>& aut() const { return aut_; }            // Fix(gamma)
    const std::vector<int>& im_alpha() const { return im_alpha_; }  // sorted indices
    const std::vector<int>& ant() const { return ant_; }
    const std::vector<int>& ant0() const { return ant0_; }

    bool connected() const { return connected_; }
    bool bipartite() const { return bipartite_; }
    // Defined only for connected nonbipartite inputs.
    std::optional<long long> inst() const;

    const std::vector<std::vector<int>>& orbits() const { return orbits_; }
    const Refinement& refinement() const { return refinement_; }

private:
    Graph graph_;
    std::vector<Permutation> elements_;
    std::vector<Permutation> gamma_perm_;
    std::vector<int> gamma_, inv_;
    std::vector<int> aut_, im_alpha_, ant_, ant0_;
    bool connected_ = false, bipartite_ = false;
    std::vector<std::vector<int>> orbits_;
    Refinement refinement_;
};

// Backtracking computation of Aut^pi(g); requires g reduced and loopless.
TwoFoldStructure aut_pi(const Graph& g, const SearchLimits& limits = {});

// Plain automorphism group (works for non-reduced graphs and loops too).
PermGroup automorphism_group(const Graph& g, const SearchLimits& limits = {});

enum class StabilityKind { kStable, kUnstable, kTriviallyUnstable };

struct StabilityVerdict {
    StabilityKind kind;
    std::string reason;  // set for trivially unstable graphs
    long long aut_order = 0;
    std::optional<long long> aut_pi_order;
    std::optional<long long> inst;
};

StabilityVerdict is_stable(const Graph& g, const SearchLimits& limits = {});

// Ball-preserving permutations of g, i.e. Aut^pi of the complement; the
// complement must be reduced. Gamma of the returned structure is the one
// relevant to the ball theorem for g.
TwoFoldStructure aut_tau(const Graph& g, const SearchLimits& limits = {});

// Distance parity bands {2n-1, 2n} are preserved by pi.
bool verify_distance_parity(const Graph& g, const Permutation& pi);

struct SquareSubgroupReport {
    long long aut_pi_order = 0;
    long long aut_square_order = 0;
    bool contained = false;     // Aut^pi(g) <= Aut(g^2)
    bool hypotheses_met = false;  // triangle-free, hexagon-free, nesting-free
    bool equal = false;
};

SquareSubgroupReport square_subgroup_check(const Graph& g, const SearchLimits& limits = {});

}  // namespace twofold
