#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "twofold/double_cover.hpp"
#include "twofold/finite_group.hpp"
#include "twofold/graph.hpp"

namespace twofold {

struct ActionRejection {
    enum class Reason { kNotAntimorphism, kLoopAt };
    Reason reason;
    int vertex = -1;  // offending vertex for kLoopAt
    std::string describe() const;
};

// Graph with adjacency matrix A * m_psi, where (A m_psi)[i][j] = A[i][psi(j)].
// Succeeds exactly when the product is symmetric (psi is an antimorphism)
// and, unless loops are allowed, has a zero diagonal.
std::variant<Graph, ActionRejection> permutation_matrix_action(const Graph& g,
                                                               const Permutation& psi,
                                                               bool allow_loops = false);

// Bijection carrying every neighborhood of g1 onto a neighborhood of g2
// (equivalently, a parts-preserving isomorphism of the double covers).
std::optional<TfPair> tf_isomorphic(const Graph& g1, const Graph& g2,
                                    const SearchLimits& limits = {});

struct TfCensusClass {
    int rep;                  // index into psis (class representative)
    std::vector<int> members;  // indices into psis, sorted
    long long inst;            // |Aut^pi| / |Fix(gamma of the witness)|
    long long witness_aut_order;
    Graph witness;             // witness graph of the representative
};

// All graphs sharing a double cover with the base, indexed by their
// antimorphism witnesses and partitioned into isomorphism classes by the
// algebraic criterion (psi1, psi2 in one class iff psi1^-1 psi2 lies in
// Im(alpha) of the psi1-witness).
struct TfCensus {
    bool loops_included = false;
    long long aut_pi_order = 0;
    long long ant_size = 0;
    long long ant0_size = 0;
    std::vector<Permutation> psis;  // Ant0 (or Ant with loops), sorted; psis[0] = id
    std::vector<TfCensusClass> classes;
    std::vector<Graph> all_witnesses;  // populated only with keep_all

    long long class_count() const { return (long long)classes.size(); }
};

TfCensus census(const TwoFoldStructure& tfs, bool allow_loops = false, bool keep_all = false);
// Convenience: computes aut_pi first; requires connected reduced nonbipartite.
TfCensus census(const Graph& g, bool allow_loops = false, bool keep_all = false,
                const SearchLimits& limits = {});

// x * Ant0 inside Aut^pi x| Z2 (the strongly switching elements of BG).
struct SwitchingElements {
    SemidirectZ2 semidirect;    // over the abstract group of Aut^pi
    std::vector<int> elements;  // semidirect indices, sorted
};
SwitchingElements strongly_switching_elements(const TwoFoldStructure& tfs, int cap = 4096);

// Partition of the strongly switching elements by conjugacy, computed
// through the algebraic class criterion (no conjugator search).
std::vector<std::vector<int>> switching_conjugacy_classes(const TwoFoldStructure& tfs,
                                                          int cap = 4096);

struct Fraction {
    long long num = 0, den = 1;
    bool operator==(const Fraction&) const = default;
};
Fraction make_fraction(long long num, long long den);
Fraction add(Fraction a, Fraction b);

struct IdentityReport {
    long long ant_size = 0, ant0_size = 0, aut_pi_order = 0;
    long long sum_inst_loopless = 0, sum_inst_loops = 0;
    bool count_ok_loopless = false, count_ok_loops = false;
    Fraction harmonic_lhs_loopless, harmonic_rhs_loopless;
    bool harmonic_ok_loopless = false, harmonic_ok_loops = false;
    bool class_sizes_ok = false;
    bool expectation_ok = false;  // E(|Aut|) >= E(#TF-mates) over the loopless family
    bool all_ok() const {
        return count_ok_loopless && count_ok_loops && harmonic_ok_loopless &&
               harmonic_ok_loops && class_sizes_ok && expectation_ok;
    }
};

// Checks |Ant0| = sum Inst and the harmonic form exactly, in both the
// loopless and the loop variant; violations throw InternalError since the
// identities are theorems.
IdentityReport verify_identities(const Graph& g, const SearchLimits& limits = {});
IdentityReport verify_identities(const TwoFoldStructure& tfs);

// Every psi-orbit induces a coclique in g.
bool empty_orbit_check(const Graph& g, const Permutation& psi);

}  // namespace twofold
