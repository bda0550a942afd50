#pragma once

#include <string>
#include <vector>

#include "twofold/finite_group.hpp"
#include "twofold/graph.hpp"

namespace twofold {

struct LabeledGraph {
    Graph graph;
    std::vector<std::string> labels;  // index-aligned, unique
};

// Rigid skeleton on n0+6 vertices. The paper's 1-based vertex names are
// kept in the labels; vertex v carries label "v+1".
LabeledGraph skeleton_r(int n0);

// Connected reduced nonbipartite graph on |H|*(n0+6) vertices with two-fold
// projection group H and gamma acting as sigma, built over skeleton_r with
// n0 = 1 + max(rank(H), 5). Vertices are labeled "(h,i)" with i the 1-based
// skeleton coordinate; index(h,i) = (i-1)*|H| + h keeps each H-fiber
// contiguous. X defaults to the rank witness.
LabeledGraph gamma_construction(const FiniteGroup& h, const GroupAutomorphism& sigma,
                                std::vector<int> generators = {});

// Generalized Cayley graph: h1 ~ h2 iff h1^-1 sigma(h2) in S. Requires
// S = sigma(S)^-1 and S disjoint from Im(h -> h^-1 sigma(h)) so the result
// is loop-free.
LabeledGraph gcay(const FiniteGroup& h, const GroupAutomorphism& sigma, std::vector<int> s);

// gamma_construction with GCay(H, sigma, x*(S(H,sigma) \ C)) overlaid on the
// H x {n0+2} fiber. C is given as semidirect element indices; it must be a
// union of conjugacy classes inside S(H,sigma) containing the class of x.
LabeledGraph achievable_construction(const FiniteGroup& h, const GroupAutomorphism& sigma,
                                     const std::vector<int>& c);

// The k-vertex tree-with-cycles gadget and its 2k+2-vertex companion whose
// automorphism group is trivial for k >= 13.
Graph m_graph(int k);
Graph m0_graph(int k);
// Labels of m0_graph's vertices, index-aligned ("(i,i)" then "(m,n)").
std::vector<std::string> m0_labels(int k);

// Cayley graph of Z2^k over the basis plus the basis-pair products along
// m_graph's edges; vertices are the 2^k bitmask group elements.
LabeledGraph grr_z2k(int k);
// Common-neighborhood structure on the connection set of grr_z2k, laid out
// so that equality with m0_graph(k) is index-by-index.
Graph local_graph(int k);
// The connection set itself (bitmasks, in local_graph vertex order).
std::vector<uint32_t> grr_connection_set(int k);

// Ordinary Cayley graph; requires e not in S and S = S^-1.
LabeledGraph cayley(const FiniteGroup& h, const std::vector<int>& s);

}  // namespace twofold
