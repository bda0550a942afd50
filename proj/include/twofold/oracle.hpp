#pragma once

#include <vector>

#include "twofold/graph.hpp"
#include "twofold/perm_group.hpp"

namespace twofold {
namespace oracle {

// Everything here walks Sym(V) directly and exists to validate the fast
// paths on small instances. Degree is capped hard.
inline constexpr int kMaxOracleVertices = 10;

PermGroup brute_aut(const Graph& g);

struct BruteAutPi {
    std::vector<Permutation> elements;  // sorted lexicographically
    std::vector<Permutation> gamma;     // gamma[i] pairs with elements[i]
};

// Literal test of "pi maps every neighborhood onto some neighborhood" over
// all of Sym(V); requires a reduced graph.
BruteAutPi brute_aut_pi(const Graph& g);

bool brute_iso(const Graph& g1, const Graph& g2);

struct BruteCensus {
    std::vector<Permutation> pool;      // Ant0 (or Ant with loops), sorted
    std::vector<Graph> witnesses;       // witness graph per pool entry
    std::vector<std::vector<int>> classes;  // pool indices, grouped by brute_iso
};

// Census replayed with pairwise isomorphism tests instead of the algebraic
// classification criterion.
BruteCensus brute_census(const Graph& g, bool allow_loops = false);

}  // namespace oracle
}  // namespace twofold
