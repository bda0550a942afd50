#pragma once

#include <cstdint>
#include <vector>

#include "twofold/graph.hpp"
#include "twofold/permutation.hpp"

namespace twofold {

inline constexpr uint64_t kDefaultNodeBudget = 100'000'000;

// Node budget for the backtracking searches; the TWOFOLD_NODE_BUDGET
// environment variable overrides the built-in default.
uint64_t default_node_budget();

struct SearchLimits {
    uint64_t node_budget = 0;  // 0 means default_node_budget()
    int threads = 1;           // top-level branch split when > 1
};

// A two-fold pair: dom.adj(u,v) == cod.adj(p(u), q(v)) for all u,v.
struct TfPair {
    Permutation p;
    Permutation q;
};

// All (or the first) two-fold pairs from dom to cod. Candidates are pruned
// by joint iterated-refinement keys; results are sorted by p.
std::vector<TfPair> find_tf_pairs(const Graph& dom, const Graph& cod, bool find_all,
                                  const SearchLimits& limits = {});

// All (or the first) plain isomorphisms dom -> cod (p == q case).
std::vector<Permutation> find_isomorphisms(const Graph& dom, const Graph& cod, bool find_all,
                                           const SearchLimits& limits = {});

}  // namespace twofold
