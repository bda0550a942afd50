#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "twofold/graph.hpp"

namespace twofold {
namespace corpus {

// Minimum adjacency bit-string over all relabelings; usable as an exact
// isomorphism key for n <= 10 (upper triangle fits in 64 bits).
uint64_t canonical_key(const Graph& g);

// All pairwise non-isomorphic simple graphs on exactly n vertices,
// deterministically ordered by canonical key. Grown by vertex extension
// from the (n-1)-vertex corpus.
std::vector<Graph> all_graphs(int n);

// Union of all_graphs(1..max_n).
std::vector<Graph> all_graphs_up_to(int max_n);

Graph random_graph(int n, std::mt19937& rng, double edge_prob = 0.5);
// Rejection-samples until the predicate-style requirements hold.
Graph random_reduced_graph(int n, std::mt19937& rng);
Graph random_connected_graph_with_reduced_complement(int n, std::mt19937& rng);

}  // namespace corpus
}  // namespace twofold
