#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "twofold/bitset.hpp"

namespace twofold {

// Distance value for unreachable vertex pairs.
inline constexpr int kInfDist = std::numeric_limits<int>::max();

// Finite undirected graph on vertices 0..n-1 stored as one bit-row per
// vertex. Simple by default; allow_loops=true admits diagonal entries
// (used only by the loop-variant census).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n, bool allow_loops = false);

    int size() const { return n_; }
    bool allow_loops() const { return allow_loops_; }

    bool adjacent(int u, int v) const { return rows_[u].test(v); }
    const Bitset& row(int v) const { return rows_[v]; }
    int degree(int v) const { return rows_[v].count(); }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void set_row(int v, const Bitset& row) { rows_[v] = row; }

    long long edge_count() const;  // loops count once
    bool has_loop() const;

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && allow_loops_ == o.allow_loops_ && rows_ == o.rows_;
    }

private:
    int n_ = 0;
    bool allow_loops_ = false;
    std::vector<Bitset> rows_;
};

// Open neighborhood N(v) as a vertex set (contains v only for a loop).
Bitset neighborhood(const Graph& g, int v);

// BFS ball of radius r around v: {w : d(v,w) <= r}.
Bitset ball(const Graph& g, int v, int r);

// No two vertices share the same neighborhood row.
bool is_reduced(const Graph& g);

bool is_connected(const Graph& g);

// 2-coloring per connected component when one exists.
std::optional<std::vector<int>> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

// Loopless complement; rejects graphs with loops.
Graph complement(const Graph& g);

// Square graph: (v,w) adjacent iff they have a common neighbor and v != w.
Graph square(const Graph& g);

// All-pairs BFS distances; kInfDist marks unreachable pairs.
std::vector<std::vector<int>> distance_matrix(const Graph& g);
// Max finite distance (0 for a single vertex); kInfDist when disconnected.
int diameter(const Graph& g);

bool has_triangle(const Graph& g);
// Any 6-cycle on six distinct vertices (subgraph, not necessarily induced).
bool has_hexagon(const Graph& g);
// Exists u != v with N(u) a strict subset of N(v).
bool has_nested_neighborhoods(const Graph& g);

// Small named graphs used throughout the tests and docs.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph petersen_graph();

}  // namespace twofold
