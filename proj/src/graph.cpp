#include "twofold/graph.hpp"

#include <algorithm>
#include <queue>

#include "twofold/errors.hpp"

namespace twofold {

Graph::Graph(int n, bool allow_loops) : n_(n), allow_loops_(allow_loops) {
    if (n < 1) throw InputError("graph needs at least one vertex");
    rows_.assign(n, Bitset(n));
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw InputError("add_edge: vertex out of range");
    if (u == v && !allow_loops_) throw InputError("add_edge: loop on a simple graph");
    rows_[u].set(v);
    rows_[v].set(u);
}

void Graph::remove_edge(int u, int v) {
    rows_[u].reset(v);
    rows_[v].reset(u);
}

long long Graph::edge_count() const {
    long long twice = 0, loops = 0;
    for (int v = 0; v < n_; ++v) {
        twice += degree(v);
        if (rows_[v].test(v)) ++loops;
    }
    return (twice - loops) / 2 + loops;
}

bool Graph::has_loop() const {
    for (int v = 0; v < n_; ++v)
        if (rows_[v].test(v)) return true;
    return false;
}

Bitset neighborhood(const Graph& g, int v) {
    if (v < 0 || v >= g.size()) throw InputError("neighborhood: vertex out of range");
    return g.row(v);
}

Bitset ball(const Graph& g, int v, int r) {
    if (v < 0 || v >= g.size()) throw InputError("ball: vertex out of range");
    if (r < 0) throw InputError("ball: negative radius");
    Bitset reach(g.size());
    reach.set(v);
    Bitset frontier = reach;
    for (int step = 0; step < r; ++step) {
        Bitset next(g.size());
        for (int u = frontier.next(0); u >= 0; u = frontier.next(u + 1)) next |= g.row(u);
        next.and_not(reach);
        if (next.none()) break;
        reach |= next;
        frontier = next;
    }
    return reach;
}

bool is_reduced(const Graph& g) {
    std::vector<Bitset> rows;
    rows.reserve(g.size());
    for (int v = 0; v < g.size(); ++v) rows.push_back(g.row(v));
    std::sort(rows.begin(), rows.end());
    return std::adjacent_find(rows.begin(), rows.end()) == rows.end();
}

bool is_connected(const Graph& g) {
    return ball(g, 0, g.size()).count() == g.size();
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    std::vector<int> color(g.size(), -1);
    for (int s = 0; s < g.size(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            const Bitset& nb = g.row(u);
            for (int w = nb.next(0); w >= 0; w = nb.next(w + 1)) {
                if (color[w] == -1) {
                    color[w] = color[u] ^ 1;
                    q.push(w);
                } else if (color[w] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

Graph complement(const Graph& g) {
    if (g.allow_loops() || g.has_loop())
        throw PreconditionError("complement: unsupported on graphs with loops");
    Graph out(g.size());
    for (int v = 0; v < g.size(); ++v) {
        Bitset row = g.row(v);
        row.flip_all();
        row.reset(v);
        out.set_row(v, row);
    }
    return out;
}

Graph square(const Graph& g) {
    Graph out(g.size());
    for (int v = 0; v < g.size(); ++v) {
        Bitset row(g.size());
        const Bitset& nb = g.row(v);
        for (int u = nb.next(0); u >= 0; u = nb.next(u + 1)) row |= g.row(u);
        row.reset(v);
        out.set_row(v, row);
    }
    return out;
}

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
    std::vector<std::vector<int>> d(g.size(), std::vector<int>(g.size(), kInfDist));
    for (int s = 0; s < g.size(); ++s) {
        d[s][s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            const Bitset& nb = g.row(u);
            for (int w = nb.next(0); w >= 0; w = nb.next(w + 1)) {
                if (d[s][w] == kInfDist) {
                    d[s][w] = d[s][u] + 1;
                    q.push(w);
                }
            }
        }
    }
    return d;
}

int diameter(const Graph& g) {
    auto d = distance_matrix(g);
    int best = 0;
    for (int v = 0; v < g.size(); ++v)
        for (int w = 0; w < g.size(); ++w) {
            if (d[v][w] == kInfDist) return kInfDist;
            best = std::max(best, d[v][w]);
        }
    return best;
}

bool has_triangle(const Graph& g) {
    for (int v = 0; v < g.size(); ++v) {
        const Bitset& nb = g.row(v);
        for (int w = nb.next(v + 1); w >= 0; w = nb.next(w + 1)) {
            Bitset common = nb & g.row(w);
            common.reset(v);
            common.reset(w);
            if (common.any()) return true;
        }
    }
    return false;
}

namespace {
bool hexagon_dfs(const Graph& g, int start, int u, int depth, Bitset& onpath) {
    if (depth == 5) return g.adjacent(u, start);
    const Bitset& nb = g.row(u);
    for (int w = nb.next(start + 1); w >= 0; w = nb.next(w + 1)) {
        // only consider cycles whose minimum vertex is `start`
        if (onpath.test(w)) continue;
        onpath.set(w);
        if (hexagon_dfs(g, start, w, depth + 1, onpath)) {
            onpath.reset(w);
            return true;
        }
        onpath.reset(w);
    }
    return false;
}
}  // namespace

bool has_hexagon(const Graph& g) {
    Bitset onpath(g.size());
    for (int s = 0; s < g.size(); ++s) {
        onpath.set(s);
        if (hexagon_dfs(g, s, s, 0, onpath)) return true;
        onpath.reset(s);
    }
    return false;
}

bool has_nested_neighborhoods(const Graph& g) {
    for (int u = 0; u < g.size(); ++u)
        for (int v = 0; v < g.size(); ++v) {
            if (u == v) continue;
            if (g.row(u) != g.row(v) && g.row(u).is_subset_of(g.row(v))) return true;
        }
    return false;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);       // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);             // spokes
    }
    return g;
}

}  // namespace twofold
