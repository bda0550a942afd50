#include "twofold/corpus.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

#include "twofold/errors.hpp"

namespace twofold {
namespace corpus {

namespace {

constexpr int kMaxCanonVertices = 10;

struct CanonState {
    int n;
    std::array<uint16_t, kMaxCanonVertices> row{};
    std::array<int, kMaxCanonVertices> img{};  // img[pos] = source vertex
    uint16_t used = 0;
    uint64_t best = ~uint64_t(0);
};

// Column-major upper-triangle bits; prefix after placing d vertices covers
// the first d(d-1)/2 bits, which allows branch-and-bound against best.
void canon_rec(CanonState& st, int d, uint64_t prefix, int bits) {
    if (d == st.n) {
        st.best = std::min(st.best, prefix);
        return;
    }
    for (int v = 0; v < st.n; ++v) {
        if ((st.used >> v) & 1) continue;
        uint64_t p = prefix;
        for (int i = 0; i < d; ++i)
            p = (p << 1) | ((st.row[v] >> st.img[i]) & 1);
        int nb = bits + d;
        // compare against the same-length prefix of best
        int total = st.n * (st.n - 1) / 2;
        uint64_t best_prefix = st.best == ~uint64_t(0) ? ~uint64_t(0) : (st.best >> (total - nb));
        if (p > best_prefix) continue;
        st.img[d] = v;
        st.used |= uint16_t(1) << v;
        canon_rec(st, d + 1, p, nb);
        st.used &= ~(uint16_t(1) << v);
    }
}

uint64_t graph_key(const Graph& g) {
    CanonState st;
    st.n = g.size();
    for (int v = 0; v < st.n; ++v)
        for (int w = 0; w < st.n; ++w)
            if (g.adjacent(v, w)) st.row[v] |= uint16_t(1) << w;
    canon_rec(st, 0, 0, 0);
    return st.best;
}

Graph key_to_graph(uint64_t key, int n) {
    Graph g(n);
    int total = n * (n - 1) / 2;
    int bit = total - 1;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, --bit)
            if ((key >> bit) & 1) g.add_edge(i, j);
    return g;
}

}  // namespace

uint64_t canonical_key(const Graph& g) {
    if (g.size() > kMaxCanonVertices || g.has_loop())
        throw ResourceError("canonical_key: only simple graphs up to 10 vertices");
    return graph_key(g);
}

std::vector<Graph> all_graphs(int n) {
    if (n < 1 || n > 8) throw ResourceError("all_graphs: supported range is 1..8");
    if (n == 1) return {Graph(1)};

    std::vector<Graph> prev = all_graphs(n - 1);
    std::vector<uint64_t> keys;
    for (const Graph& base : prev) {
        for (uint32_t mask = 0; mask < (uint32_t(1) << (n - 1)); ++mask) {
            Graph g(n);
            for (int u = 0; u < n - 1; ++u) {
                for (int v = u + 1; v < n - 1; ++v)
                    if (base.adjacent(u, v)) g.add_edge(u, v);
                if ((mask >> u) & 1) g.add_edge(u, n - 1);
            }
            keys.push_back(graph_key(g));
        }
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

    std::vector<Graph> out;
    out.reserve(keys.size());
    for (uint64_t k : keys) out.push_back(key_to_graph(k, n));
    return out;
}

std::vector<Graph> all_graphs_up_to(int max_n) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        auto g = all_graphs(n);
        out.insert(out.end(), g.begin(), g.end());
    }
    return out;
}

Graph random_graph(int n, std::mt19937& rng, double edge_prob) {
    std::bernoulli_distribution coin(edge_prob);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

Graph random_reduced_graph(int n, std::mt19937& rng) {
    while (true) {
        Graph g = random_graph(n, rng);
        if (is_reduced(g)) return g;
    }
}

Graph random_connected_graph_with_reduced_complement(int n, std::mt19937& rng) {
    while (true) {
        Graph g = random_graph(n, rng);
        if (is_connected(g) && is_reduced(complement(g))) return g;
    }
}

}  // namespace corpus
}  // namespace twofold
