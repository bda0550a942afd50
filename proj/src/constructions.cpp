#include "twofold/constructions.hpp"

#include <algorithm>
#include <unordered_set>

#include "twofold/errors.hpp"

namespace twofold {

namespace {

// R(n0) edges in 1-based coordinates. E2 joins every path vertex 1..n0 to
// both n0+1 and n0+2; the degree facts deg(n0+1) = n0+1 and
// deg(n0+2) = n0+4 pin this range down.
std::vector<std::pair<int, int>> skeleton_edges(int n0) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n0 - 1; ++i) e.push_back({i, i + 1});
    e.push_back({2, 4});
    for (int i = 1; i <= n0; ++i) {
        e.push_back({i, n0 + 1});
        e.push_back({i, n0 + 2});
    }
    for (int i = 1; i <= 5; ++i) e.push_back({n0 + i, n0 + i + 1});
    e.push_back({n0 + 2, n0 + 4});
    e.push_back({n0 + 2, n0 + 6});
    e.push_back({n0 + 4, n0 + 6});
    return e;
}

}  // namespace

LabeledGraph skeleton_r(int n0) {
    if (n0 < 6) throw InputError("skeleton_r: n0 must be at least 6");
    LabeledGraph out{Graph(n0 + 6), {}};
    for (int v = 1; v <= n0 + 6; ++v) out.labels.push_back(std::to_string(v));
    for (auto [a, b] : skeleton_edges(n0)) out.graph.add_edge(a - 1, b - 1);
    return out;
}

LabeledGraph gamma_construction(const FiniteGroup& h, const GroupAutomorphism& sigma,
                                std::vector<int> generators) {
    int m = h.order();
    if (generators.empty() && m > 1) generators = rank(h).witness;
    if (m > 1 && (int)h.subgroup_closure(generators).size() != m)
        throw InputError("gamma_construction: X does not generate H");
    int r = (int)generators.size();
    int n0 = 1 + std::max(r, 5);

    LabeledGraph out{Graph(m * (n0 + 6)), {}};
    auto idx = [&](int elem, int coord) { return (coord - 1) * m + elem; };
    for (int coord = 1; coord <= n0 + 6; ++coord)
        for (int elem = 0; elem < m; ++elem)
            out.labels.push_back("(" + h.name(elem) + "," + std::to_string(coord) + ")");

    for (auto [a, b] : skeleton_edges(n0)) {
        if (b == n0 + 1 || a == n0 + 1) {
            int i = (b == n0 + 1) ? a : b;
            for (int h1 = 0; h1 < m; ++h1) {
                int h2 = (i <= r) ? h.mul(sigma(h1), generators[i - 1]) : sigma(h1);
                out.graph.add_edge(idx(h1, i), idx(h2, n0 + 1));
            }
        } else {
            for (int h1 = 0; h1 < m; ++h1)
                out.graph.add_edge(idx(h1, a), idx(sigma(h1), b));
        }
    }
    return out;
}

LabeledGraph gcay(const FiniteGroup& h, const GroupAutomorphism& sigma, std::vector<int> s) {
    int m = h.order();
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int v : s)
        if (v < 0 || v >= m) throw InputError("gcay: connection element out of range");

    std::vector<int> closed;
    for (int v : s) closed.push_back(h.inv(sigma(v)));
    std::sort(closed.begin(), closed.end());
    if (closed != s) throw InputError("gcay: S != sigma(S)^-1");

    std::unordered_set<int> image_alpha;
    for (int a = 0; a < m; ++a) image_alpha.insert(h.mul(h.inv(a), sigma(a)));
    for (int v : s)
        if (image_alpha.count(v))
            throw InputError("gcay: S meets Im(alpha_sigma), which would create loops");

    std::unordered_set<int> sset(s.begin(), s.end());
    LabeledGraph out{Graph(m), {}};
    for (int a = 0; a < m; ++a) out.labels.push_back(h.name(a));
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (sset.count(h.mul(h.inv(a), sigma(b)))) out.graph.add_edge(a, b);
    return out;
}

LabeledGraph achievable_construction(const FiniteGroup& h, const GroupAutomorphism& sigma,
                                     const std::vector<int>& c) {
    SemidirectZ2 sd = semidirect_z2(h, sigma);
    std::vector<int> s_all = s_set(sd);
    std::unordered_set<int> in_s(s_all.begin(), s_all.end());
    std::unordered_set<int> in_c(c.begin(), c.end());
    for (int g : c)
        if (!in_s.count(g)) throw InputError("achievable_construction: C is not inside S(H,sigma)");

    auto classes = conjugacy_classes(sd.group);
    bool has_x_class = false;
    for (const auto& cls : classes) {
        bool any = false, all = true;
        for (int g : cls) {
            if (in_c.count(g)) any = true;
            else all = false;
        }
        if (any && !all)
            throw InputError("achievable_construction: C is not a union of conjugacy classes");
        if (any && std::find(cls.begin(), cls.end(), sd.x()) != cls.end()) has_x_class = true;
    }
    if (!has_x_class)
        throw InputError("achievable_construction: C must contain the class of x");

    // S = x * (S(H,sigma) \ C), read inside H
    std::vector<int> s;
    for (int g : s_all)
        if (!in_c.count(g)) s.push_back(sd.decode(g).first);

    LabeledGraph base = gamma_construction(h, sigma);
    int m = h.order();
    int n0 = base.graph.size() / m - 6;
    LabeledGraph overlay = gcay(h, sigma, s);
    auto idx = [&](int elem) { return (n0 + 2 - 1) * m + elem; };
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (overlay.graph.adjacent(a, b)) base.graph.add_edge(idx(a), idx(b));
    return base;
}

namespace {

std::vector<std::pair<int, int>> m_edges(int k) {
    if (k < 13) throw InputError("m_graph: k must be at least 13");
    std::vector<std::pair<int, int>> e = {{1, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 5}, {4, 7},
                                          {5, 6}, {6, 8}, {7, 8}, {7, 9}, {8, 10}, {9, k}};
    for (int i = 10; i <= k - 1; ++i) e.push_back({i, i + 1});
    return e;
}

std::vector<std::pair<int, int>> m_edges_sorted(int k) {
    auto e = m_edges(k);
    for (auto& [a, b] : e)
        if (a > b) std::swap(a, b);
    std::sort(e.begin(), e.end());
    return e;
}

}  // namespace

Graph m_graph(int k) {
    Graph g(k);
    for (auto [a, b] : m_edges(k)) g.add_edge(a - 1, b - 1);
    return g;
}

Graph m0_graph(int k) {
    Graph m = m_graph(k);
    Graph m2 = square(m);
    auto edges = m_edges_sorted(k);
    int n = k + (int)edges.size();
    Graph g(n);
    // vertex layout: (i,i) at i-1 for 1 <= i <= k, then edges in sorted order
    auto edge_index = [&](int pos) { return k + pos; };
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            if (m2.adjacent(i - 1, j - 1)) g.add_edge(i - 1, j - 1);
    for (size_t p = 0; p < edges.size(); ++p) {
        auto [a, b] = edges[p];
        for (int i = 1; i <= k; ++i)
            if (i == a || i == b || m.adjacent(i - 1, a - 1) || m.adjacent(i - 1, b - 1))
                g.add_edge(i - 1, edge_index((int)p));
        for (size_t q = p + 1; q < edges.size(); ++q) {
            auto [c, d] = edges[q];
            if (a == c || a == d || b == c || b == d)
                g.add_edge(edge_index((int)p), edge_index((int)q));
        }
    }
    return g;
}

std::vector<std::string> m0_labels(int k) {
    std::vector<std::string> out;
    for (int i = 1; i <= k; ++i)
        out.push_back("(" + std::to_string(i) + "," + std::to_string(i) + ")");
    for (auto [a, b] : m_edges_sorted(k))
        out.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
    return out;
}

std::vector<uint32_t> grr_connection_set(int k) {
    if (k < 13 || k > 24) throw InputError("grr_z2k: supported range is 13..24");
    std::vector<uint32_t> s;
    for (int i = 1; i <= k; ++i) s.push_back(uint32_t(1) << (i - 1));
    for (auto [a, b] : m_edges_sorted(k))
        s.push_back((uint32_t(1) << (a - 1)) ^ (uint32_t(1) << (b - 1)));
    return s;
}

LabeledGraph grr_z2k(int k) {
    if (k > 14) throw InputError("grr_z2k: materialized graphs are capped at k = 14");
    std::vector<uint32_t> s = grr_connection_set(k);
    uint32_t n = uint32_t(1) << k;
    LabeledGraph out{Graph((int)n), {}};
    for (uint32_t v = 0; v < n; ++v) out.labels.push_back(std::to_string(v));
    for (uint32_t v = 0; v < n; ++v)
        for (uint32_t mask : s)
            if ((v ^ mask) > v) out.graph.add_edge((int)v, (int)(v ^ mask));
    return out;
}

Graph local_graph(int k) {
    std::vector<uint32_t> s = grr_connection_set(k);
    std::unordered_set<uint32_t> sset(s.begin(), s.end());
    int n = (int)s.size();
    Graph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            uint32_t target = s[a] ^ s[b];
            int ordered_pairs = 0;
            for (uint32_t s1 : s)
                if (sset.count(s1 ^ target)) ++ordered_pairs;
            if (ordered_pairs > 2) g.add_edge(a, b);
        }
    return g;
}

LabeledGraph cayley(const FiniteGroup& h, const std::vector<int>& s) {
    int m = h.order();
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v : sorted) {
        if (v < 0 || v >= m) throw InputError("cayley: connection element out of range");
        if (v == h.identity()) throw InputError("cayley: S must not contain the identity");
    }
    std::vector<int> inv;
    for (int v : sorted) inv.push_back(h.inv(v));
    std::sort(inv.begin(), inv.end());
    if (inv != sorted) throw InputError("cayley: S != S^-1");

    std::unordered_set<int> sset(sorted.begin(), sorted.end());
    LabeledGraph out{Graph(m), {}};
    for (int a = 0; a < m; ++a) out.labels.push_back(h.name(a));
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (sset.count(h.mul(h.inv(a), b))) out.graph.add_edge(a, b);
    return out;
}

}  // namespace twofold
