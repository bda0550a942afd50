#include "twofold/graph_io.hpp"

#include <sstream>

#include "twofold/errors.hpp"

namespace twofold {

namespace {

constexpr int kMaxGraph6Size = 258047;

void check_printable(unsigned char c, size_t offset) {
    if (c < 63 || c > 126)
        throw InputError("graph6: invalid byte at offset " + std::to_string(offset));
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    if (g.has_loop()) throw PreconditionError("graph6: loops are not representable");
    int n = g.size();
    if (n > kMaxGraph6Size) throw InputError("graph6: size beyond the supported cap");
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else {
        out.push_back(126);
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    }
    int group = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(char(group + 63));
                group = 0;
                nbits = 0;
            }
        }
    if (nbits) out.push_back(char((group << (6 - nbits)) + 63));
    return out;
}

Graph graph6_decode(const std::string& text) {
    std::string s = text;
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw InputError("graph6: empty input at offset 0");

    size_t pos = 0;
    long long n;
    check_printable(s[pos], pos);
    if (s[pos] != 126) {
        n = s[pos] - 63;
        ++pos;
    } else {
        ++pos;
        if (pos < s.size() && (unsigned char)s[pos] == 126)
            throw InputError("graph6: 8-byte sizes beyond the supported cap at offset " +
                             std::to_string(pos));
        n = 0;
        for (int k = 0; k < 3; ++k, ++pos) {
            if (pos >= s.size())
                throw InputError("graph6: truncated size header at offset " + std::to_string(pos));
            check_printable(s[pos], pos);
            n = (n << 6) | (s[pos] - 63);
        }
    }
    if (n < 1 || n > kMaxGraph6Size)
        throw InputError("graph6: vertex count out of range at offset 0");

    Graph g((int)n);
    long long need = n * (n - 1) / 2;
    long long bit = 0;
    int i = 0, j = 1;  // current upper-triangle cell, column-major
    for (; bit < need; ++pos) {
        if (pos >= s.size())
            throw InputError("graph6: truncated bit vector at offset " + std::to_string(pos));
        check_printable(s[pos], pos);
        int group = s[pos] - 63;
        for (int k = 5; k >= 0 && bit < need; --k, ++bit) {
            if ((group >> k) & 1) g.add_edge(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    if (pos != s.size())
        throw InputError("graph6: trailing bytes at offset " + std::to_string(pos));
    return g;
}

std::string dot_export(const Graph& g) {
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.size(); ++v) os << "  " << v << ";\n";
    for (int v = 0; v < g.size(); ++v)
        for (int w = v; w < g.size(); ++w)
            if (g.adjacent(v, w)) os << "  " << v << " -- " << w << ";\n";
    os << "}\n";
    return os.str();
}

std::string adjacency_text_encode(const Graph& g) {
    std::ostringstream os;
    os << g.size() << "\n";
    for (int v = 0; v < g.size(); ++v)
        for (int w = v; w < g.size(); ++w)
            if (g.adjacent(v, w)) os << v << " " << w << "\n";
    return os.str();
}

Graph adjacency_text_decode(const std::string& text) {
    std::istringstream scan(text);
    int n, u, v;
    if (!(scan >> n) || n < 1) throw InputError("adjacency text: bad vertex count");
    bool loops = false;
    while (scan >> u >> v)
        if (u == v) loops = true;

    Graph g(n, loops);
    std::istringstream is(text);
    is >> n;
    while (is >> u >> v) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("adjacency text: vertex out of range");
        g.add_edge(u, v);
    }
    return g;
}

}  // namespace twofold
