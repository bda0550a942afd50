#include "twofold/permutation.hpp"

#include <numeric>
#include <sstream>

#include "twofold/errors.hpp"

namespace twofold {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || v >= (int)img_.size() || seen[v])
            throw InputError("permutation images are not a bijection on 0..n-1");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int a, int b) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::swap(img[a], img[b]);
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (int v = 0; v < degree(); ++v)
        if (img_[v] != v) return false;
    return true;
}

uint64_t Permutation::hash() const {
    uint64_t h = 0xcbf29ce484222325ull;
    for (int v : img_) {
        h ^= (uint64_t)v;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::vector<std::vector<int>> Permutation::cycles_with_fixed() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img_.size(), false);
    for (int v = 0; v < degree(); ++v) {
        if (seen[v]) continue;
        std::vector<int> cyc;
        int w = v;
        do {
            seen[w] = true;
            cyc.push_back(w);
            w = img_[w];
        } while (w != v);
        out.push_back(std::move(cyc));
    }
    return out;
}

std::string Permutation::cycle_string() const {
    std::ostringstream os;
    bool moved = false;
    for (const auto& cyc : cycles_with_fixed()) {
        if (cyc.size() < 2) continue;
        moved = true;
        os << '(';
        for (size_t i = 0; i < cyc.size(); ++i) {
            if (i) os << ' ';
            os << cyc[i];
        }
        os << ')';
    }
    if (!moved) return "()";
    return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw InputError("compose: degree mismatch");
    std::vector<int> img(p.degree());
    for (int v = 0; v < p.degree(); ++v) img[v] = p(q(v));
    return Permutation(std::move(img));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> img(p.degree());
    for (int v = 0; v < p.degree(); ++v) img[p(v)] = v;
    return Permutation(std::move(img));
}

long long order(const Permutation& p) {
    long long ord = 1;
    for (const auto& cyc : p.cycles_with_fixed())
        ord = std::lcm(ord, (long long)cyc.size());
    return ord;
}

Permutation power(const Permutation& p, long long k) {
    long long m = order(p);
    k %= m;
    if (k < 0) k += m;
    Permutation acc = Permutation::identity(p.degree());
    Permutation base = p;
    while (k) {
        if (k & 1) acc = compose(acc, base);
        base = compose(base, base);
        k >>= 1;
    }
    return acc;
}

}  // namespace twofold
