#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace twofold {

// Permutation of {0..n-1}; img[v] is the image of v.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    // Single transposition (a b) on degree n.
    static Permutation transposition(int n, int a, int b);

    int degree() const { return (int)img_.size(); }
    int operator()(int v) const { return img_[v]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return img_ != o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    uint64_t hash() const;

    // Orbits, each sorted, ordered by smallest member.
    std::vector<std::vector<int>> cycles_with_fixed() const;
    // Cycle notation with fixed points omitted; identity renders as "()".
    std::string cycle_string() const;

private:
    std::vector<int> img_;
};

// Function composition: compose(p, q)(v) = p(q(v)).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
// Smallest k >= 1 with p^k = id.
long long order(const Permutation& p);
Permutation power(const Permutation& p, long long k);

struct PermutationHash {
    size_t operator()(const Permutation& p) const { return p.hash(); }
};

}  // namespace twofold
