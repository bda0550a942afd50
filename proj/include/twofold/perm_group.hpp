#pragma once

#include <vector>

#include "twofold/permutation.hpp"

namespace twofold {

inline constexpr long long kDefaultClosureCap = 1'000'000;

// Small permutation group with every element enumerated. Elements are kept
// sorted lexicographically and deduplicated.
class PermGroup {
public:
    PermGroup() = default;
    PermGroup(int degree, std::vector<Permutation> elements, std::vector<Permutation> generators);

    int degree() const { return degree_; }
    long long order() const { return (long long)elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const std::vector<Permutation>& generators() const { return generators_; }

    bool contains(const Permutation& p) const;
    // Index into elements(), or -1.
    int index_of(const Permutation& p) const;

    // Orbit partition on 0..degree-1; cells sorted, ordered by smallest member.
    std::vector<std::vector<int>> orbits() const;

private:
    int degree_ = 0;
    std::vector<Permutation> elements_;
    std::vector<Permutation> generators_;
};

// Breadth-first closure of the generating set; throws ResourceError past cap.
PermGroup closure(const std::vector<Permutation>& generators, int degree,
                  long long cap = kDefaultClosureCap);

}  // namespace twofold
