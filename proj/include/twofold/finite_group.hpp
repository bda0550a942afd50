#pragma once

#include <string>
#include <utility>
#include <vector>

#include "twofold/perm_group.hpp"

namespace twofold {

// Abstract finite group given by an explicit Cayley table. Identity and
// inverse laws are always checked on construction; associativity is checked
// fully up to order 128 and on random triples above that.
class FiniteGroup {
public:
    static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                  std::vector<std::string> names = {});

    int order() const { return m_; }
    int identity() const { return e_; }
    int mul(int a, int b) const { return table_[a * m_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int pow(int a, long long k) const;
    long long element_order(int a) const;
    bool is_abelian() const;
    const std::string& name(int a) const { return names_[a]; }

    // Sorted element indices of <gens>; linear in the subgroup size.
    std::vector<int> subgroup_closure(const std::vector<int>& gens) const;
    // Cayley table of the subgroup spanned by `elements` (must be closed),
    // with the index map back into this group.
    std::pair<FiniteGroup, std::vector<int>> subgroup(const std::vector<int>& elements) const;

private:
    FiniteGroup() = default;
    int m_ = 0;
    int e_ = 0;
    std::vector<int> table_;  // row-major m x m
    std::vector<int> inv_;
    std::vector<std::string> names_;
};

FiniteGroup cyclic_group(int n);
FiniteGroup elementary_abelian_2(int k);  // Z2^k
FiniteGroup dihedral_group(int n);        // order 2n, n >= 1
FiniteGroup symmetric_group(int n);       // n <= 6
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Built-in group names: "Z:6", "Z2^:3", "D:4", "S:4", "prod:Z:3,Z:3".
FiniteGroup group_by_name(const std::string& spec);

// Involutory automorphism of a specific group. The constructors validate
// bijectivity, the homomorphism law and sigma^2 = id.
class GroupAutomorphism {
public:
    static GroupAutomorphism identity(const FiniteGroup& g);
    static GroupAutomorphism inversion(const FiniteGroup& g);
    static GroupAutomorphism conjugation(const FiniteGroup& g, int by);
    static GroupAutomorphism from_map(const FiniteGroup& g, std::vector<int> map);
    // "id" | "inv" | "conj:<element>" | explicit "map:0,2,1,..."
    static GroupAutomorphism by_name(const FiniteGroup& g, const std::string& spec);

    int operator()(int a) const { return map_[a]; }
    const std::vector<int>& map() const { return map_; }
    bool is_identity() const;
    std::vector<int> fixed_points() const;

private:
    explicit GroupAutomorphism(std::vector<int> map) : map_(std::move(map)) {}
    std::vector<int> map_;
};

// H x {0,1} with (h1,b1)(h2,b2) = (h1 sigma^b1(h2), b1 xor b2); element
// (h,b) is encoded as h + b*|H|.
struct SemidirectZ2 {
    FiniteGroup group;
    int base_order = 0;

    int x() const { return base_order; }  // the element (e,1)
    int encode(int h, int b) const { return h + b * base_order; }
    std::pair<int, int> decode(int g) const { return {g % base_order, g / base_order}; }
};

SemidirectZ2 semidirect_z2(const FiniteGroup& h, const GroupAutomorphism& sigma);

// Classes sorted internally, ordered by smallest member; identity's class
// comes first and is a singleton.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

struct RankResult {
    int rank = 0;
    std::vector<int> witness;  // lexicographically first minimal generating set
};
RankResult rank(const FiniteGroup& g, int cap = 256);

// S(H,sigma): elements (h,1) squaring to the identity, i.e. h sigma(h) = e.
// Indices refer to the semidirect product; (e,1) is always a member.
std::vector<int> s_set(const SemidirectZ2& sd);

// Number of semidirect conjugacy classes meeting S(H,sigma).
int count_tf_classes(const FiniteGroup& h, const GroupAutomorphism& sigma);

struct SylowBoundReport {
    long long count_H = 0;
    long long count_P2 = 0;
    long long bound_2k = 0;
    bool holds = false;
    std::vector<int> sylow;  // element indices of the sigma-invariant P2
};

// Finds a sigma-invariant Sylow 2-subgroup by breadth-first closure search
// over 2-power-order elements and compares the class counts.
SylowBoundReport sylow2_invariant_bound_check(const FiniteGroup& h,
                                              const GroupAutomorphism& sigma);

// For s = (h,1) in S(H,sigma) returns (h^(2l+1), 1) where
// ord(h) = 2^k (2l+1); the result is conjugate to s and its H-part has
// 2-power order.
int reduce_to_2power_rep(const SemidirectZ2& sd, int s);

// Cayley table of a permutation group; element i of the result corresponds
// to group.elements()[i].
FiniteGroup finite_group_from_permutations(const PermGroup& group, int cap = 4096);

// Group JSON: { "order": m, "table": [[...]], "identity": e, "sigma": [...] }.
std::pair<FiniteGroup, std::vector<int>> group_from_json(const std::string& json_text);

}  // namespace twofold
