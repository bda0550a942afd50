#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "twofold/errors.hpp"
#include "twofold/finite_group.hpp"
#include "twofold/perm_group.hpp"

using namespace twofold;

TEST_CASE("permutation basics") {
    Permutation p({1, 2, 0, 4, 3});  // (0 1 2)(3 4)
    CHECK(compose(p, inverse(p)) == Permutation::identity(5));
    CHECK(order(p) == 6);
    CHECK(order(Permutation::identity(4)) == 1);

    Permutation c3({1, 2, 0, 3, 4});
    CHECK(order(c3) == 3);
    CHECK(p.cycle_string() == "(0 1 2)(3 4)");
    CHECK(Permutation::identity(3).cycle_string() == "()");
    CHECK(power(p, 6) == Permutation::identity(5));
    CHECK(power(p, -1) == inverse(p));

    CHECK_THROWS_AS(Permutation({0, 0, 1}), InputError);
    CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)), InputError);
}

TEST_CASE("closure") {
    // an n-cycle generates the cyclic group
    Permutation five_cycle({1, 2, 3, 4, 0});
    CHECK(closure({five_cycle}, 5).order() == 5);

    CHECK(closure({}, 4).order() == 1);

    // transposition + 5-cycle generate S5
    PermGroup s5 = closure({Permutation::transposition(5, 0, 1), five_cycle}, 5);
    CHECK(s5.order() == 120);

    CHECK_THROWS_AS(closure({Permutation::transposition(5, 0, 1), five_cycle}, 5, 100),
                    ResourceError);

    // orbit partition of <(0 1)> on 3 points
    PermGroup g = closure({Permutation::transposition(3, 0, 1)}, 3);
    auto orbits = g.orbits();
    REQUIRE(orbits.size() == 2);
    CHECK(orbits[0] == std::vector<int>{0, 1});
    CHECK(orbits[1] == std::vector<int>{2});
}

TEST_CASE("builtin groups") {
    CHECK(cyclic_group(6).order() == 6);
    CHECK(elementary_abelian_2(3).order() == 8);
    CHECK(dihedral_group(4).order() == 8);
    CHECK(symmetric_group(4).order() == 24);
    CHECK(direct_product(cyclic_group(3), cyclic_group(3)).order() == 9);

    CHECK(group_by_name("Z:6").order() == 6);
    CHECK(group_by_name("Z2^:3").order() == 8);
    CHECK(group_by_name("D:4").order() == 8);
    CHECK(group_by_name("S:4").order() == 24);
    CHECK(group_by_name("prod:Z:3,Z:3").order() == 9);
    CHECK_THROWS_AS(group_by_name("Q:8"), InputError);

    CHECK(cyclic_group(5).is_abelian());
    CHECK_FALSE(symmetric_group(3).is_abelian());
    CHECK_FALSE(dihedral_group(3).is_abelian());

    FiniteGroup s3 = symmetric_group(3);
    for (int a = 0; a < s3.order(); ++a) {
        CHECK(s3.mul(a, s3.identity()) == a);
        CHECK(s3.mul(a, s3.inv(a)) == s3.identity());
    }
}

TEST_CASE("group json") {
    auto [z3, sigma] = group_from_json(
        R"({"order":3,"table":[[0,1,2],[1,2,0],[2,0,1]],"identity":0,"sigma":[0,2,1]})");
    CHECK(z3.order() == 3);
    CHECK(sigma == std::vector<int>{0, 2, 1});
    GroupAutomorphism inv = GroupAutomorphism::from_map(z3, sigma);
    CHECK(inv(1) == 2);

    CHECK_THROWS_AS(group_from_json("{"), InputError);
    CHECK_THROWS_AS(group_from_json(R"({"order":2,"table":[[0,1],[1,1]]})"), InputError);
}

TEST_CASE("automorphisms validate") {
    FiniteGroup z6 = cyclic_group(6);
    GroupAutomorphism inv = GroupAutomorphism::inversion(z6);
    CHECK(inv(1) == 5);
    CHECK(inv(inv(4)) == 4);

    // inversion is not a homomorphism on a nonabelian group
    CHECK_THROWS_AS(GroupAutomorphism::inversion(symmetric_group(3)), InputError);

    // conjugation by a transposition is involutory on S3
    FiniteGroup s3 = symmetric_group(3);
    int transposition = -1;
    for (int a = 0; a < s3.order(); ++a)
        if (s3.element_order(a) == 2) {
            transposition = a;
            break;
        }
    REQUIRE(transposition >= 0);
    GroupAutomorphism conj = GroupAutomorphism::conjugation(s3, transposition);
    CHECK_FALSE(conj.is_identity());

    // non-involutory conjugation is rejected: conjugate by a 3-cycle
    int three_cycle = -1;
    for (int a = 0; a < s3.order(); ++a)
        if (s3.element_order(a) == 3) three_cycle = a;
    CHECK_THROWS_AS(GroupAutomorphism::conjugation(s3, three_cycle), InputError);
}

TEST_CASE("semidirect product") {
    FiniteGroup z3 = cyclic_group(3);
    SemidirectZ2 sd = semidirect_z2(z3, GroupAutomorphism::inversion(z3));
    CHECK(sd.group.order() == 6);
    // (e,1)^2 = identity
    CHECK(sd.group.mul(sd.x(), sd.x()) == sd.group.identity());
    // conjugation by (e,1) acts as sigma on (h,0)
    for (int h = 0; h < 3; ++h) {
        int conj = sd.group.mul(sd.group.mul(sd.group.inv(sd.x()), sd.encode(h, 0)), sd.x());
        CHECK(conj == sd.encode((3 - h) % 3, 0));
    }
    // Z3 x| Z2 with inversion is S3: nonabelian of order 6
    CHECK_FALSE(sd.group.is_abelian());

    SemidirectZ2 sd_id = semidirect_z2(z3, GroupAutomorphism::identity(z3));
    CHECK(sd_id.group.is_abelian());
}

TEST_CASE("conjugacy classes") {
    // abelian: all singletons
    for (const auto& cls : conjugacy_classes(cyclic_group(6))) CHECK(cls.size() == 1);

    // S3: sizes 1, 2, 3
    auto classes = conjugacy_classes(symmetric_group(3));
    std::multiset<size_t> sizes;
    for (const auto& cls : classes) sizes.insert(cls.size());
    CHECK(sizes == std::multiset<size_t>{1, 2, 3});
    CHECK(classes[0] == std::vector<int>{0});  // identity class first

    // Z2^2 x| Z2 with sigma = id is abelian: 8 singletons
    FiniteGroup z22 = elementary_abelian_2(2);
    SemidirectZ2 sd = semidirect_z2(z22, GroupAutomorphism::identity(z22));
    CHECK(conjugacy_classes(sd.group).size() == 8);
}

TEST_CASE("rank") {
    CHECK(rank(cyclic_group(6)).rank == 1);
    CHECK(rank(cyclic_group(1)).rank == 0);

    RankResult z22 = rank(elementary_abelian_2(2));
    CHECK(z22.rank == 2);
    CHECK(z22.witness == std::vector<int>{1, 2});  // lexicographically first

    CHECK(rank(symmetric_group(3)).rank == 2);
    CHECK(rank(elementary_abelian_2(3)).rank == 3);
    CHECK_THROWS_AS(rank(group_by_name("Z:300")), ResourceError);
}

TEST_CASE("s_set") {
    FiniteGroup z3 = cyclic_group(3);
    // inversion: every (h,1) squares to e
    CHECK(s_set(semidirect_z2(z3, GroupAutomorphism::inversion(z3))).size() == 3);
    // identity: only (0,1)
    SemidirectZ2 sd_id = semidirect_z2(z3, GroupAutomorphism::identity(z3));
    auto s = s_set(sd_id);
    REQUIRE(s.size() == 1);
    CHECK(s[0] == sd_id.x());

    // Z2^k with id: all 2^k elements qualify
    FiniteGroup z23 = elementary_abelian_2(3);
    CHECK(s_set(semidirect_z2(z23, GroupAutomorphism::identity(z23))).size() == 8);
}

TEST_CASE("count_tf_classes") {
    FiniteGroup z3 = cyclic_group(3);
    CHECK(count_tf_classes(z3, GroupAutomorphism::inversion(z3)) == 1);
    CHECK(count_tf_classes(z3, GroupAutomorphism::identity(z3)) == 1);

    for (int k = 1; k <= 4; ++k) {
        FiniteGroup g = elementary_abelian_2(k);
        CHECK(count_tf_classes(g, GroupAutomorphism::identity(g)) == (1 << k));
    }
}

TEST_CASE("sylow bound report") {
    FiniteGroup s3 = symmetric_group(3);
    SylowBoundReport rep = sylow2_invariant_bound_check(s3, GroupAutomorphism::identity(s3));
    CHECK(rep.bound_2k == 2);
    CHECK(rep.sylow.size() == 2);
    CHECK(rep.holds);

    FiniteGroup z4 = cyclic_group(4);
    SylowBoundReport rep4 = sylow2_invariant_bound_check(z4, GroupAutomorphism::identity(z4));
    CHECK(rep4.bound_2k == 4);
    CHECK(rep4.sylow.size() == 4);
    CHECK(rep4.holds);

    FiniteGroup z3 = cyclic_group(3);
    SylowBoundReport rep3 = sylow2_invariant_bound_check(z3, GroupAutomorphism::inversion(z3));
    CHECK(rep3.bound_2k == 1);
    CHECK(rep3.count_H <= 1);
    CHECK(rep3.holds);
}

TEST_CASE("reduce_to_2power_rep") {
    FiniteGroup z6 = cyclic_group(6);
    SemidirectZ2 sd = semidirect_z2(z6, GroupAutomorphism::inversion(z6));
    // element 1 has order 6 = 2 * 3; representative should be 1^3 = 3 of order 2
    int s = sd.encode(1, 1);
    REQUIRE(sd.group.mul(s, s) == sd.group.identity());
    CHECK(reduce_to_2power_rep(sd, s) == sd.encode(3, 1));
    // identity part stays
    CHECK(reduce_to_2power_rep(sd, sd.x()) == sd.x());
    // order-4 part stays (already a 2-power)
    FiniteGroup z4 = cyclic_group(4);
    SemidirectZ2 sd4 = semidirect_z2(z4, GroupAutomorphism::inversion(z4));
    CHECK(reduce_to_2power_rep(sd4, sd4.encode(1, 1)) == sd4.encode(1, 1));

    // the representative stays in the same conjugacy class
    auto classes = conjugacy_classes(sd.group);
    auto class_of = [&](int g) {
        for (size_t i = 0; i < classes.size(); ++i)
            if (std::find(classes[i].begin(), classes[i].end(), g) != classes[i].end())
                return (int)i;
        return -1;
    };
    for (int el : s_set(sd)) CHECK(class_of(el) == class_of(reduce_to_2power_rep(sd, el)));
}

TEST_CASE("finite group from permutations") {
    PermGroup s3 = closure({Permutation::transposition(3, 0, 1), Permutation({1, 2, 0})}, 3);
    FiniteGroup abstract = finite_group_from_permutations(s3);
    CHECK(abstract.order() == 6);
    CHECK_FALSE(abstract.is_abelian());
}
