#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "twofold/constructions.hpp"
#include "twofold/double_cover.hpp"
#include "twofold/errors.hpp"
#include "twofold/graph_io.hpp"
#include "twofold/oracle.hpp"
#include "twofold/refinement.hpp"
#include "twofold/tf_iso.hpp"

using namespace twofold;

namespace {

// left-translation permutation on the (i-1)*|H| + h vertex layout
Permutation translation(const FiniteGroup& h, int by, int cells) {
    std::vector<int> img(h.order() * cells);
    for (int c = 0; c < cells; ++c)
        for (int e = 0; e < h.order(); ++e) img[c * h.order() + e] = c * h.order() + h.mul(by, e);
    return Permutation(std::move(img));
}

}  // namespace

TEST_CASE("skeleton degrees and rigidity") {
    LabeledGraph r6 = skeleton_r(6);
    CHECK(r6.graph.size() == 12);
    // paper coordinates n0+1 and n0+2 live at indices n0 and n0+1
    CHECK(r6.graph.degree(6) == 7);    // deg(n0+1) = n0+1
    CHECK(r6.graph.degree(7) == 10);   // deg(n0+2) = n0+4
    CHECK(r6.labels[6] == "7");

    LabeledGraph r8 = skeleton_r(8);
    CHECK(r8.graph.degree(0) == 3);        // vertex 1
    CHECK(r8.graph.degree(7) == 3);        // vertex n0
    CHECK(r8.graph.degree(13) == 3);       // vertex n0+6

    for (int n0 = 6; n0 <= 12; ++n0) {
        Refinement ref = ne_refinement(skeleton_r(n0).graph);
        CHECK(ref.partition.discrete());
    }

    // the skeleton is rigid, reduced, connected, nonbipartite
    CHECK(automorphism_group(r6.graph).order() == 1);
    CHECK(is_reduced(r6.graph));
    CHECK(is_connected(r6.graph));
    CHECK_FALSE(is_bipartite(r6.graph));

    CHECK_THROWS_AS(skeleton_r(5), InputError);
}

TEST_CASE("gamma construction for Z3 with inversion") {
    FiniteGroup z3 = cyclic_group(3);
    GroupAutomorphism inv = GroupAutomorphism::inversion(z3);
    LabeledGraph built = gamma_construction(z3, inv);
    const Graph& g = built.graph;

    CHECK(g.size() == 36);  // |H| * (7 + max(rank,5)) = 3 * 12
    CHECK(is_reduced(g));
    CHECK(is_connected(g));
    CHECK_FALSE(is_bipartite(g));

    TwoFoldStructure tfs = aut_pi(g);
    CHECK(tfs.aut_pi_order() == 3);
    CHECK(tfs.aut_order() == 1);
    CHECK(tfs.inst() == 3);

    // Aut^pi is exactly the left-translation copy of H, with gamma = sigma
    for (int h = 0; h < 3; ++h) {
        Permutation t = translation(z3, h, 12);
        REQUIRE(tfs.index_of(t) >= 0);
        CHECK(tfs.gamma_of(t) == translation(z3, inv(h), 12));
    }

    // orbit cells are the H-fibers and they are cocliques
    CHECK(tfs.orbits().size() == 12);
    for (const auto& orbit : tfs.orbits()) {
        CHECK(orbit.size() == 3);
        CHECK(orbit[0] % 3 == 0);
        CHECK(orbit[2] - orbit[0] == 2);
        for (int a : orbit)
            for (int b : orbit) CHECK_FALSE(g.adjacent(a, b));
    }

    // labels carry the (element, coordinate) pairs
    CHECK(built.labels[0] == "(0,1)");
    CHECK(built.labels[35] == "(2,12)");
}

TEST_CASE("gamma construction for the trivial group") {
    FiniteGroup trivial = cyclic_group(1);
    LabeledGraph built = gamma_construction(trivial, GroupAutomorphism::identity(trivial));
    CHECK(built.graph.size() == 12);
    CHECK(aut_pi(built.graph).aut_pi_order() == 1);
}

TEST_CASE("gamma construction for Z2^2 with identity") {
    FiniteGroup z22 = elementary_abelian_2(2);
    LabeledGraph built = gamma_construction(z22, GroupAutomorphism::identity(z22));
    CHECK(built.graph.size() == 48);

    TwoFoldStructure tfs = aut_pi(built.graph);
    CHECK(tfs.aut_pi_order() == 4);
    CHECK(tfs.aut_order() == 4);  // sigma = id makes gamma trivial: stable
    CHECK(is_stable(built.graph).kind == StabilityKind::kStable);

    // translation embedding is a group isomorphism onto Aut^pi
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            Permutation lhs = compose(translation(z22, a, 12), translation(z22, b, 12));
            CHECK(lhs == translation(z22, z22.mul(a, b), 12));
        }
        CHECK(tfs.index_of(translation(z22, a, 12)) >= 0);
    }
}

TEST_CASE("gamma construction with an explicit generating set") {
    FiniteGroup z6 = cyclic_group(6);
    GroupAutomorphism inv = GroupAutomorphism::inversion(z6);
    // a non-minimal X is allowed as long as it generates
    LabeledGraph built = gamma_construction(z6, inv, {1, 2});
    CHECK(built.graph.size() == 72);  // n0 = 1 + max(|X|, 5) = 6
    TwoFoldStructure tfs = aut_pi(built.graph);
    CHECK(tfs.aut_pi_order() == 6);
    CHECK(tfs.aut_order() == 2);  // Fix(inversion on Z6) = {0, 3}

    CHECK_THROWS_AS(gamma_construction(z6, inv, {2}), InputError);  // <2> != Z6
}

TEST_CASE("gamma construction at larger orders") {
    // |Aut| always matches |Fix(sigma)| under the translation isomorphism
    struct Case {
        FiniteGroup group;
        GroupAutomorphism sigma;
        long long fix;
    };
    FiniteGroup s4 = symmetric_group(4);
    FiniteGroup d6 = dihedral_group(6);
    FiniteGroup z33 = group_by_name("prod:Z:3,Z:3");
    std::vector<Case> cases;
    cases.push_back({s4, GroupAutomorphism::identity(s4), 24});
    cases.push_back({d6, GroupAutomorphism::conjugation(d6, 1), 4});
    cases.push_back({z33, GroupAutomorphism::inversion(z33), 1});
    for (const auto& cs : cases) {
        LabeledGraph built = gamma_construction(cs.group, cs.sigma);
        TwoFoldStructure tfs = aut_pi(built.graph);
        CHECK(tfs.aut_pi_order() == cs.group.order());
        CHECK(tfs.aut_order() == cs.fix);
        CHECK((long long)cs.sigma.fixed_points().size() == cs.fix);
    }

    // odd-order Aut^pi: the census is a single class (here 108 vertices)
    TfCensus cen = census(gamma_construction(z33, GroupAutomorphism::inversion(z33)).graph);
    CHECK(cen.class_count() == 1);
    CHECK(cen.ant0_size == 9);
}

TEST_CASE("gcay") {
    // sigma = id collapses to the ordinary Cayley graph
    FiniteGroup z5 = cyclic_group(5);
    LabeledGraph via_gcay = gcay(z5, GroupAutomorphism::identity(z5), {1, 4});
    LabeledGraph via_cayley = cayley(z5, {1, 4});
    CHECK(via_gcay.graph == via_cayley.graph);
    CHECK(oracle::brute_iso(via_gcay.graph, cycle_graph(5)));

    // S empty: the empty graph
    CHECK(gcay(z5, GroupAutomorphism::inversion(z5), {}).graph.edge_count() == 0);

    // Z4 with inversion and S = {1,3}: h1 ~ h2 iff h1 + h2 in {1,3}
    FiniteGroup z4 = cyclic_group(4);
    LabeledGraph g4 = gcay(z4, GroupAutomorphism::inversion(z4), {1, 3});
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (a != b) CHECK(g4.graph.adjacent(a, b) == ((a + b) % 4 == 1 || (a + b) % 4 == 3));

    // odd order with sigma = inversion: Im(alpha) is all of H, so any
    // nonempty S is rejected
    FiniteGroup z3 = cyclic_group(3);
    CHECK_THROWS_AS(gcay(z3, GroupAutomorphism::inversion(z3), {1}), InputError);
    // S = sigma(S)^-1 violation
    CHECK_THROWS_AS(gcay(z4, GroupAutomorphism::identity(z4), {1}), InputError);
}

TEST_CASE("achievable construction") {
    FiniteGroup z22 = elementary_abelian_2(2);
    GroupAutomorphism id = GroupAutomorphism::identity(z22);
    SemidirectZ2 sd = semidirect_z2(z22, id);
    std::vector<int> s_all = s_set(sd);
    REQUIRE(s_all.size() == 4);  // abelian 2-group: every (h,1) is an involution

    // C = full S(H,sigma): nothing is stripped, the plain construction
    LabeledGraph full = achievable_construction(z22, id, s_all);
    CHECK(full.graph == gamma_construction(z22, id).graph);

    // C = {x} alone: a single census class
    LabeledGraph only_x = achievable_construction(z22, id, {sd.x()});
    TwoFoldStructure tfs1 = aut_pi(only_x.graph);
    CHECK(census(tfs1).class_count() == 1);

    // C = {x, x*h1}: two classes
    LabeledGraph two = achievable_construction(z22, id, {sd.x(), sd.encode(1, 1)});
    CHECK(census(aut_pi(two.graph)).class_count() == 2);

    // C missing the class of x is rejected
    CHECK_THROWS_AS(achievable_construction(z22, id, {sd.encode(1, 1)}), InputError);
    // C outside S(H,sigma) is rejected
    CHECK_THROWS_AS(achievable_construction(z22, id, {sd.encode(1, 0)}), InputError);
}

TEST_CASE("m graphs") {
    Graph m13 = m_graph(13);
    CHECK(m13.size() == 13);
    CHECK(m13.edge_count() == 15);  // k + 2
    // no 4-cycles: no vertex pair has two common neighbors
    for (int u = 0; u < 13; ++u)
        for (int v = u + 1; v < 13; ++v) {
            Bitset common = m13.row(u) & m13.row(v);
            CHECK(common.count() <= 1);
        }
    for (int v = 0; v < 13; ++v) CHECK(m13.degree(v) >= 2);

    Graph m0 = m0_graph(13);
    CHECK(m0.size() == 28);  // 2k + 2
    auto labels = m0_labels(13);
    REQUIRE(labels.size() == 28);
    std::set<std::string> deg11, deg13;
    for (int v = 0; v < 28; ++v) {
        if (m0.degree(v) == 11) deg11.insert(labels[v]);
        if (m0.degree(v) == 13) deg13.insert(labels[v]);
    }
    CHECK(deg11 == std::set<std::string>{"(5,5)", "(8,8)"});
    CHECK(deg13 == std::set<std::string>{"(4,4)", "(7,7)"});

    CHECK(automorphism_group(m0).order() == 1);

    CHECK_THROWS_AS(m_graph(12), InputError);
    CHECK_THROWS_AS(m0_graph(12), InputError);
}

TEST_CASE("grr for Z2^13") {
    auto s = grr_connection_set(13);
    CHECK(s.size() == 28);  // 2k + 2

    // the local common-neighborhood graph is M0(k) vertex for vertex
    CHECK(local_graph(13) == m0_graph(13));
    CHECK(local_graph(14) == m0_graph(14));
    CHECK(local_graph(15) == m0_graph(15));

    LabeledGraph grr = grr_z2k(13);
    CHECK(grr.graph.size() == 8192);
    for (int v : {0, 1, 4095, 8191}) CHECK(grr.graph.degree(v) == 28);

    CHECK(is_connected(grr.graph));
    CHECK_FALSE(is_bipartite(grr.graph));
    CHECK(is_reduced(grr.graph));

    // the 3-byte graph6 size header round-trips at this scale
    CHECK(graph6_decode(graph6_encode(grr.graph)) == grr.graph);

    // translations are automorphisms: spot-check the generators
    for (int bit = 0; bit < 13; ++bit) {
        uint32_t mask = uint32_t(1) << bit;
        for (uint32_t v : {0u, 77u, 8191u})
            for (uint32_t m : s) CHECK(grr.graph.adjacent((int)(v ^ mask), (int)(v ^ mask ^ m)));
    }
    CHECK_THROWS_AS(grr_z2k(12), InputError);
}

TEST_CASE("cayley") {
    FiniteGroup z5 = cyclic_group(5);
    CHECK(oracle::brute_iso(cayley(z5, {1, 4}).graph, cycle_graph(5)));

    // Cay(Z2^3, basis) is the 3-cube
    FiniteGroup z23 = elementary_abelian_2(3);
    Graph cube(8);
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b)
            if ((v ^ (1 << b)) > v) cube.add_edge(v, v ^ (1 << b));
    CHECK(oracle::brute_iso(cayley(z23, {1, 2, 4}).graph, cube));

    CHECK(cayley(z5, {}).graph.edge_count() == 0);
    CHECK_THROWS_AS(cayley(z5, {0}), InputError);   // identity in S
    CHECK_THROWS_AS(cayley(z5, {1}), InputError);   // S != S^-1
}
