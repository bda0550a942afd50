#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "twofold/corpus.hpp"
#include "twofold/errors.hpp"
#include "twofold/graph.hpp"
#include "twofold/oracle.hpp"
#include "twofold/tf_iso.hpp"

using namespace twofold;

TEST_CASE("matrix action basics") {
    Graph c5 = cycle_graph(5);
    auto id_result = permutation_matrix_action(c5, Permutation::identity(5));
    REQUIRE(std::holds_alternative<Graph>(id_result));
    CHECK(std::get<Graph>(id_result) == c5);

    // the reflection (1 4)(2 3) is an antimorphism of C5 but sends 2 to its
    // neighbor 3: rejected with the loop condition
    Permutation reflection({0, 4, 3, 2, 1});
    auto refl = permutation_matrix_action(c5, reflection);
    REQUIRE(std::holds_alternative<ActionRejection>(refl));
    CHECK(std::get<ActionRejection>(refl).describe().rfind("loop-at-", 0) == 0);

    // with loops allowed the same reflection yields a loop-decorated witness
    auto refl_loops = permutation_matrix_action(c5, reflection, true);
    REQUIRE(std::holds_alternative<Graph>(refl_loops));
    CHECK(std::get<Graph>(refl_loops).has_loop());

    // a rotation is not an antimorphism (gamma fixes it, but it has order 5)
    auto rot = permutation_matrix_action(c5, Permutation({1, 2, 3, 4, 0}));
    REQUIRE(std::holds_alternative<ActionRejection>(rot));
    CHECK(std::get<ActionRejection>(rot).describe() == "not-antimorphism");

    CHECK_THROWS_AS(permutation_matrix_action(cycle_graph(4), Permutation::identity(4)),
                    PreconditionError);
}

TEST_CASE("matrix convention is pinned") {
    // (A m_psi)[i][j] = A[i][psi(j)], checked against m_{psi^-1} A = A m_psi
    // for an antimorphism of an unstable graph found by the oracle
    for (const Graph& g : corpus::all_graphs_up_to(6)) {
        if (!is_reduced(g) || !is_connected(g) || is_bipartite(g)) continue;
        auto brute = oracle::brute_aut_pi(g);
        for (size_t i = 0; i < brute.elements.size(); ++i) {
            if (!(brute.gamma[i] == inverse(brute.elements[i]))) continue;
            const Permutation& psi = brute.elements[i];
            auto act = permutation_matrix_action(g, psi, /*allow_loops=*/true);
            REQUIRE(std::holds_alternative<Graph>(act));
            const Graph& b = std::get<Graph>(act);
            for (int r = 0; r < g.size(); ++r)
                for (int c = 0; c < g.size(); ++c) {
                    CHECK(b.adjacent(r, c) == g.adjacent(r, psi(c)));   // A m_psi
                    CHECK(b.adjacent(r, c) == g.adjacent(psi(r), c));   // m_{psi^-1} A
                }
        }
    }
}

TEST_CASE("tf_isomorphic") {
    Graph c5 = cycle_graph(5);
    auto self = tf_isomorphic(c5, c5);
    REQUIRE(self.has_value());

    CHECK_FALSE(tf_isomorphic(c5, cycle_graph(6)).has_value());

    // witness graphs produced by the action are TF-isomorphic to the base
    for (const Graph& g : corpus::all_graphs(6)) {
        if (!is_reduced(g) || !is_connected(g) || is_bipartite(g)) continue;
        TfCensus cen = census(g);
        for (const auto& cls : cen.classes) {
            auto wit = tf_isomorphic(g, cls.witness);
            REQUIRE(wit.has_value());
            // the witness carries every neighborhood of g onto one of the
            // witness graph's neighborhoods
            for (int v = 0; v < g.size(); ++v) {
                Bitset moved(g.size());
                const Bitset& nb = g.row(v);
                for (int w = nb.next(0); w >= 0; w = nb.next(w + 1)) moved.set(wit->p(w));
                bool found = false;
                for (int w = 0; w < g.size() && !found; ++w)
                    found = moved == cls.witness.row(w);
                CHECK(found);
            }
        }
    }
}

TEST_CASE("tf-isomorphic pairs have isomorphic double covers") {
    for (const Graph& g : corpus::all_graphs(5)) {
        if (!is_reduced(g) || !is_connected(g) || is_bipartite(g)) continue;
        TfCensus cen = census(g);
        for (const auto& cls : cen.classes) {
            CHECK(tf_isomorphic(g, cls.witness).has_value());
            CHECK(oracle::brute_iso(double_cover(g), double_cover(cls.witness)));
        }
    }
    // distinct double covers: C5 vs the 5-vertex path
    CHECK_FALSE(tf_isomorphic(cycle_graph(5), path_graph(5)).has_value());
    CHECK_FALSE(oracle::brute_iso(double_cover(cycle_graph(5)), double_cover(path_graph(5))));
}

TEST_CASE("census on stable graphs") {
    // K3: Ant0 = {id}, a single class
    TfCensus k3 = census(complete_graph(3));
    CHECK(k3.class_count() == 1);
    CHECK(k3.psis.size() == 1);
    CHECK(k3.psis[0].is_identity());

    // Petersen is stable yet has TF-mates: Ant0 consists of the identity
    // plus the ten transpositions of S5, which form one switching class of
    // size 10, so the census splits 11 = 1 + 10
    TfCensus pet = census(petersen_graph());
    CHECK(pet.ant0_size == 11);
    CHECK(pet.class_count() == 2);
    CHECK(pet.psis[0].is_identity());
    CHECK(pet.classes[0].inst == 1);
    CHECK(pet.classes[0].witness_aut_order == 120);
    CHECK(pet.classes[1].inst == 10);
    CHECK(pet.classes[1].witness_aut_order == 12);

    // cross-check the split against the brute-force census
    oracle::BruteCensus brute = oracle::brute_census(petersen_graph());
    CHECK(brute.pool.size() == 11);
    CHECK(brute.classes.size() == 2);

    CHECK_THROWS_AS(census(cycle_graph(6)), PreconditionError);
}

TEST_CASE("census matches brute census everywhere small") {
    for (const Graph& g : corpus::all_graphs_up_to(6)) {
        if (!is_reduced(g) || !is_connected(g) || is_bipartite(g)) continue;
        TfCensus cen = census(g);
        oracle::BruteCensus brute = oracle::brute_census(g);
        REQUIRE(cen.psis.size() == brute.pool.size());
        CHECK(std::equal(cen.psis.begin(), cen.psis.end(), brute.pool.begin()));
        std::set<std::set<int>> fast_classes, brute_classes;
        for (const auto& cls : cen.classes)
            fast_classes.insert(std::set<int>(cls.members.begin(), cls.members.end()));
        for (const auto& cls : brute.classes)
            brute_classes.insert(std::set<int>(cls.begin(), cls.end()));
        CHECK(fast_classes == brute_classes);
        for (const auto& cls : cen.classes) {
            CHECK((long long)cls.members.size() == cls.inst);
            CHECK(oracle::brute_aut(cls.witness).order() == cls.witness_aut_order);
        }
    }
}

TEST_CASE("loop-variant census") {
    for (const Graph& g : corpus::all_graphs_up_to(5)) {
        if (!is_reduced(g) || !is_connected(g) || is_bipartite(g)) continue;
        TfCensus with_loops = census(g, /*allow_loops=*/true);
        oracle::BruteCensus brute = oracle::brute_census(g, /*allow_loops=*/true);
        REQUIRE(with_loops.psis.size() == brute.pool.size());
        std::set<std::set<int>> fast_classes, brute_classes;
        for (const auto& cls : with_loops.classes)
            fast_classes.insert(std::set<int>(cls.members.begin(), cls.members.end()));
        for (const auto& cls : brute.classes)
            brute_classes.insert(std::set<int>(cls.begin(), cls.end()));
        CHECK(fast_classes == brute_classes);
    }
}

TEST_CASE("identities hold exactly") {
    for (const Graph& g : corpus::all_graphs_up_to(6)) {
        if (!is_reduced(g) || !is_connected(g) || is_bipartite(g)) continue;
        IdentityReport rep = verify_identities(g);
        CHECK(rep.all_ok());
        CHECK(rep.sum_inst_loopless == rep.ant0_size);
        CHECK(rep.sum_inst_loops == rep.ant_size);
    }
}

TEST_CASE("strongly switching elements") {
    // stable rigid base: only the identity survives, x itself is the image
    Graph g = petersen_graph();
    TwoFoldStructure tfs = aut_pi(g);
    SwitchingElements sw = strongly_switching_elements(tfs);
    CHECK(sw.elements.size() == tfs.ant0().size());

    // each strongly switching element is order 2 and part-swapping, and the
    // set is x * Ant0 inside the abstract semidirect product
    std::vector<int> s = s_set(sw.semidirect);
    for (int el : sw.elements) {
        CHECK(sw.semidirect.group.mul(el, el) == sw.semidirect.group.identity());
        CHECK(sw.semidirect.decode(el).second == 1);
        CHECK(std::binary_search(s.begin(), s.end(), el));
    }
}

TEST_CASE("switching classes coincide with semidirect conjugacy") {
    for (const Graph& g : corpus::all_graphs_up_to(6)) {
        if (!is_reduced(g) || !is_connected(g) || is_bipartite(g)) continue;
        TwoFoldStructure tfs = aut_pi(g);
        SwitchingElements sw = strongly_switching_elements(tfs);
        auto classes = switching_conjugacy_classes(tfs);

        // the partition covers exactly the strongly switching set
        std::vector<int> covered;
        for (const auto& cls : classes) covered.insert(covered.end(), cls.begin(), cls.end());
        std::sort(covered.begin(), covered.end());
        CHECK(covered == sw.elements);

        // and each part is a full conjugacy class of the semidirect group
        auto conj = conjugacy_classes(sw.semidirect.group);
        std::set<std::vector<int>> conj_set(conj.begin(), conj.end());
        for (const auto& cls : classes) CHECK(conj_set.count(cls) == 1);

        // every switching class has a representative whose Aut^pi-part has
        // 2-power order, and reducing any member stays inside its class
        for (const auto& cls : classes)
            for (int el : cls) {
                int rep = reduce_to_2power_rep(sw.semidirect, el);
                CHECK(std::binary_search(cls.begin(), cls.end(), rep));
                long long ord = sw.semidirect.group.element_order(
                    sw.semidirect.encode(sw.semidirect.decode(rep).first, 0));
                CHECK((ord & (ord - 1)) == 0);
            }
    }
}

TEST_CASE("witness graphs share Aut^pi and transport gamma by conjugation") {
    for (const Graph& g : corpus::all_graphs(6)) {
        if (!is_reduced(g) || !is_connected(g) || is_bipartite(g)) continue;
        TwoFoldStructure base = aut_pi(g);
        TfCensus cen = census(base);
        for (const auto& cls : cen.classes) {
            const Permutation& psi = cen.psis[cls.rep];
            TwoFoldStructure wit = aut_pi(cls.witness);  // independent search
            REQUIRE(wit.aut_pi_order() == base.aut_pi_order());
            for (int i = 0; i < base.aut_pi_order(); ++i) {
                const Permutation& p = base.elements()[i];
                CHECK(wit.index_of(p) >= 0);
                // gamma of the witness = psi^-1 gamma_base(.) psi
                Permutation expected =
                    compose(inverse(psi), compose(base.elements()[base.gamma_idx(i)], psi));
                CHECK(wit.gamma_of(p) == expected);
            }
            CHECK(wit.aut_order() == cls.witness_aut_order);
            CHECK(wit.inst() == cls.inst);
        }
    }
}

TEST_CASE("identity class is Im(alpha) within Ant0") {
    for (const Graph& g : corpus::all_graphs_up_to(6)) {
        if (!is_reduced(g) || !is_connected(g) || is_bipartite(g)) continue;
        TwoFoldStructure tfs = aut_pi(g);
        TfCensus cen = census(tfs);
        // class of the identity witness = image of alpha, as permutations
        std::set<Permutation> id_class;
        for (int m : cen.classes[0].members) id_class.insert(cen.psis[m]);
        std::set<Permutation> im;
        for (int i : tfs.im_alpha()) im.insert(tfs.elements()[i]);
        CHECK(id_class == im);
    }
}

TEST_CASE("empty orbit check") {
    Graph c5 = cycle_graph(5);
    CHECK(empty_orbit_check(c5, Permutation::identity(5)));
    // rotation orbits cover the whole cycle: edges inside
    CHECK_FALSE(empty_orbit_check(c5, Permutation({1, 2, 3, 4, 0})));

    // census witnesses always pass
    for (const Graph& g : corpus::all_graphs(6)) {
        if (!is_reduced(g) || !is_connected(g) || is_bipartite(g)) continue;
        TfCensus cen = census(g);
        for (const auto& psi : cen.psis) CHECK(empty_orbit_check(g, psi));
    }
}

TEST_CASE("fractions") {
    CHECK(make_fraction(2, 4) == make_fraction(1, 2));
    CHECK(add(make_fraction(1, 3), make_fraction(1, 6)) == make_fraction(1, 2));
    CHECK(add(make_fraction(1, 2), make_fraction(1, 2)) == make_fraction(1, 1));
}
