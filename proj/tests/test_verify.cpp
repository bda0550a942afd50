#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twofold/graph.hpp"
#include "twofold/verify.hpp"

using namespace twofold;

TEST_CASE("gamma suite at small scale") {
    auto res = verify::gamma_suite(5);
    CHECK(res.passed());
    CHECK(res.checked > 20);
}

TEST_CASE("parity suite") {
    auto res = verify::parity_suite(6);
    CHECK(res.passed());
}

TEST_CASE("square suite") {
    auto res = verify::square_suite(6);
    CHECK(res.passed());
}

TEST_CASE("balls suite") {
    auto res = verify::balls_suite(7, 10, /*seed=*/42);
    CHECK(res.passed());
    CHECK(res.checked == 12);  // C7, C9 and ten random graphs
}

TEST_CASE("identities suite") {
    auto res = verify::identities_suite(6);
    CHECK(res.passed());
    CHECK(res.checked > 30);
}

TEST_CASE("oracle suite at small scale") {
    auto res = verify::oracle_suite(5, 4, /*seed=*/7);
    CHECK(res.passed());
}

TEST_CASE("group bounds for a single group") {
    CHECK(verify::group_bounds_suite("S:4").passed());
    CHECK(verify::group_bounds_suite("Z:6", "inv").passed());
    CHECK(verify::group_bounds_suite("Z2^:3").passed());
}

TEST_CASE("replay runs a single graph through a named suite") {
    auto res = verify::replay("gamma", petersen_graph());
    CHECK(res.passed());
    CHECK(res.checked == 1);
    CHECK_THROWS(verify::replay("nonsense", petersen_graph()));
}
