#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twofold/graph.hpp"
#include "twofold/search.hpp"

namespace twofold {
namespace verify {

struct Failure {
    std::string graph6;
    std::string permutation;  // cycle notation, empty when not applicable
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    long long checked = 0;
    std::vector<Failure> failures;
    bool passed() const { return failures.empty(); }
};

// Per-graph checkers; nullopt means the graph passes. These back both the
// sweep suites and --replay.
std::optional<Failure> check_gamma(const Graph& g, const SearchLimits& limits = {});
std::optional<Failure> check_parity(const Graph& g, const SearchLimits& limits = {});
std::optional<Failure> check_square(const Graph& g, const SearchLimits& limits = {});
std::optional<Failure> check_balls(const Graph& g, const SearchLimits& limits = {});
std::optional<Failure> check_identities(const Graph& g, const SearchLimits& limits = {});
std::optional<Failure> check_oracle(const Graph& g, const SearchLimits& limits = {});

// Sweeps over the exhaustive non-isomorphic corpus (plus random graphs
// where stated). Suites skip graphs that fail their preconditions.
SuiteResult gamma_suite(int n_max, const SearchLimits& limits = {});
SuiteResult parity_suite(int n_max, const SearchLimits& limits = {});
SuiteResult square_suite(int n_max, const SearchLimits& limits = {});
// C7, C9 and `samples` random connected graphs with reduced complements.
SuiteResult balls_suite(int n_max, int samples, uint32_t seed, const SearchLimits& limits = {});
SuiteResult identities_suite(int n_max, const SearchLimits& limits = {});
// Fast paths against the Sym(V) oracles; adds `samples` random reduced
// graphs on 8 and 9 vertices to the exhaustive corpus.
SuiteResult oracle_suite(int n_max, int samples, uint32_t seed, const SearchLimits& limits = {});

// count_tf_classes bound, the sigma-invariant Sylow comparison and the
// fixed-subgroup parity theorem. An empty spec sweeps the built-in zoo up
// to order 48; otherwise checks one named group (optionally one sigma).
SuiteResult group_bounds_suite(const std::string& group_spec = "",
                               const std::string& sigma_spec = "");

SuiteResult replay(const std::string& suite, const Graph& g, const SearchLimits& limits = {});

}  // namespace verify
}  // namespace twofold
