#include "twofold/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "twofold/corpus.hpp"
#include "twofold/double_cover.hpp"
#include "twofold/errors.hpp"
#include "twofold/finite_group.hpp"
#include "twofold/graph_io.hpp"
#include "twofold/oracle.hpp"
#include "twofold/tf_iso.hpp"

namespace twofold {
namespace verify {

namespace {

Failure fail(const Graph& g, const std::string& detail, const std::string& perm = "") {
    return Failure{graph6_encode(g), perm, detail};
}

}  // namespace

std::optional<Failure> check_gamma(const Graph& g, const SearchLimits& limits) {
    TwoFoldStructure tfs = aut_pi(g, limits);
    int m = (int)tfs.aut_pi_order();

    for (int i = 0; i < m; ++i)
        if (tfs.gamma_idx(tfs.gamma_idx(i)) != i)
            return fail(g, "gamma^2 != id", tfs.elements()[i].cycle_string());

    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int lhs = tfs.gamma_idx(tfs.compose_idx(i, j));
            int rhs = tfs.compose_idx(tfs.gamma_idx(i), tfs.gamma_idx(j));
            if (lhs != rhs)
                return fail(g, "gamma is not a homomorphism",
                            tfs.elements()[i].cycle_string() + " , " +
                                tfs.elements()[j].cycle_string());
        }

    PermGroup aut = automorphism_group(g, limits);
    std::set<Permutation> fix;
    for (int i : tfs.aut()) fix.insert(tfs.elements()[i]);
    std::set<Permutation> aut_set(aut.elements().begin(), aut.elements().end());
    if (fix != aut_set) return fail(g, "Fix(gamma) != Aut");

    for (int i = 0; i < m; ++i) {
        const Permutation& p = tfs.elements()[i];
        const Permutation& gp = tfs.elements()[tfs.gamma_idx(i)];
        for (int v = 0; v < g.size(); ++v)
            for (int w = 0; w < g.size(); ++w)
                if (g.adjacent(v, w) != g.adjacent(p(v), gp(w)))
                    return fail(g, "edge relation (v,w) <-> (pi(v), gamma(pi)(w)) broken",
                                p.cycle_string());
    }

    // alpha constant exactly on right Aut-cosets
    std::vector<int> alpha(m);
    for (int i = 0; i < m; ++i) alpha[i] = tfs.compose_idx(tfs.inverse_idx(i), tfs.gamma_idx(i));
    std::set<int> aut_idx(tfs.aut().begin(), tfs.aut().end());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            bool same_coset = aut_idx.count(tfs.compose_idx(j, tfs.inverse_idx(i))) > 0;
            if ((alpha[i] == alpha[j]) != same_coset)
                return fail(g, "alpha does not separate right Aut-cosets exactly",
                            tfs.elements()[i].cycle_string() + " , " +
                                tfs.elements()[j].cycle_string());
        }

    for (int w : tfs.im_alpha()) {
        if (!empty_orbit_check(g, tfs.elements()[w]))
            return fail(g, "an Im(alpha) orbit induces an edge",
                        tfs.elements()[w].cycle_string());
        // Im(alpha) members are inverted by gamma and closed under powers
        if (tfs.gamma_idx(w) != tfs.inverse_idx(w))
            return fail(g, "gamma does not invert an Im(alpha) member",
                        tfs.elements()[w].cycle_string());
        int cur = w;
        do {
            cur = tfs.compose_idx(cur, w);
            if (!std::binary_search(tfs.im_alpha().begin(), tfs.im_alpha().end(), cur))
                return fail(g, "a power of an Im(alpha) member escapes Im(alpha)",
                            tfs.elements()[w].cycle_string());
        } while (cur != w);
    }
    return std::nullopt;
}

std::optional<Failure> check_parity(const Graph& g, const SearchLimits& limits) {
    TwoFoldStructure tfs = aut_pi(g, limits);
    bool aut_even = tfs.aut_order() % 2 == 0;
    bool pi_even = tfs.aut_pi_order() % 2 == 0;
    if (aut_even != pi_even)
        return fail(g, "2 | |Aut| <-> 2 | |Aut^pi| violated: |Aut|=" +
                           std::to_string(tfs.aut_order()) +
                           " |Aut^pi|=" + std::to_string(tfs.aut_pi_order()));
    return std::nullopt;
}

std::optional<Failure> check_square(const Graph& g, const SearchLimits& limits) {
    SquareSubgroupReport rep = square_subgroup_check(g, limits);
    if (!rep.contained) return fail(g, "Aut^pi is not contained in Aut(square)");
    if (rep.hypotheses_met && !rep.equal)
        return fail(g, "equality Aut^pi = Aut(square) fails under the stated hypotheses");
    return std::nullopt;
}

std::optional<Failure> check_balls(const Graph& g, const SearchLimits& limits) {
    TwoFoldStructure tau = aut_tau(g, limits);
    int diam = diameter(g);
    int rmax = diam == kInfDist ? g.size() : diam;
    for (const auto& p : tau.elements()) {
        const Permutation& gp = tau.gamma_of(p);
        for (int r = 1; r <= rmax; ++r) {
            const Permutation& target = (r % 2 == 1) ? gp : p;
            for (int v = 0; v < g.size(); ++v) {
                Bitset lhs(g.size());
                Bitset b = ball(g, v, r);
                for (int w = b.next(0); w >= 0; w = b.next(w + 1)) lhs.set(p(w));
                if (lhs != ball(g, target(v), r))
                    return fail(g, "ball theorem fails at r=" + std::to_string(r) +
                                       ", v=" + std::to_string(v),
                                p.cycle_string());
            }
        }
        if (!verify_distance_parity(g, p))
            return fail(g, "distance parity band not preserved", p.cycle_string());
    }
    return std::nullopt;
}

std::optional<Failure> check_identities(const Graph& g, const SearchLimits& limits) {
    try {
        IdentityReport rep = verify_identities(g, limits);
        if (!rep.all_ok()) return fail(g, "census identities failed");
    } catch (const InternalError& e) {
        return fail(g, e.what());
    }
    return std::nullopt;
}

std::optional<Failure> check_oracle(const Graph& g, const SearchLimits& limits) {
    oracle::BruteAutPi brute = oracle::brute_aut_pi(g);
    TwoFoldStructure fast = aut_pi(g, limits);
    if ((long long)brute.elements.size() != fast.aut_pi_order())
        return fail(g, "fast Aut^pi order " + std::to_string(fast.aut_pi_order()) +
                           " != oracle " + std::to_string(brute.elements.size()));
    for (size_t i = 0; i < brute.elements.size(); ++i) {
        int idx = fast.index_of(brute.elements[i]);
        if (idx < 0) return fail(g, "oracle element missing from the fast Aut^pi",
                                 brute.elements[i].cycle_string());
        if (!(fast.gamma_of(brute.elements[i]) == brute.gamma[i]))
            return fail(g, "gamma disagrees with the oracle",
                        brute.elements[i].cycle_string());
    }

    PermGroup fast_aut = automorphism_group(g, limits);
    PermGroup brute_aut = oracle::brute_aut(g);
    if (!(fast_aut.elements() == brute_aut.elements()))
        return fail(g, "automorphism group disagrees with the oracle");

    // brute_aut <= brute_aut_pi
    for (const auto& p : brute_aut.elements()) {
        bool found = std::binary_search(brute.elements.begin(), brute.elements.end(), p);
        if (!found) return fail(g, "Aut not contained in Aut^pi (oracle)", p.cycle_string());
    }

    // census classes against the pairwise-isomorphism oracle
    if (is_connected(g) && !is_bipartite(g)) {
        TfCensus cen = census(fast, /*allow_loops=*/false);
        oracle::BruteCensus bc = oracle::brute_census(g);
        if (cen.psis.size() != bc.pool.size() ||
            !std::equal(cen.psis.begin(), cen.psis.end(), bc.pool.begin()))
            return fail(g, "census pool disagrees with the oracle");
        std::set<std::set<int>> fast_classes, brute_classes;
        for (const auto& cls : cen.classes)
            fast_classes.insert(std::set<int>(cls.members.begin(), cls.members.end()));
        for (const auto& cls : bc.classes)
            brute_classes.insert(std::set<int>(cls.begin(), cls.end()));
        if (fast_classes != brute_classes)
            return fail(g, "census classes disagree with the brute-force classes");
        // per-class inst against the oracle witness automorphism count
        for (const auto& cls : cen.classes) {
            PermGroup waut = oracle::brute_aut(cls.witness);
            if (waut.order() != cls.witness_aut_order)
                return fail(g, "witness |Aut| disagrees with the oracle",
                            cen.psis[cls.rep].cycle_string());
        }
    }
    return std::nullopt;
}

namespace {

SuiteResult sweep(const std::string& name, int n_max,
                  const std::function<bool(const Graph&)>& eligible,
                  const std::function<std::optional<Failure>(const Graph&)>& check) {
    SuiteResult res;
    res.suite = name;
    for (const Graph& g : corpus::all_graphs_up_to(n_max)) {
        if (!eligible(g)) continue;
        ++res.checked;
        if (auto f = check(g)) res.failures.push_back(*f);
    }
    return res;
}

}  // namespace

SuiteResult gamma_suite(int n_max, const SearchLimits& limits) {
    return sweep("gamma", n_max, [](const Graph& g) { return is_reduced(g); },
                 [&](const Graph& g) { return check_gamma(g, limits); });
}

SuiteResult parity_suite(int n_max, const SearchLimits& limits) {
    return sweep("parity", n_max, [](const Graph& g) { return is_reduced(g); },
                 [&](const Graph& g) { return check_parity(g, limits); });
}

SuiteResult square_suite(int n_max, const SearchLimits& limits) {
    return sweep("square", n_max, [](const Graph& g) { return is_reduced(g); },
                 [&](const Graph& g) { return check_square(g, limits); });
}

SuiteResult balls_suite(int n_max, int samples, uint32_t seed, const SearchLimits& limits) {
    SuiteResult res;
    res.suite = "balls";
    std::vector<Graph> graphs{cycle_graph(7), cycle_graph(9)};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> size(5, std::max(5, n_max));
    for (int i = 0; i < samples; ++i)
        graphs.push_back(corpus::random_connected_graph_with_reduced_complement(size(rng), rng));
    for (const Graph& g : graphs) {
        ++res.checked;
        if (auto f = check_balls(g, limits)) res.failures.push_back(*f);
    }
    return res;
}

SuiteResult identities_suite(int n_max, const SearchLimits& limits) {
    return sweep("identities", n_max,
                 [](const Graph& g) {
                     return is_reduced(g) && is_connected(g) && !is_bipartite(g);
                 },
                 [&](const Graph& g) { return check_identities(g, limits); });
}

SuiteResult oracle_suite(int n_max, int samples, uint32_t seed, const SearchLimits& limits) {
    SuiteResult res = sweep("oracle-sweep", std::min(n_max, 7),
                            [](const Graph& g) { return is_reduced(g); },
                            [&](const Graph& g) { return check_oracle(g, limits); });
    std::mt19937 rng(seed);
    for (int i = 0; i < samples; ++i) {
        Graph g = corpus::random_reduced_graph(8 + i % 2, rng);
        ++res.checked;
        if (auto f = check_oracle(g, limits)) res.failures.push_back(*f);
    }
    return res;
}

namespace {

std::vector<std::pair<std::string, FiniteGroup>> builtin_zoo(int max_order) {
    std::vector<std::pair<std::string, FiniteGroup>> out;
    for (int n = 1; n <= max_order; ++n) out.push_back({"Z:" + std::to_string(n), cyclic_group(n)});
    for (int k = 1; (1 << k) <= max_order; ++k)
        out.push_back({"Z2^:" + std::to_string(k), elementary_abelian_2(k)});
    for (int n = 3; 2 * n <= max_order; ++n)
        out.push_back({"D:" + std::to_string(n), dihedral_group(n)});
    for (int n = 3; n <= 4; ++n) out.push_back({"S:" + std::to_string(n), symmetric_group(n)});
    out.push_back({"prod:Z:3,Z:3", group_by_name("prod:Z:3,Z:3")});
    out.push_back({"prod:Z:2,Z:4", group_by_name("prod:Z:2,Z:4")});
    out.push_back({"prod:Z:2,Z:2,Z:3", group_by_name("prod:Z:2,Z:2,Z:3")});
    out.push_back({"prod:Z:4,Z:4", group_by_name("prod:Z:4,Z:4")});
    return out;
}

std::vector<std::pair<std::string, GroupAutomorphism>> sigma_samples(const FiniteGroup& g) {
    std::vector<std::pair<std::string, GroupAutomorphism>> out;
    out.push_back({"id", GroupAutomorphism::identity(g)});
    try {
        GroupAutomorphism inv = GroupAutomorphism::inversion(g);
        if (!inv.is_identity()) out.push_back({"inv", inv});
    } catch (const InputError&) {
    }
    int taken = 0;
    for (int a = 0; a < g.order() && taken < 3; ++a) {
        try {
            GroupAutomorphism conj = GroupAutomorphism::conjugation(g, a);
            if (conj.is_identity()) continue;
            bool dup = false;
            for (const auto& [name, s] : out) dup = dup || s.map() == conj.map();
            if (!dup) {
                out.push_back({"conj:" + std::to_string(a), conj});
                ++taken;
            }
        } catch (const InputError&) {
        }
    }
    return out;
}

std::optional<Failure> check_group_bounds(const std::string& gname, const FiniteGroup& g,
                                          const std::string& sname,
                                          const GroupAutomorphism& sigma) {
    auto describe = [&](const std::string& what) {
        return Failure{"", "", gname + " sigma=" + sname + ": " + what};
    };
    int m = g.order(), k = 0;
    while (m % 2 == 0) m /= 2, ++k;

    int count = count_tf_classes(g, sigma);
    if (count > (1 << k)) return describe("count_tf_classes exceeds 2^k");

    SylowBoundReport rep = sylow2_invariant_bound_check(g, sigma);
    if (!rep.holds) return describe("sylow bound chain fails");
    if (rep.count_H != count) return describe("class count disagrees between paths");

    // fixed-subgroup parity: even index forces even |Fix(sigma)|
    long long fix = (long long)sigma.fixed_points().size();
    if ((g.order() / fix) % 2 == 0 && fix % 2 != 0)
        return describe("index parity theorem fails");

    // every s_set member squares to the identity and (e,1) is present
    SemidirectZ2 sd = semidirect_z2(g, sigma);
    std::vector<int> s = s_set(sd);
    if (std::find(s.begin(), s.end(), sd.x()) == s.end())
        return describe("s_set misses (e,1)");
    for (int el : s) {
        if (sd.group.mul(el, el) != sd.group.identity())
            return describe("s_set member of order > 2");
        int rep2 = reduce_to_2power_rep(sd, el);
        long long ord = sd.group.element_order(sd.encode(sd.decode(rep2).first, 0));
        if (ord & (ord - 1)) return describe("2-power representative has odd part");
    }
    return std::nullopt;
}

}  // namespace

SuiteResult group_bounds_suite(const std::string& group_spec, const std::string& sigma_spec) {
    SuiteResult res;
    res.suite = "group-bounds";
    std::vector<std::pair<std::string, FiniteGroup>> groups;
    if (group_spec.empty())
        groups = builtin_zoo(48);
    else
        groups.push_back({group_spec, group_by_name(group_spec)});
    for (const auto& [gname, g] : groups) {
        std::vector<std::pair<std::string, GroupAutomorphism>> sigmas;
        if (!sigma_spec.empty())
            sigmas.push_back({sigma_spec, GroupAutomorphism::by_name(g, sigma_spec)});
        else
            sigmas = sigma_samples(g);
        for (const auto& [sname, sigma] : sigmas) {
            ++res.checked;
            if (auto f = check_group_bounds(gname, g, sname, sigma)) res.failures.push_back(*f);
        }
    }
    return res;
}

SuiteResult replay(const std::string& suite, const Graph& g, const SearchLimits& limits) {
    SuiteResult res;
    res.suite = suite;
    res.checked = 1;
    std::optional<Failure> f;
    if (suite == "gamma") f = check_gamma(g, limits);
    else if (suite == "parity") f = check_parity(g, limits);
    else if (suite == "square") f = check_square(g, limits);
    else if (suite == "balls") f = check_balls(g, limits);
    else if (suite == "identities") f = check_identities(g, limits);
    else if (suite == "oracle-sweep") f = check_oracle(g, limits);
    else throw InputError("replay: unknown suite " + suite);
    if (f) res.failures.push_back(*f);
    return res;
}

}  // namespace verify
}  // namespace twofold
