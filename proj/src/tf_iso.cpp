#include "twofold/tf_iso.hpp"

#include <algorithm>
#include <numeric>

#include "twofold/errors.hpp"

namespace twofold {

std::string ActionRejection::describe() const {
    if (reason == Reason::kNotAntimorphism) return "not-antimorphism";
    return "loop-at-" + std::to_string(vertex);
}

std::variant<Graph, ActionRejection> permutation_matrix_action(const Graph& g,
                                                               const Permutation& psi,
                                                               bool allow_loops) {
    if (!is_reduced(g)) throw PreconditionError("permutation_matrix_action: graph not reduced");
    if (psi.degree() != g.size())
        throw InputError("permutation_matrix_action: permutation degree mismatch");
    int n = g.size();
    // B[i][j] = A[i][psi(j)]
    std::vector<Bitset> rows(n, Bitset(n));
    for (int i = 0; i < n; ++i) {
        const Bitset& src = g.row(i);
        for (int j = 0; j < n; ++j)
            if (src.test(psi(j))) rows[i].set(j);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rows[i].test(j) != rows[j].test(i))
                return ActionRejection{ActionRejection::Reason::kNotAntimorphism, -1};
    if (!allow_loops)
        for (int v = 0; v < n; ++v)
            if (rows[v].test(v)) return ActionRejection{ActionRejection::Reason::kLoopAt, v};

    bool any_loop = false;
    for (int v = 0; v < n; ++v) any_loop = any_loop || rows[v].test(v);
    Graph out(n, allow_loops && any_loop);
    for (int v = 0; v < n; ++v) out.set_row(v, rows[v]);
    return out;
}

std::optional<TfPair> tf_isomorphic(const Graph& g1, const Graph& g2,
                                    const SearchLimits& limits) {
    if (!is_reduced(g1) || !is_reduced(g2))
        throw PreconditionError("tf_isomorphic: both graphs must be reduced");
    if (g1.size() != g2.size()) return std::nullopt;
    auto pairs = find_tf_pairs(g1, g2, /*find_all=*/false, limits);
    if (pairs.empty()) return std::nullopt;
    return pairs.front();
}

namespace {

Graph materialize_witness(const Graph& base, const Permutation& psi, bool allow_loops) {
    auto result = permutation_matrix_action(base, psi, allow_loops);
    if (std::holds_alternative<ActionRejection>(result))
        throw InternalError("census: pool member rejected by the matrix action (" +
                            std::get<ActionRejection>(result).describe() + ")");
    return std::get<Graph>(std::move(result));
}

}  // namespace

TfCensus census(const TwoFoldStructure& tfs, bool allow_loops, bool keep_all) {
    const Graph& g = tfs.graph();
    if (!tfs.connected() || tfs.bipartite())
        throw PreconditionError("census: graph must be connected and nonbipartite");

    TfCensus out;
    out.loops_included = allow_loops;
    out.aut_pi_order = tfs.aut_pi_order();
    out.ant_size = (long long)tfs.ant().size();
    out.ant0_size = (long long)tfs.ant0().size();

    const std::vector<int>& pool_idx = allow_loops ? tfs.ant() : tfs.ant0();
    std::vector<int> pos_in_pool(tfs.aut_pi_order(), -1);
    for (size_t i = 0; i < pool_idx.size(); ++i) {
        out.psis.push_back(tfs.elements()[pool_idx[i]]);
        pos_in_pool[pool_idx[i]] = (int)i;
    }

    int m = (int)tfs.aut_pi_order();
    std::vector<bool> classified(pool_idx.size(), false);
    for (size_t i = 0; i < pool_idx.size(); ++i) {
        if (classified[i]) continue;
        int psi = pool_idx[i];
        int psi_inv = tfs.inverse_idx(psi);

        // gamma of the psi-witness graph: h -> psi^-1 gamma(h) psi
        std::vector<int> gamma_w(m);
        for (int h = 0; h < m; ++h)
            gamma_w[h] = tfs.compose_idx(tfs.compose_idx(psi_inv, tfs.gamma_idx(h)), psi);

        long long fix = 0;
        std::vector<int> im;
        for (int h = 0; h < m; ++h) {
            if (gamma_w[h] == h) ++fix;
            im.push_back(tfs.compose_idx(tfs.inverse_idx(h), gamma_w[h]));
        }
        std::sort(im.begin(), im.end());
        im.erase(std::unique(im.begin(), im.end()), im.end());

        TfCensusClass cls;
        cls.rep = (int)i;
        cls.witness_aut_order = fix;
        cls.inst = (long long)m / fix;
        if ((long long)im.size() != cls.inst)
            throw InternalError("census: |Im(alpha)| disagrees with the coset count");
        for (int omega : im) {
            int member = tfs.compose_idx(psi, omega);
            int pp = pos_in_pool[member];
            if (pp < 0)
                throw InternalError("census: class member escapes the antimorphism pool");
            cls.members.push_back(pp);
            classified[pp] = true;
        }
        std::sort(cls.members.begin(), cls.members.end());
        cls.witness = materialize_witness(g, out.psis[i], allow_loops);
        out.classes.push_back(std::move(cls));
    }

    if (keep_all)
        for (const auto& psi : out.psis)
            out.all_witnesses.push_back(materialize_witness(g, psi, allow_loops));
    return out;
}

TfCensus census(const Graph& g, bool allow_loops, bool keep_all, const SearchLimits& limits) {
    if (!is_connected(g) || is_bipartite(g))
        throw PreconditionError("census: graph must be connected and nonbipartite");
    TwoFoldStructure tfs = aut_pi(g, limits);
    return census(tfs, allow_loops, keep_all);
}

SwitchingElements strongly_switching_elements(const TwoFoldStructure& tfs, int cap) {
    if (!tfs.connected() || tfs.bipartite())
        throw PreconditionError(
            "strongly_switching_elements: graph must be connected and nonbipartite");
    PermGroup group(tfs.degree(), tfs.elements(), tfs.elements());
    FiniteGroup abstract = finite_group_from_permutations(group, cap);
    std::vector<int> gamma_map(tfs.aut_pi_order());
    for (int i = 0; i < (int)tfs.aut_pi_order(); ++i) gamma_map[i] = tfs.gamma_idx(i);
    GroupAutomorphism gamma = GroupAutomorphism::from_map(abstract, gamma_map);

    SwitchingElements out{semidirect_z2(abstract, gamma), {}};
    for (int i : tfs.ant0())
        out.elements.push_back(out.semidirect.group.mul(out.semidirect.x(),
                                                        out.semidirect.encode(i, 0)));
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

std::vector<std::vector<int>> switching_conjugacy_classes(const TwoFoldStructure& tfs, int cap) {
    SwitchingElements sw = strongly_switching_elements(tfs, cap);
    TfCensus cen = census(tfs, /*allow_loops=*/false);

    // map pool position -> element index in Aut^pi
    std::vector<int> pool_elem;
    for (const auto& psi : cen.psis) pool_elem.push_back(tfs.index_of(psi));

    std::vector<std::vector<int>> out;
    for (const auto& cls : cen.classes) {
        std::vector<int> sd_class;
        for (int member : cls.members) {
            int elem = pool_elem[member];
            sd_class.push_back(
                sw.semidirect.group.mul(sw.semidirect.x(), sw.semidirect.encode(elem, 0)));
        }
        std::sort(sd_class.begin(), sd_class.end());
        out.push_back(std::move(sd_class));
    }
    return out;
}

Fraction make_fraction(long long num, long long den) {
    long long g = std::gcd(num, den);
    if (g == 0) return {0, 1};
    if (den < 0) num = -num, den = -den;
    return {num / g, den / g};
}

Fraction add(Fraction a, Fraction b) {
    return make_fraction(a.num * b.den + b.num * a.den, a.den * b.den);
}

IdentityReport verify_identities(const TwoFoldStructure& tfs) {
    TfCensus loopless = census(tfs, /*allow_loops=*/false);
    TfCensus loops = census(tfs, /*allow_loops=*/true);

    IdentityReport rep;
    rep.ant_size = loopless.ant_size;
    rep.ant0_size = loopless.ant0_size;
    rep.aut_pi_order = loopless.aut_pi_order;

    rep.class_sizes_ok = true;
    for (const auto& cen : {std::cref(loopless), std::cref(loops)})
        for (const auto& cls : cen.get().classes)
            rep.class_sizes_ok = rep.class_sizes_ok && (long long)cls.members.size() == cls.inst;

    for (const auto& cls : loopless.classes) rep.sum_inst_loopless += cls.inst;
    for (const auto& cls : loops.classes) rep.sum_inst_loops += cls.inst;
    rep.count_ok_loopless = rep.sum_inst_loopless == rep.ant0_size;
    rep.count_ok_loops = rep.sum_inst_loops == rep.ant_size;

    rep.harmonic_lhs_loopless = make_fraction(rep.ant0_size, rep.aut_pi_order);
    Fraction rhs{0, 1};
    for (const auto& cls : loopless.classes) rhs = add(rhs, make_fraction(1, cls.witness_aut_order));
    rep.harmonic_rhs_loopless = rhs;
    rep.harmonic_ok_loopless = rep.harmonic_lhs_loopless == rep.harmonic_rhs_loopless;

    Fraction lhs_loops = make_fraction(rep.ant_size, rep.aut_pi_order);
    Fraction rhs_loops{0, 1};
    for (const auto& cls : loops.classes) rhs_loops = add(rhs_loops, make_fraction(1, cls.witness_aut_order));
    rep.harmonic_ok_loops = lhs_loops == rhs_loops;

    // E(|Aut|) >= E(#TF-mates) over the loopless family: sum |Aut_c| >= C^2
    long long c = (long long)loopless.classes.size(), sum_aut = 0;
    for (const auto& cls : loopless.classes) sum_aut += cls.witness_aut_order;
    rep.expectation_ok = sum_aut >= c * c;

    if (!rep.all_ok())
        throw InternalError("verify_identities: a census counting identity failed");
    return rep;
}

IdentityReport verify_identities(const Graph& g, const SearchLimits& limits) {
    if (!is_connected(g) || is_bipartite(g))
        throw PreconditionError("verify_identities: graph must be connected and nonbipartite");
    TwoFoldStructure tfs = aut_pi(g, limits);
    return verify_identities(tfs);
}

bool empty_orbit_check(const Graph& g, const Permutation& psi) {
    for (const auto& orbit : psi.cycles_with_fixed())
        for (size_t a = 0; a < orbit.size(); ++a)
            for (size_t b = a; b < orbit.size(); ++b)
                if (g.adjacent(orbit[a], orbit[b])) return false;
    return true;
}

}  // namespace twofold
