#include "twofold/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "twofold/errors.hpp"

namespace twofold {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    std::vector<std::string> names) {
    FiniteGroup g;
    int m = (int)table.size();
    if (m < 1) throw InputError("group table is empty");
    g.m_ = m;
    g.table_.resize(m * m);
    for (int a = 0; a < m; ++a) {
        if ((int)table[a].size() != m) throw InputError("group table is not square");
        for (int b = 0; b < m; ++b) {
            int v = table[a][b];
            if (v < 0 || v >= m) throw InputError("group table entry out of range");
            g.table_[a * m + b] = v;
        }
    }

    // identity
    g.e_ = -1;
    for (int e = 0; e < m; ++e) {
        bool ok = true;
        for (int a = 0; a < m && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
        if (ok) {
            g.e_ = e;
            break;
        }
    }
    if (g.e_ < 0) throw InputError("group table has no identity");

    // inverses
    g.inv_.assign(m, -1);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b)
            if (g.mul(a, b) == g.e_ && g.mul(b, a) == g.e_) {
                g.inv_[a] = b;
                break;
            }
        if (g.inv_[a] < 0) throw InputError("group table misses an inverse");
    }

    // associativity: exhaustive for small orders, sampled beyond
    if (m <= 128) {
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                for (int c = 0; c < m; ++c)
                    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                        throw InputError("group table is not associative");
    } else {
        std::mt19937 rng(0x5eed);
        std::uniform_int_distribution<int> pick(0, m - 1);
        for (int t = 0; t < 20000; ++t) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                throw InputError("group table is not associative");
        }
    }

    if (names.empty()) {
        for (int a = 0; a < m; ++a) names.push_back("g" + std::to_string(a));
    }
    if ((int)names.size() != m) throw InputError("group names length mismatch");
    g.names_ = std::move(names);
    return g;
}

int FiniteGroup::pow(int a, long long k) const {
    long long ord = element_order(a);
    k %= ord;
    if (k < 0) k += ord;
    int acc = e_, base = a;
    while (k) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

long long FiniteGroup::element_order(int a) const {
    long long ord = 1;
    int cur = a;
    while (cur != e_) {
        cur = mul(cur, a);
        ++ord;
    }
    return ord;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < m_; ++a)
        for (int b = a + 1; b < m_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<int> FiniteGroup::subgroup_closure(const std::vector<int>& gens) const {
    std::vector<bool> in(m_, false);
    std::vector<int> queue{e_};
    in[e_] = true;
    for (size_t head = 0; head < queue.size(); ++head)
        for (int g : gens) {
            int next = mul(queue[head], g);
            if (!in[next]) {
                in[next] = true;
                queue.push_back(next);
            }
        }
    std::sort(queue.begin(), queue.end());
    return queue;
}

std::pair<FiniteGroup, std::vector<int>> FiniteGroup::subgroup(
    const std::vector<int>& elements) const {
    int k = (int)elements.size();
    std::vector<int> pos(m_, -1);
    for (int i = 0; i < k; ++i) pos[elements[i]] = i;
    std::vector<std::vector<int>> table(k, std::vector<int>(k));
    std::vector<std::string> names;
    for (int i = 0; i < k; ++i) {
        names.push_back(names_[elements[i]]);
        for (int j = 0; j < k; ++j) {
            int prod = mul(elements[i], elements[j]);
            if (pos[prod] < 0) throw InputError("subgroup: element list is not closed");
            table[i][j] = pos[prod];
        }
    }
    return {FiniteGroup::from_table(std::move(table), std::move(names)), elements};
}

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw InputError("cyclic_group: order must be positive");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a) {
        names.push_back(std::to_string(a));
        for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    }
    return FiniteGroup::from_table(std::move(table), std::move(names));
}

FiniteGroup elementary_abelian_2(int k) {
    if (k < 0 || k > 12) throw InputError("elementary_abelian_2: supported rank is 0..12");
    int n = 1 << k;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a) {
        names.push_back(std::to_string(a));
        for (int b = 0; b < n; ++b) table[a][b] = a ^ b;
    }
    return FiniteGroup::from_table(std::move(table), std::move(names));
}

FiniteGroup dihedral_group(int n) {
    if (n < 1) throw InputError("dihedral_group: n must be positive");
    // element 2i = r^i, 2i+1 = s r^i;  s r^i s = r^-i
    int m = 2 * n;
    auto enc = [&](int flip, int rot) { return 2 * ((rot % n + n) % n) + flip; };
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    std::vector<std::string> names(m);
    for (int i = 0; i < n; ++i) {
        names[2 * i] = "r" + std::to_string(i);
        names[2 * i + 1] = "sr" + std::to_string(i);
    }
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int fa = a & 1, ra = a >> 1, fb = b & 1, rb = b >> 1;
            // (s^fa r^ra)(s^fb r^rb) = s^(fa^fb) r^(rb + (fb ? -ra : ra))
            table[a][b] = enc(fa ^ fb, fb ? rb - ra : rb + ra);
        }
    return FiniteGroup::from_table(std::move(table), std::move(names));
}

FiniteGroup symmetric_group(int n) {
    if (n < 1 || n > 6) throw InputError("symmetric_group: supported range is 1..6");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    int m = (int)perms.size();
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    std::vector<std::string> names(m);
    auto rank_of = [&](const std::vector<int>& q) {
        return (int)(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    for (int a = 0; a < m; ++a) {
        std::string nm;
        for (int v : perms[a]) nm += std::to_string(v);
        names[a] = nm;
        for (int b = 0; b < m; ++b) {
            std::vector<int> prod(n);  // (a o b)(v) = a(b(v))
            for (int v = 0; v < n; ++v) prod[v] = perms[a][perms[b][v]];
            table[a][b] = rank_of(prod);
        }
    }
    return FiniteGroup::from_table(std::move(table), std::move(names));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    int m = a.order() * b.order();
    auto enc = [&](int x, int y) { return x * b.order() + y; };
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    std::vector<std::string> names(m);
    for (int x1 = 0; x1 < a.order(); ++x1)
        for (int y1 = 0; y1 < b.order(); ++y1) {
            names[enc(x1, y1)] = "(" + a.name(x1) + "," + b.name(y1) + ")";
            for (int x2 = 0; x2 < a.order(); ++x2)
                for (int y2 = 0; y2 < b.order(); ++y2)
                    table[enc(x1, y1)][enc(x2, y2)] = enc(a.mul(x1, x2), b.mul(y1, y2));
        }
    return FiniteGroup::from_table(std::move(table), std::move(names));
}

FiniteGroup group_by_name(const std::string& spec) {
    if (spec.rfind("prod:", 0) == 0) {
        std::string rest = spec.substr(5);
        std::vector<std::string> parts;
        // factors are separated by commas between name specs: "Z:3,Z:3"
        size_t start = 0;
        while (start < rest.size()) {
            size_t comma = rest.find(',', start);
            // a factor spec itself contains one ':'; the separating comma is
            // the one right after a complete factor
            size_t colon = rest.find(':', start);
            if (colon == std::string::npos) throw InputError("bad group spec: " + spec);
            comma = rest.find(',', colon);
            parts.push_back(rest.substr(start, comma == std::string::npos ? comma : comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (parts.size() < 2) throw InputError("prod: needs at least two factors");
        FiniteGroup acc = group_by_name(parts[0]);
        for (size_t i = 1; i < parts.size(); ++i) acc = direct_product(acc, group_by_name(parts[i]));
        return acc;
    }
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw InputError("bad group spec: " + spec);
    std::string kind = spec.substr(0, colon);
    int param = 0;
    try {
        param = std::stoi(spec.substr(colon + 1));
    } catch (...) {
        throw InputError("bad group parameter in: " + spec);
    }
    if (kind == "Z") return cyclic_group(param);
    if (kind == "Z2^") return elementary_abelian_2(param);
    if (kind == "D") return dihedral_group(param);
    if (kind == "S") return symmetric_group(param);
    throw InputError("unknown group kind: " + kind);
}

namespace {

void validate_automorphism(const FiniteGroup& g, const std::vector<int>& map, const char* who) {
    int m = g.order();
    if ((int)map.size() != m) throw InputError(std::string(who) + ": map length mismatch");
    std::vector<bool> seen(m, false);
    for (int v : map) {
        if (v < 0 || v >= m || seen[v]) throw InputError(std::string(who) + ": map is not a bijection");
        seen[v] = true;
    }
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (map[g.mul(a, b)] != g.mul(map[a], map[b]))
                throw InputError(std::string(who) + ": map is not a homomorphism");
    for (int a = 0; a < m; ++a)
        if (map[map[a]] != a) throw InputError(std::string(who) + ": map is not involutory");
}

}  // namespace

GroupAutomorphism GroupAutomorphism::identity(const FiniteGroup& g) {
    std::vector<int> map(g.order());
    std::iota(map.begin(), map.end(), 0);
    return GroupAutomorphism(std::move(map));
}

GroupAutomorphism GroupAutomorphism::inversion(const FiniteGroup& g) {
    std::vector<int> map(g.order());
    for (int a = 0; a < g.order(); ++a) map[a] = g.inv(a);
    validate_automorphism(g, map, "inversion");
    return GroupAutomorphism(std::move(map));
}

GroupAutomorphism GroupAutomorphism::conjugation(const FiniteGroup& g, int by) {
    if (by < 0 || by >= g.order()) throw InputError("conjugation: element out of range");
    std::vector<int> map(g.order());
    for (int a = 0; a < g.order(); ++a) map[a] = g.mul(g.mul(g.inv(by), a), by);
    validate_automorphism(g, map, "conjugation");
    return GroupAutomorphism(std::move(map));
}

GroupAutomorphism GroupAutomorphism::from_map(const FiniteGroup& g, std::vector<int> map) {
    validate_automorphism(g, map, "automorphism");
    return GroupAutomorphism(std::move(map));
}

GroupAutomorphism GroupAutomorphism::by_name(const FiniteGroup& g, const std::string& spec) {
    if (spec == "id") return identity(g);
    if (spec == "inv") return inversion(g);
    if (spec.rfind("conj:", 0) == 0) return conjugation(g, std::stoi(spec.substr(5)));
    if (spec.rfind("map:", 0) == 0) {
        std::vector<int> map;
        std::stringstream ss(spec.substr(4));
        std::string tok;
        while (std::getline(ss, tok, ',')) map.push_back(std::stoi(tok));
        return from_map(g, std::move(map));
    }
    throw InputError("unknown automorphism spec: " + spec);
}

bool GroupAutomorphism::is_identity() const {
    for (int a = 0; a < (int)map_.size(); ++a)
        if (map_[a] != a) return false;
    return true;
}

std::vector<int> GroupAutomorphism::fixed_points() const {
    std::vector<int> out;
    for (int a = 0; a < (int)map_.size(); ++a)
        if (map_[a] == a) out.push_back(a);
    return out;
}

SemidirectZ2 semidirect_z2(const FiniteGroup& h, const GroupAutomorphism& sigma) {
    int m = h.order();
    int n = 2 * m;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> names(n);
    for (int h1 = 0; h1 < m; ++h1)
        for (int b1 = 0; b1 < 2; ++b1) {
            names[h1 + b1 * m] = b1 ? ("x*" + h.name(h1)) : h.name(h1);
            for (int h2 = 0; h2 < m; ++h2)
                for (int b2 = 0; b2 < 2; ++b2) {
                    int left = h.mul(h1, b1 ? sigma(h2) : h2);
                    table[h1 + b1 * m][h2 + b2 * m] = left + (b1 ^ b2) * m;
                }
        }
    return SemidirectZ2{FiniteGroup::from_table(std::move(table), std::move(names)), m};
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
    int m = g.order();
    std::vector<int> cls(m, -1);
    std::vector<std::vector<int>> out;
    for (int a = 0; a < m; ++a) {
        if (cls[a] >= 0) continue;
        std::vector<int> c;
        for (int t = 0; t < m; ++t) {
            int conj = g.mul(g.mul(g.inv(t), a), t);
            if (cls[conj] < 0) {
                cls[conj] = (int)out.size();
                c.push_back(conj);
            }
        }
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
    }
    return out;
}

RankResult rank(const FiniteGroup& g, int cap) {
    if (g.order() > cap)
        throw ResourceError("rank: order " + std::to_string(g.order()) + " beyond cap " +
                            std::to_string(cap));
    if (g.order() == 1) return {0, {}};

    std::vector<int> candidates;
    for (int a = 0; a < g.order(); ++a)
        if (a != g.identity()) candidates.push_back(a);

    std::vector<int> subset;
    // lexicographically first generating set of each size, sizes ascending
    auto search = [&](auto&& self, int k, size_t from) -> bool {
        if ((int)subset.size() == k)
            return (int)g.subgroup_closure(subset).size() == g.order();
        for (size_t i = from; i < candidates.size(); ++i) {
            subset.push_back(candidates[i]);
            if (self(self, k, i + 1)) return true;
            subset.pop_back();
        }
        return false;
    };
    for (int k = 1;; ++k) {
        subset.clear();
        if (search(search, k, 0)) return {k, subset};
    }
}

std::vector<int> s_set(const SemidirectZ2& sd) {
    std::vector<int> out;
    for (int h = 0; h < sd.base_order; ++h) {
        int g = sd.encode(h, 1);
        if (sd.group.mul(g, g) == sd.group.identity()) out.push_back(g);
    }
    return out;
}

int count_tf_classes(const FiniteGroup& h, const GroupAutomorphism& sigma) {
    SemidirectZ2 sd = semidirect_z2(h, sigma);
    std::vector<int> s = s_set(sd);
    std::vector<bool> in_s(sd.group.order(), false);
    for (int g : s) in_s[g] = true;
    int count = 0;
    for (const auto& cls : conjugacy_classes(sd.group))
        if (in_s[cls[0]]) ++count;
    return count;
}

SylowBoundReport sylow2_invariant_bound_check(const FiniteGroup& h,
                                              const GroupAutomorphism& sigma) {
    SylowBoundReport rep;
    int m = h.order();
    int k = 0;
    while (m % 2 == 0) {
        ++k;
        m /= 2;
    }
    rep.bound_2k = 1ll << k;

    int target = 1 << k;
    std::vector<int> sylow;
    if (target == 1) {
        sylow = {h.identity()};
    } else if (target == h.order()) {
        for (int a = 0; a < h.order(); ++a) sylow.push_back(a);
    } else {
        std::vector<int> candidates;
        for (int a = 0; a < h.order(); ++a) {
            long long ord = h.element_order(a);
            if (a != h.identity() && (ord & (ord - 1)) == 0) candidates.push_back(a);
        }
        auto sigma_invariant = [&](const std::vector<int>& sub) {
            std::vector<int> mapped;
            for (int a : sub) mapped.push_back(sigma(a));
            std::sort(mapped.begin(), mapped.end());
            return mapped == sub;
        };
        std::vector<int> subset;
        auto search = [&](auto&& self, int size, size_t from) -> bool {
            if ((int)subset.size() == size) {
                std::vector<int> closed = h.subgroup_closure(subset);
                if ((int)closed.size() == target && sigma_invariant(closed)) {
                    sylow = closed;
                    return true;
                }
                return false;
            }
            for (size_t i = from; i < candidates.size(); ++i) {
                subset.push_back(candidates[i]);
                if (self(self, size, i + 1)) return true;
                subset.pop_back();
            }
            return false;
        };
        for (int size = 1; size <= k && sylow.empty(); ++size) search(search, size, 0);
        if (sylow.empty())
            throw InternalError("sylow2_invariant_bound_check: no sigma-invariant Sylow "
                                "2-subgroup found, which contradicts the bound theorem");
    }

    rep.sylow = sylow;
    auto [p2, back] = h.subgroup(sylow);
    std::vector<int> restricted(sylow.size());
    std::vector<int> pos(h.order(), -1);
    for (size_t i = 0; i < sylow.size(); ++i) pos[sylow[i]] = (int)i;
    for (size_t i = 0; i < sylow.size(); ++i) restricted[i] = pos[sigma(sylow[i])];
    GroupAutomorphism sigma_p2 = GroupAutomorphism::from_map(p2, restricted);

    rep.count_H = count_tf_classes(h, sigma);
    rep.count_P2 = count_tf_classes(p2, sigma_p2);
    rep.holds = rep.count_H <= rep.count_P2 && rep.count_P2 <= rep.bound_2k;
    return rep;
}

int reduce_to_2power_rep(const SemidirectZ2& sd, int s) {
    auto [h, b] = sd.decode(s);
    if (b != 1 || sd.group.mul(s, s) != sd.group.identity())
        throw InputError("reduce_to_2power_rep: element is not in S(H,sigma)");
    int h0 = sd.encode(h, 0);
    long long odd = sd.group.element_order(h0);
    while (odd % 2 == 0) odd /= 2;
    return sd.encode(sd.decode(sd.group.pow(h0, odd)).first, 1);
}

FiniteGroup finite_group_from_permutations(const PermGroup& group, int cap) {
    if (group.order() > cap)
        throw ResourceError("finite_group_from_permutations: order beyond cap " +
                            std::to_string(cap));
    int m = (int)group.order();
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int idx = group.index_of(compose(group.elements()[i], group.elements()[j]));
            if (idx < 0) throw InputError("finite_group_from_permutations: set is not closed");
            table[i][j] = idx;
        }
    return FiniteGroup::from_table(std::move(table));
}

std::pair<FiniteGroup, std::vector<int>> group_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        throw InputError(std::string("group JSON: ") + e.what());
    }
    if (!j.contains("order") || !j.contains("table"))
        throw InputError("group JSON: 'order' and 'table' are required");
    int m = j["order"].get<int>();
    auto table = j["table"].get<std::vector<std::vector<int>>>();
    if ((int)table.size() != m) throw InputError("group JSON: table size != order");
    FiniteGroup g = FiniteGroup::from_table(std::move(table));
    if (j.contains("identity") && j["identity"].get<int>() != g.identity())
        throw InputError("group JSON: declared identity disagrees with the table");
    std::vector<int> sigma;
    if (j.contains("sigma")) sigma = j["sigma"].get<std::vector<int>>();
    return {std::move(g), std::move(sigma)};
}

}  // namespace twofold
