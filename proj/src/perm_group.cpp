#include "twofold/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "twofold/errors.hpp"

namespace twofold {

PermGroup::PermGroup(int degree, std::vector<Permutation> elements,
                     std::vector<Permutation> generators)
    : degree_(degree), elements_(std::move(elements)), generators_(std::move(generators)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool PermGroup::contains(const Permutation& p) const { return index_of(p) >= 0; }

int PermGroup::index_of(const Permutation& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || !(*it == p)) return -1;
    return (int)(it - elements_.begin());
}

std::vector<std::vector<int>> PermGroup::orbits() const {
    std::vector<int> parent(degree_);
    for (int v = 0; v < degree_; ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& p : elements_)
        for (int v = 0; v < degree_; ++v) {
            int a = find(v), b = find(p(v));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<std::vector<int>> cells(degree_);
    for (int v = 0; v < degree_; ++v) cells[find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& c : cells)
        if (!c.empty()) out.push_back(std::move(c));
    return out;
}

PermGroup closure(const std::vector<Permutation>& generators, int degree, long long cap) {
    for (const auto& g : generators)
        if (g.degree() != degree) throw InputError("closure: generator degree mismatch");

    std::unordered_set<Permutation, PermutationHash> seen;
    std::deque<Permutation> queue;
    Permutation id = Permutation::identity(degree);
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
        Permutation cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : generators) {
            Permutation next = compose(cur, g);
            if (seen.insert(next).second) {
                if ((long long)seen.size() > cap)
                    throw ResourceError("closure: element cap " + std::to_string(cap) +
                                        " exceeded");
                queue.push_back(std::move(next));
            }
        }
    }
    std::vector<Permutation> elements(seen.begin(), seen.end());
    return PermGroup(degree, std::move(elements), generators);
}

}  // namespace twofold
