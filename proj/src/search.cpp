#include "twofold/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "twofold/errors.hpp"
#include "twofold/refinement.hpp"

namespace twofold {

uint64_t default_node_budget() {
    if (const char* env = std::getenv("TWOFOLD_NODE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return (uint64_t)v;
    }
    return kDefaultNodeBudget;
}

namespace {

// Backtracking over slot assignments. A slot is "p at vertex v" or, in
// two-fold mode, also "q at vertex v". Assigning p(v)=w checks the pair
// condition against every q-assigned vertex via one bit-row comparison;
// q mirrors it. Every vertex pair is therefore checked exactly once, when
// the later of its two slots is assigned.
class PairSearch {
public:
    PairSearch(const Graph& dom, const Graph& cod, bool twofold, bool find_all,
               const SearchLimits& limits)
        : dom_(dom),
          cod_(cod),
          n_(dom.size()),
          twofold_(twofold),
          find_all_(find_all),
          budget_(limits.node_budget ? limits.node_budget : default_node_budget()),
          threads_(std::max(1, limits.threads)) {}

    std::vector<TfPair> run() {
        if (dom_.size() != cod_.size()) return {};
        if (!compute_colors()) return {};

        State st;
        st.pimg.assign(n_, -1);
        st.qimg.assign(n_, -1);
        st.pused = Bitset(n_);
        st.qused = Bitset(n_);
        st.pmapped.assign(n_, Bitset(n_));
        st.qmapped.assign(n_, Bitset(n_));
        st.unassigned = twofold_ ? 2 * n_ : n_;

        if (threads_ > 1)
            run_parallel(st);
        else
            recurse(st);

        if (budget_hit_.load()) throw ResourceError("search: node budget exceeded");
        std::sort(results_.begin(), results_.end(),
                  [](const TfPair& a, const TfPair& b) { return a.p < b.p; });
        return std::move(results_);
    }

private:
    struct State {
        std::vector<int> pimg, qimg;
        Bitset pused, qused;
        std::vector<Bitset> pmapped, qmapped;
        int unassigned = 0;
    };

    // Joint refinement colors; false when the color histograms differ (no
    // bijection can exist).
    bool compute_colors() {
        if (&dom_ == &cod_ || dom_ == cod_) {
            Refinement r = ne_refinement(dom_);
            dom_color_ = cod_color_ = r.key;
        } else {
            Graph joint(2 * n_, dom_.allow_loops() || cod_.allow_loops());
            for (int v = 0; v < n_; ++v)
                for (int w = 0; w < n_; ++w) {
                    if (dom_.adjacent(v, w)) joint.add_edge(v, w);
                    if (cod_.adjacent(v, w)) joint.add_edge(n_ + v, n_ + w);
                }
            Refinement r = ne_refinement(joint);
            dom_color_.assign(r.key.begin(), r.key.begin() + n_);
            cod_color_.assign(r.key.begin() + n_, r.key.end());
        }
        std::vector<uint32_t> a = dom_color_, b = cod_color_;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;

        uint32_t maxc = 0;
        for (uint32_t c : dom_color_) maxc = std::max(maxc, c);
        color_mask_.assign(maxc + 1, Bitset(n_));
        for (int w = 0; w < n_; ++w)
            if (cod_color_[w] <= maxc) color_mask_[cod_color_[w]].set(w);
        return true;
    }

    // The budget counts candidate feasibility probes.
    bool spend() {
        if (nodes_.fetch_add(1, std::memory_order_relaxed) >= budget_) {
            budget_hit_.store(true);
            return false;
        }
        return true;
    }

    bool candidate_ok_p(State& st, int v, int w) {
        if (!spend()) return false;
        if (twofold_) return (cod_.row(w) & st.qused) == st.qmapped[v];
        return (cod_.row(w) & st.pused) == st.pmapped[v] &&
               dom_.adjacent(v, v) == cod_.adjacent(w, w);
    }
    bool candidate_ok_q(State& st, int v, int w) {
        if (!spend()) return false;
        return (cod_.row(w) & st.pused) == st.pmapped[v];
    }

    // Slot encoding: v for p-slots, n+v for q-slots.
    // Returns the most constrained open slot and its candidate list; above
    // kStaticOrderThreshold slots are taken in fixed p/q alternation
    // instead of scanning every open slot.
    static constexpr int kStaticOrderThreshold = 2048;

    int select_slot(State& st, std::vector<int>& cands) {
        if (n_ > kStaticOrderThreshold) return select_slot_static(st, cands);
        int best_slot = -1;
        size_t best_count = (size_t)n_ + 1;
        std::vector<int> cur;
        for (int slot = 0; slot < (twofold_ ? 2 * n_ : n_); ++slot) {
            bool is_p = slot < n_;
            int v = is_p ? slot : slot - n_;
            if ((is_p ? st.pimg[v] : st.qimg[v]) >= 0) continue;
            cur.clear();
            Bitset mask = color_mask_[dom_color_[v]];
            mask.and_not(is_p ? st.pused : st.qused);
            for (int w = mask.next(0); w >= 0; w = mask.next(w + 1)) {
                if (budget_hit_.load(std::memory_order_relaxed)) return -1;
                if (is_p ? candidate_ok_p(st, v, w) : candidate_ok_q(st, v, w)) {
                    cur.push_back(w);
                    if (cur.size() >= best_count) break;  // cannot beat best
                }
            }
            if (cur.size() < best_count) {
                best_count = cur.size();
                best_slot = slot;
                cands = cur;
                if (best_count <= 1) break;
            }
        }
        return best_slot;
    }

    int select_slot_static(State& st, std::vector<int>& cands) {
        for (int v = 0; v < n_; ++v) {
            int slot = -1;
            if (st.pimg[v] < 0)
                slot = v;
            else if (twofold_ && st.qimg[v] < 0)
                slot = n_ + v;
            if (slot < 0) continue;
            bool is_p = slot < n_;
            cands.clear();
            Bitset mask = color_mask_[dom_color_[v]];
            mask.and_not(is_p ? st.pused : st.qused);
            for (int w = mask.next(0); w >= 0; w = mask.next(w + 1)) {
                if (budget_hit_.load(std::memory_order_relaxed)) return -1;
                if (is_p ? candidate_ok_p(st, v, w) : candidate_ok_q(st, v, w))
                    cands.push_back(w);
            }
            return slot;
        }
        return -1;
    }

    void assign(State& st, int slot, int w) const {
        bool is_p = slot < n_;
        int v = is_p ? slot : slot - n_;
        if (is_p) {
            st.pimg[v] = w;
            st.pused.set(w);
            const Bitset& nb = dom_.row(v);
            for (int u = nb.next(0); u >= 0; u = nb.next(u + 1)) st.pmapped[u].set(w);
        } else {
            st.qimg[v] = w;
            st.qused.set(w);
            const Bitset& nb = dom_.row(v);
            for (int u = nb.next(0); u >= 0; u = nb.next(u + 1)) st.qmapped[u].set(w);
        }
        --st.unassigned;
    }

    void unassign(State& st, int slot, int w) const {
        bool is_p = slot < n_;
        int v = is_p ? slot : slot - n_;
        if (is_p) {
            st.pimg[v] = -1;
            st.pused.reset(w);
            const Bitset& nb = dom_.row(v);
            for (int u = nb.next(0); u >= 0; u = nb.next(u + 1)) st.pmapped[u].reset(w);
        } else {
            st.qimg[v] = -1;
            st.qused.reset(w);
            const Bitset& nb = dom_.row(v);
            for (int u = nb.next(0); u >= 0; u = nb.next(u + 1)) st.qmapped[u].reset(w);
        }
        ++st.unassigned;
    }

    void emit(const State& st) {
        std::lock_guard<std::mutex> lock(result_mutex_);
        if (!find_all_ && !results_.empty()) return;
        TfPair pair;
        pair.p = Permutation(st.pimg);
        pair.q = twofold_ ? Permutation(st.qimg) : pair.p;
        results_.push_back(std::move(pair));
        if (!find_all_) stop_.store(true);
    }

    void recurse(State& st) {
        if (stop_.load(std::memory_order_relaxed) || budget_hit_.load(std::memory_order_relaxed))
            return;
        if (st.unassigned == 0) {
            emit(st);
            return;
        }
        std::vector<int> cands;
        int slot = select_slot(st, cands);
        if (slot < 0) return;
        for (int w : cands) {
            if (budget_hit_.load(std::memory_order_relaxed)) return;
            assign(st, slot, w);
            recurse(st);
            unassign(st, slot, w);
            if (stop_.load(std::memory_order_relaxed)) return;
        }
    }

    void run_parallel(State& st) {
        std::vector<int> cands;
        int slot = select_slot(st, cands);
        if (slot < 0 || cands.empty()) return;
        std::atomic<size_t> next(0);
        auto worker = [&]() {
            State local = st;
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= cands.size()) return;
                if (stop_.load() || budget_hit_.load()) return;
                assign(local, slot, cands[i]);
                recurse(local);
                unassign(local, slot, cands[i]);
            }
        };
        std::vector<std::thread> pool;
        int nthreads = std::min<int>(threads_, (int)cands.size());
        pool.reserve(nthreads);
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    const Graph& dom_;
    const Graph& cod_;
    int n_;
    bool twofold_;
    bool find_all_;
    uint64_t budget_;
    int threads_;

    std::vector<uint32_t> dom_color_, cod_color_;
    std::vector<Bitset> color_mask_;

    std::vector<TfPair> results_;
    std::mutex result_mutex_;
    std::atomic<uint64_t> nodes_{0};
    std::atomic<bool> stop_{false};
    std::atomic<bool> budget_hit_{false};
};

}  // namespace

std::vector<TfPair> find_tf_pairs(const Graph& dom, const Graph& cod, bool find_all,
                                  const SearchLimits& limits) {
    PairSearch search(dom, cod, /*twofold=*/true, find_all, limits);
    return search.run();
}

std::vector<Permutation> find_isomorphisms(const Graph& dom, const Graph& cod, bool find_all,
                                           const SearchLimits& limits) {
    PairSearch search(dom, cod, /*twofold=*/false, find_all, limits);
    std::vector<Permutation> out;
    for (auto& pair : search.run()) out.push_back(std::move(pair.p));
    return out;
}

}  // namespace twofold
