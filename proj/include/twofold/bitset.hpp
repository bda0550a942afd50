#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace twofold {

// Dynamic fixed-width bitset used for adjacency rows and vertex sets.
// All two-operand operations assume equal widths.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    void assign(int i, bool v) { v ? set(i) : reset(i); }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // Smallest set bit at position >= from, or -1.
    int next(int from = 0) const {
        if (from >= nbits_) return -1;
        int wi = from >> 6;
        uint64_t w = words_[wi] & (~uint64_t(0) << (from & 63));
        while (true) {
            if (w) {
                int bit = (wi << 6) + std::countr_zero(w);
                return bit < nbits_ ? bit : -1;
            }
            if (++wi >= (int)words_.size()) return -1;
            w = words_[wi];
        }
    }

    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator^=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    // this &= ~o
    Bitset& and_not(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    // Flip all bits, keeping the tail beyond size() zero.
    void flip_all() {
        for (auto& w : words_) w = ~w;
        trim();
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }

    bool is_subset_of(const Bitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool operator==(const Bitset& o) const { return words_ == o.words_; }
    bool operator!=(const Bitset& o) const { return words_ != o.words_; }
    bool operator<(const Bitset& o) const { return words_ < o.words_; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int b = next(0); b >= 0; b = next(b + 1)) out.push_back(b);
        return out;
    }

    uint64_t hash() const {
        uint64_t h = 0xcbf29ce484222325ull;
        for (uint64_t w : words_) {
            h ^= w;
            h *= 0x100000001b3ull;
        }
        return h;
    }

private:
    void trim() {
        int tail = nbits_ & 63;
        if (tail && !words_.empty()) words_.back() &= (~uint64_t(0) >> (64 - tail));
    }

    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

struct BitsetHash {
    size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace twofold
