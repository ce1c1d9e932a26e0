#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace ramsey {

// Dynamic bitset sized at construction. Used as the adjacency substrate, so
// the operations that matter are bulk intersection and popcount.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

    int capacity() const { return n_; }

    bool test(int i) const {
        assert(i >= 0 && i < n_);
        return (w_[i >> 6] >> (i & 63)) & 1;
    }
    void set(int i) {
        assert(i >= 0 && i < n_);
        w_[i >> 6] |= std::uint64_t(1) << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < n_);
        w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }
    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    // Clears bits [0, i].
    void reset_prefix(int i) {
        if (i < 0) return;
        if (i >= n_ - 1) {
            clear();
            return;
        }
        std::size_t word = std::size_t(i) >> 6;
        for (std::size_t w = 0; w < word; ++w) w_[w] = 0;
        w_[word] &= ~(~std::uint64_t(0) >> (63 - (i & 63)));
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // this &= ~o
    Bitset& subtract(const Bitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) {
        a &= b;
        return a;
    }
    friend Bitset operator|(Bitset a, const Bitset& b) {
        a |= b;
        return a;
    }

    // |a & b| without allocating.
    static int and_count(const Bitset& a, const Bitset& b) {
        assert(a.n_ == b.n_);
        int c = 0;
        for (std::size_t i = 0; i < a.w_.size(); ++i)
            c += std::popcount(a.w_[i] & b.w_[i]);
        return c;
    }

    bool intersects(const Bitset& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    // First set bit, or -1.
    int find_first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i << 6) + std::countr_zero(w_[i]);
        return -1;
    }
    // Next set bit strictly after i, or -1.
    int find_next(int i) const {
        ++i;
        if (i >= n_) return -1;
        std::size_t word = std::size_t(i) >> 6;
        std::uint64_t cur = w_[word] & (~std::uint64_t(0) << (i & 63));
        while (true) {
            if (cur) return int(word << 6) + std::countr_zero(cur);
            if (++word >= w_.size()) return -1;
            cur = w_[word];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int i = find_first(); i >= 0; i = find_next(i)) out.push_back(i);
        return out;
    }

    bool operator==(const Bitset&) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace ramsey
