#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

namespace compsub {

// Fixed-universe dynamic bitset. The universe size is set at construction;
// all binary operations require equal universes.
class Bits {
public:
    Bits() = default;
    explicit Bits(int universe) : n_(universe), w_(words_for(universe), 0) {}

    static Bits of(int universe, std::initializer_list<int> members) {
        Bits b(universe);
        for (int v : members) b.set(v);
        return b;
    }

    static Bits full(int universe) {
        Bits b(universe);
        for (int i = 0; i < universe; ++i) b.set(i);
        return b;
    }

    int universe() const { return n_; }

    void set(int i) { w_[static_cast<size_t>(i) >> 6] |= (1ULL << (i & 63)); }
    void reset(int i) { w_[static_cast<size_t>(i) >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1ULL; }

    int count() const {
        int c = 0;
        for (std::uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (std::uint64_t w : w_) if (w) return false;
        return true;
    }

    Bits& operator|=(const Bits& o) { for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i]; return *this; }
    Bits& operator&=(const Bits& o) { for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i]; return *this; }
    Bits& operator^=(const Bits& o) { for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i]; return *this; }

    friend Bits operator|(Bits a, const Bits& b) { a |= b; return a; }
    friend Bits operator&(Bits a, const Bits& b) { a &= b; return a; }
    friend Bits operator^(Bits a, const Bits& b) { a ^= b; return a; }

    // this \ o
    Bits andnot(const Bits& o) const {
        Bits r(*this);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~o.w_[i];
        return r;
    }

    bool intersects(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i) if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool is_subset_of(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i) if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    int count_and(const Bits& o) const {
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Bits& o) const { return !(*this == o); }

    // First set bit, or -1.
    int first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
        return -1;
    }
    // First set bit strictly after `pos`, or -1.
    int next(int pos) const {
        int i = pos + 1;
        if (i < 0) i = 0;
        size_t word = static_cast<size_t>(i) >> 6;
        if (word >= w_.size()) return -1;
        std::uint64_t cur = w_[word] & ~((i & 63) ? ((1ULL << (i & 63)) - 1) : 0ULL);
        while (true) {
            if (cur) return static_cast<int>(word * 64 + std::countr_zero(cur));
            if (++word >= w_.size()) return -1;
            cur = w_[word];
        }
    }

    template <class F>
    void for_each(F f) const {
        for (int v = first(); v >= 0; v = next(v)) f(v);
    }

    std::vector<int> to_vector() const {
        std::vector<int> r;
        r.reserve(static_cast<size_t>(count()));
        for_each([&](int v) { r.push_back(v); });
        return r;
    }

    std::size_t hash() const {
        std::size_t h = std::hash<int>{}(n_);
        for (std::uint64_t w : w_) h = h * 1099511628211ULL + std::hash<std::uint64_t>{}(w);
        return h;
    }

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    static size_t words_for(int n) { return static_cast<size_t>((n + 63) / 64); }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct BitsHash {
    std::size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace compsub
