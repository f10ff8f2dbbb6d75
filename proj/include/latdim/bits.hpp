#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace latdim {

// Fixed-width dynamic bitset sized at construction. Lattices here are small
// (rarely past a few dozen elements) but products can exceed 64, so rows of
// uint64 words rather than a single mask.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    void set(std::size_t i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void clear() { for (auto& w : w_) w = 0; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    // index of lowest set bit, or size() if empty
    std::size_t first() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return k * 64 + std::countr_zero(w_[k]);
        return n_;
    }

    // next set bit at index > i, or size() if none
    std::size_t next(std::size_t i) const {
        ++i;
        if (i >= n_) return n_;
        std::size_t k = i >> 6;
        uint64_t w = w_[k] & (~uint64_t{0} << (i & 63));
        while (true) {
            if (w) return k * 64 + std::countr_zero(w);
            if (++k == w_.size()) return n_;
            w = w_[k];
        }
    }

    Bits& operator&=(const Bits& o) { for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k]; return *this; }
    Bits& operator|=(const Bits& o) { for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k]; return *this; }
    // this := this & ~o
    Bits& andnot(const Bits& o) { for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k]; return *this; }

    friend Bits operator&(Bits a, const Bits& b) { a &= b; return a; }
    friend Bits operator|(Bits a, const Bits& b) { a |= b; return a; }

    bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }

    // true iff every bit of this is also set in o
    bool subset_of(const Bits& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }

    bool intersects(const Bits& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for (std::size_t i = first(); i < n_; i = next(i)) out.push_back(i);
        return out;
    }

private:
    std::size_t n_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace latdim
