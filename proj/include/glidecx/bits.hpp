#ifndef GLIDECX_BITS_HPP
#define GLIDECX_BITS_HPP

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace glidecx {

// Fixed-universe bit vector. Used both for edge sets (elements of the power
// group of E, where the product is symmetric difference) and for vertex sets.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t universe)
        : size_(universe), words_((universe + 63) / 64, 0) {}

    static Bits of(std::size_t universe, std::initializer_list<std::uint32_t> idx) {
        Bits b(universe);
        for (auto i : idx) b.set(i);
        return b;
    }
    static Bits of(std::size_t universe, const std::vector<std::uint32_t>& idx) {
        Bits b(universe);
        for (auto i : idx) b.set(i);
        return b;
    }

    std::size_t universe() const { return size_; }

    bool test(std::size_t i) const {
        assert(i < size_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) {
        assert(i < size_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(std::size_t i) {
        assert(i < size_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const {
        for (auto w : words_) if (w) return false;
        return true;
    }
    bool any() const { return !empty(); }

    // Group product in the power group: symmetric difference.
    friend Bits operator^(Bits a, const Bits& b) {
        assert(a.size_ == b.size_);
        for (std::size_t i = 0; i < a.words_.size(); ++i) a.words_[i] ^= b.words_[i];
        return a;
    }
    friend Bits operator&(Bits a, const Bits& b) {
        assert(a.size_ == b.size_);
        for (std::size_t i = 0; i < a.words_.size(); ++i) a.words_[i] &= b.words_[i];
        return a;
    }
    friend Bits operator|(Bits a, const Bits& b) {
        assert(a.size_ == b.size_);
        for (std::size_t i = 0; i < a.words_.size(); ++i) a.words_[i] |= b.words_[i];
        return a;
    }
    // Set difference a \ b.
    friend Bits operator-(Bits a, const Bits& b) {
        assert(a.size_ == b.size_);
        for (std::size_t i = 0; i < a.words_.size(); ++i) a.words_[i] &= ~b.words_[i];
        return a;
    }
    Bits& operator^=(const Bits& b) { *this = *this ^ b; return *this; }
    Bits& operator|=(const Bits& b) { *this = *this | b; return *this; }
    Bits& operator&=(const Bits& b) { *this = *this & b; return *this; }

    bool disjoint(const Bits& b) const {
        assert(size_ == b.size_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & b.words_[i]) return false;
        return true;
    }
    bool subset_of(const Bits& b) const {
        assert(size_ == b.size_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~b.words_[i]) return false;
        return true;
    }

    friend bool operator==(const Bits& a, const Bits& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }
    friend bool operator!=(const Bits& a, const Bits& b) { return !(a == b); }

    // Sorted-index-list lexicographic order: of two distinct sets, the one
    // containing the smallest index in their symmetric difference is least.
    // Canonical bases, state ordering and cycle identifiers all use it.
    static bool lex_less(const Bits& a, const Bits& b) {
        assert(a.size_ == b.size_);
        for (std::size_t i = 0; i < a.words_.size(); ++i) {
            std::uint64_t d = a.words_[i] ^ b.words_[i];
            if (d) {
                std::uint64_t low = d & (~d + 1);
                return (a.words_[i] & low) != 0;
            }
        }
        return false;
    }

    std::vector<std::uint32_t> indices() const {
        std::vector<std::uint32_t> out;
        out.reserve(count());
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t x = words_[w];
            while (x) {
                out.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(x)));
                x &= x - 1;
            }
        }
        return out;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t x = words_[w];
            while (x) {
                fn(static_cast<std::uint32_t>(w * 64 + std::countr_zero(x)));
                x &= x - 1;
            }
        }
    }

    std::size_t hash() const {
        std::size_t h = size_ * 0x9e3779b97f4a7c15ull;
        for (auto w : words_) h = (h ^ w) * 0x100000001b3ull;
        return h;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsHash {
    std::size_t operator()(const Bits& b) const { return b.hash(); }
};

struct BitsLexLess {
    bool operator()(const Bits& a, const Bits& b) const { return Bits::lex_less(a, b); }
};

} // namespace glidecx

#endif
