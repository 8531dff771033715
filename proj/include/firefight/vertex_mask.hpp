#ifndef FIREFIGHT_VERTEX_MASK_HPP
#define FIREFIGHT_VERTEX_MASK_HPP

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace firefight {

using Vertex = int;

/// Fixed-width vertex bitset used by the search routines.
/// Holds vertex ids 0..kCapacity-1.
class VertexMask {
public:
    static constexpr int kWords = 2;
    static constexpr int kCapacity = 64 * kWords;

    constexpr VertexMask() = default;

    static VertexMask single(Vertex v) {
        VertexMask m;
        m.set(v);
        return m;
    }

    static VertexMask first_n(int n) {
        VertexMask m;
        for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
            m.words_[w] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        return m;
    }

    template <typename Range>
    static VertexMask of(const Range& vs) {
        VertexMask m;
        for (Vertex v : vs)
            m.set(v);
        return m;
    }

    void set(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    [[nodiscard]] bool test(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }

    [[nodiscard]] bool none() const {
        for (auto w : words_)
            if (w != 0)
                return false;
        return true;
    }
    [[nodiscard]] bool any() const { return !none(); }

    [[nodiscard]] int count() const {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    /// Smallest member, or -1 when empty.
    [[nodiscard]] Vertex first() const {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] != 0)
                return 64 * w + std::countr_zero(words_[w]);
        return -1;
    }

    /// Smallest member strictly greater than v, or -1.
    [[nodiscard]] Vertex next(Vertex v) const {
        ++v;
        int w = v >> 6;
        if (w >= kWords)
            return -1;
        std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (v & 63));
        while (true) {
            if (cur != 0)
                return 64 * w + std::countr_zero(cur);
            if (++w >= kWords)
                return -1;
            cur = words_[w];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int w = 0; w < kWords; ++w) {
            std::uint64_t cur = words_[w];
            while (cur != 0) {
                f(64 * w + std::countr_zero(cur));
                cur &= cur - 1;
            }
        }
    }

    [[nodiscard]] std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    [[nodiscard]] bool is_subset_of(const VertexMask& o) const {
        for (int w = 0; w < kWords; ++w)
            if ((words_[w] & ~o.words_[w]) != 0)
                return false;
        return true;
    }
    [[nodiscard]] bool intersects(const VertexMask& o) const {
        for (int w = 0; w < kWords; ++w)
            if ((words_[w] & o.words_[w]) != 0)
                return true;
        return false;
    }

    VertexMask& operator|=(const VertexMask& o) {
        for (int w = 0; w < kWords; ++w)
            words_[w] |= o.words_[w];
        return *this;
    }
    VertexMask& operator&=(const VertexMask& o) {
        for (int w = 0; w < kWords; ++w)
            words_[w] &= o.words_[w];
        return *this;
    }
    /// Set difference.
    VertexMask& operator-=(const VertexMask& o) {
        for (int w = 0; w < kWords; ++w)
            words_[w] &= ~o.words_[w];
        return *this;
    }

    friend VertexMask operator|(VertexMask a, const VertexMask& b) { return a |= b; }
    friend VertexMask operator&(VertexMask a, const VertexMask& b) { return a &= b; }
    friend VertexMask operator-(VertexMask a, const VertexMask& b) { return a -= b; }
    friend bool operator==(const VertexMask&, const VertexMask&) = default;

    [[nodiscard]] std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 33));
    }

private:
    std::array<std::uint64_t, kWords> words_{};
};

struct VertexMaskHash {
    std::size_t operator()(const VertexMask& m) const { return m.hash(); }
};

} // namespace firefight

#endif // FIREFIGHT_VERTEX_MASK_HPP
