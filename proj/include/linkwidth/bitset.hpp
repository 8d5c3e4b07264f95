#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace linkwidth {

// Fixed-width set of small indices (strand or crossing ids).
class IndexSet {
public:
    static constexpr int kCapacity = 128;

    constexpr IndexSet() = default;

    constexpr bool test(int i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    constexpr void set(int i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    constexpr void reset(int i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    constexpr int count() const noexcept {
        int n = 0;
        for (auto w : words_) n += std::popcount(w);
        return n;
    }
    constexpr bool empty() const noexcept {
        for (auto w : words_) {
            if (w != 0) return false;
        }
        return true;
    }
    // True when every index in [0, n) is present.
    constexpr bool covers(int n) const noexcept {
        for (int w = 0; w < kWords; ++w) {
            const int lo = w * 64;
            if (n <= lo) break;
            const int bits = n - lo >= 64 ? 64 : n - lo;
            const std::uint64_t mask = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
            if ((words_[w] & mask) != mask) return false;
        }
        return true;
    }
    constexpr bool contains_all(const IndexSet& other) const noexcept {
        for (int w = 0; w < kWords; ++w) {
            if ((other.words_[w] & ~words_[w]) != 0) return false;
        }
        return true;
    }

    constexpr IndexSet& operator|=(const IndexSet& o) noexcept {
        for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
        return *this;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int w = 0; w < kWords; ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                f(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
    }

    std::size_t hash() const noexcept {
        std::size_t h = 0;
        for (auto w : words_) h = h * 0x9E3779B97F4A7C15ull ^ std::hash<std::uint64_t>{}(w);
        return h;
    }

    friend constexpr bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    static constexpr int kWords = kCapacity / 64;
    std::array<std::uint64_t, kWords> words_{};
};

struct IndexSetHash {
    std::size_t operator()(const IndexSet& s) const noexcept { return s.hash(); }
};

}  // namespace linkwidth
