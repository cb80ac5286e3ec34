#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <functional>
#include <stdexcept>
#include <string>

namespace lattice {

/// Hard cap on the number of variables per alphabet. Exact expansion of the
/// determinants is only feasible for diagrams of up to 8 cells anyway.
inline constexpr int kMaxVars = 8;

/// Exponent vector of a monomial in x_1..x_m, y_1..y_m, stored as 16 bytes
/// (x block first). Slots beyond m stay zero, so monomials of the same
/// alphabet compare uniformly regardless of m.
///
/// Term order: total degree first, then lexicographic on the exponent bytes
/// with x_1 most significant. Greater means closer to the leading term.
struct Monomial {
    std::array<std::uint8_t, 2 * kMaxVars> e{};
    std::uint16_t deg = 0;

    int x(int i) const { return e[i]; }
    int y(int i) const { return e[kMaxVars + i]; }

    void set_x(int i, int v) {
        deg = static_cast<std::uint16_t>(deg - e[i] + v);
        e[i] = static_cast<std::uint8_t>(v);
    }
    void set_y(int i, int v) {
        deg = static_cast<std::uint16_t>(deg - e[kMaxVars + i] + v);
        e[kMaxVars + i] = static_cast<std::uint8_t>(v);
    }

    int x_degree() const {
        int d = 0;
        for (int i = 0; i < kMaxVars; ++i) d += e[i];
        return d;
    }
    int y_degree() const { return deg - x_degree(); }
    int degree() const { return deg; }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.e == b.e;
    }
};

/// Packed big-endian view of the exponent bytes, for fast lexicographic
/// comparison (byte 0 ends up most significant).
inline std::pair<std::uint64_t, std::uint64_t> packed_view(const Monomial& m) {
    std::uint64_t hi, lo;
    std::memcpy(&hi, m.e.data(), 8);
    std::memcpy(&lo, m.e.data() + 8, 8);
    if constexpr (std::endian::native == std::endian::little) {
        hi = __builtin_bswap64(hi);
        lo = __builtin_bswap64(lo);
    }
    return {hi, lo};
}

inline bool mono_less(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    auto [ah, al] = packed_view(a);
    auto [bh, bl] = packed_view(b);
    if (ah != bh) return ah < bh;
    return al < bl;
}

inline bool mono_greater(const Monomial& a, const Monomial& b) { return mono_less(b, a); }

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::uint64_t h1, h2;
        std::memcpy(&h1, m.e.data(), 8);
        std::memcpy(&h2, m.e.data() + 8, 8);
        std::uint64_t h = h1 * 0x9e3779b97f4a7c15ULL;
        h ^= h2 + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

inline void check_exponent(int v) {
    if (v < 0 || v > 255) throw std::invalid_argument("exponent out of range");
}

}  // namespace lattice
