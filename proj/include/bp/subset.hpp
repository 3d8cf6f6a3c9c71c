#pragma once

// Component subsets as bit masks.
//
// Components are numbered 1..n. A subset A ⊆ {1,...,n} is encoded
// little-endian by component index: bit i-1 of the mask is set iff
// component i ∈ A. Every module and every serialized format shares this
// convention.

#include <bit>
#include <cstdint>
#include <vector>

#include "bp/errors.hpp"

namespace bp {

using Mask = std::uint32_t;

inline constexpr int kMaxComponents = 20;

constexpr Mask component_bit(int j) { return Mask{1} << (j - 1); }

constexpr Mask full_mask(int n) { return (Mask{1} << n) - 1; }

constexpr bool contains(Mask a, int j) { return (a & component_bit(j)) != 0; }

constexpr Mask with_component(Mask a, int j) { return a | component_bit(j); }

constexpr Mask without_component(Mask a, int j) { return a & ~component_bit(j); }

inline int subset_size(Mask a) { return std::popcount(a); }

inline std::vector<int> components_of(Mask a) {
    std::vector<int> out;
    while (a != 0) {
        int bit = std::countr_zero(a);
        out.push_back(bit + 1);
        a &= a - 1;
    }
    return out;
}

// Visits every submask of `sup`, including sup itself and the empty set.
template <typename F>
void for_each_subset_of(Mask sup, F&& f) {
    Mask sub = sup;
    while (true) {
        f(sub);
        if (sub == 0) break;
        sub = (sub - 1) & sup;
    }
}

// Visits every superset of `base` contained in `universe` (base ⊆ universe).
template <typename F>
void for_each_superset_within(Mask base, Mask universe, F&& f) {
    const Mask free = universe & ~base;
    for_each_subset_of(free, [&](Mask t) { f(base | t); });
}

namespace detail {

struct BinomialTable {
    std::uint64_t c[kMaxComponents + 1][kMaxComponents + 1] = {};
    constexpr BinomialTable() {
        for (int n = 0; n <= kMaxComponents; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
        }
    }
};

inline constexpr BinomialTable kBinomial{};

}  // namespace detail

// C(n,k) for 0 ≤ n ≤ 20; exact in 64 bits over that range.
constexpr std::uint64_t binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n || n > kMaxComponents) return 0;
    return detail::kBinomial.c[n][k];
}

// n! for n ≤ 20 (20! still fits in 64 bits).
constexpr std::uint64_t factorial(int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
}

inline void require_component_count(int n) {
    if (n < 1 || n > kMaxComponents)
        throw InvalidParameter("component count must be in [1, " +
                               std::to_string(kMaxComponents) + "], got " + std::to_string(n));
}

inline void require_component(int n, int j) {
    if (j < 1 || j > n)
        throw InvalidParameter("component index must be in [1, " + std::to_string(n) +
                               "], got " + std::to_string(j));
}

}  // namespace bp
