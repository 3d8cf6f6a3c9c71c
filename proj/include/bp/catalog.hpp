#pragma once

// Exhaustive and randomized generation of semicoherent structures.
//
// Enumeration walks subsets in increasing-popcount order; at each subset the
// value is free iff no already-assigned covered subset forces a 1, which
// yields exactly the monotone functions with fixed endpoints (Dedekind
// counts minus the two constants: 1, 4, 18, 166, 7579 for n = 1..5).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "bp/rng.hpp"
#include "bp/structure.hpp"

namespace bp {

template <typename F>
void for_each_semicoherent(int n, F&& f) {
    require_component_count(n);
    if (n > 6)
        throw InvalidParameter("semicoherent enumeration is limited to n <= 6");
    const std::size_t entries = std::size_t{1} << n;
    std::vector<Mask> order(entries);
    for (std::size_t i = 0; i < entries; ++i) order[i] = static_cast<Mask>(i);
    std::stable_sort(order.begin(), order.end(),
                     [](Mask a, Mask b) { return subset_size(a) < subset_size(b); });

    std::vector<std::uint8_t> table(entries, 0);
    const Mask full = full_mask(n);
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == entries) {
            f(const_cast<const std::vector<std::uint8_t>&>(table));
            return;
        }
        const Mask a = order[idx];
        if (a == 0) {
            table[0] = 0;
            rec(idx + 1);
            return;
        }
        std::uint8_t lower = 0;
        Mask m = a;
        while (m != 0) {
            const Mask bit = m & (0u - m);
            lower = std::max(lower, table[a ^ bit]);
            m ^= bit;
        }
        if (a == full) {
            table[a] = 1;
            rec(idx + 1);  // endpoint forces 1; prune branches where a 0 was required
            return;
        }
        if (lower == 0) {
            table[a] = 0;
            rec(idx + 1);
        }
        table[a] = 1;
        rec(idx + 1);
    };
    rec(0);
}

inline std::vector<StructureFunction> semicoherent_catalog(int n) {
    std::vector<StructureFunction> out;
    for_each_semicoherent(n, [&](const std::vector<std::uint8_t>& table) {
        out.push_back(StructureFunction::from_truth_table(n, table));
    });
    return out;
}

inline std::vector<StructureFunction> coherent_catalog(int n) {
    std::vector<StructureFunction> out;
    for_each_semicoherent(n, [&](const std::vector<std::uint8_t>& table) {
        StructureFunction phi = StructureFunction::from_truth_table(n, table);
        if (phi.coherence().coherent) out.push_back(std::move(phi));
    });
    return out;
}

// Random semicoherent structure: the union of a few random nonempty path
// sets (monotone by construction; endpoints hold since path sets are
// nonempty subsets of [n]). Deterministic per (seed, index).
inline StructureFunction random_semicoherent(int n, std::uint64_t seed, std::uint64_t index) {
    require_component_count(n);
    const std::uint64_t base = index * 64;
    const Mask full = full_mask(n);
    const int npaths = 1 + static_cast<int>(counter_below(seed, base, 2 * n));
    std::vector<Mask> paths;
    for (int p = 0; p < npaths; ++p) {
        Mask m = static_cast<Mask>(counter_u64(seed, base + 1 + p)) & full;
        if (m == 0) m = component_bit(1 + static_cast<int>(counter_below(seed, base + 32 + p, n)));
        paths.push_back(m);
    }
    const std::size_t entries = std::size_t{1} << n;
    std::vector<std::uint8_t> table(entries, 0);
    for (Mask a = 0; a < entries; ++a)
        for (Mask p : paths)
            if ((a & p) == p) {
                table[a] = 1;
                break;
            }
    return StructureFunction::from_truth_table(n, std::move(table));
}

}  // namespace bp
