#pragma once

// Structure functions φ: 2^[n] → {0,1} of semicoherent systems, stored as
// full truth tables over subset masks (n ≤ 20, so 2^n entries are cheap and
// every formula in this library is a plain subset sum).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bp/errors.hpp"
#include "bp/subset.hpp"

namespace bp {

struct Coherence {
    bool coherent = false;
    std::vector<int> irrelevant;  // components j with Δ_jφ ≡ 0
};

class StructureFunction {
public:
    // Validates endpoints (φ(∅)=0, φ([n])=1) and monotonicity over all
    // covering pairs (A, A∪{i}); the first failing pair is reported.
    static StructureFunction from_truth_table(int n, std::vector<std::uint8_t> table) {
        require_component_count(n);
        const std::size_t want = std::size_t{1} << n;
        if (table.size() != want)
            throw SizeMismatch("truth table has " + std::to_string(table.size()) +
                               " entries, expected 2^" + std::to_string(n) + " = " +
                               std::to_string(want));
        for (std::size_t a = 0; a < want; ++a) {
            if (table[a] > 1)
                throw InvalidParameter("truth table entries must be 0 or 1");
        }
        if (table[0] != 0)
            throw NotSemicoherent("phi(empty set) must be 0", 0, 0);
        const Mask full = full_mask(n);
        if (table[full] != 1)
            throw NotSemicoherent("phi(full set) must be 1", full, full);
        for (Mask a = 0; a <= full; ++a) {
            for (int i = 1; i <= n; ++i) {
                if (contains(a, i)) continue;
                const Mask b = with_component(a, i);
                if (table[a] > table[b])
                    throw NotSemicoherent(
                        "monotonicity violated: phi(" + std::to_string(a) + ") > phi(" +
                            std::to_string(b) + ")",
                        a, b);
            }
        }
        return StructureFunction(n, std::move(table));
    }

    static StructureFunction from_truth_table_hex(int n, std::string_view hex);

    int n() const { return n_; }
    Mask full() const { return full_mask(n_); }
    std::size_t subset_count() const { return table_.size(); }
    const std::vector<std::uint8_t>& table() const { return table_; }

    int operator()(Mask a) const { return table_[a]; }
    int value(Mask a) const { return table_[a]; }

    // Δ_jφ(A) = φ(A∪{j}) − φ(A\{j}); independent of whether j ∈ A, and
    // nonnegative by monotonicity.
    int delta(int j, Mask a) const {
        require_component(n_, j);
        return table_[with_component(a, j)] - table_[without_component(a, j)];
    }

    // Möbius transform m_φ, cached; Σ_{B⊆A} m_φ(B) = φ(A) for every A.
    const std::vector<std::int64_t>& mobius() const {
        if (!mobius_) mobius_ = mobius_transform_of(n_, table_);
        return *mobius_;
    }

    // K is a cut set iff the joint failure of K kills the system.
    bool is_cut_set(Mask k) const { return table_[full() & ~k] == 0; }

    Coherence coherence() const {
        Coherence c;
        for (int j = 1; j <= n_; ++j) {
            bool relevant = false;
            const Mask bit = component_bit(j);
            for (Mask a = 0; a <= full(); ++a) {
                if (a & bit) continue;
                if (table_[a | bit] > table_[a]) {
                    relevant = true;
                    break;
                }
            }
            if (!relevant) c.irrelevant.push_back(j);
        }
        c.coherent = c.irrelevant.empty();
        return c;
    }

    // Little-endian hex encoding of the table: byte b holds subset indices
    // 8b..8b+7, with index 8b in the least significant bit.
    std::string truth_table_hex() const {
        static const char* digits = "0123456789abcdef";
        const std::size_t nbytes = (table_.size() + 7) / 8;
        std::string out;
        out.reserve(2 * nbytes);
        for (std::size_t b = 0; b < nbytes; ++b) {
            unsigned byte = 0;
            for (std::size_t k = 0; k < 8; ++k) {
                const std::size_t idx = 8 * b + k;
                if (idx < table_.size() && table_[idx]) byte |= 1u << k;
            }
            out.push_back(digits[byte >> 4]);
            out.push_back(digits[byte & 0xF]);
        }
        return out;
    }

    // In-place Möbius transform over the subset lattice, O(n·2^n).
    // Coefficients are integers and stay well inside 64 bits for n ≤ 20.
    static std::vector<std::int64_t> mobius_transform_of(int n,
                                                         const std::vector<std::uint8_t>& table) {
        std::vector<std::int64_t> m(table.begin(), table.end());
        for (int i = 0; i < n; ++i) {
            const Mask bit = Mask{1} << i;
            for (Mask a = 0; a < m.size(); ++a)
                if (a & bit) m[a] -= m[a ^ bit];
        }
        return m;
    }

    // Inverse transform (subset sums): recovers the truth table from m_φ.
    static std::vector<std::int64_t> inverse_mobius(int n, std::vector<std::int64_t> m) {
        for (int i = 0; i < n; ++i) {
            const Mask bit = Mask{1} << i;
            for (Mask a = 0; a < m.size(); ++a)
                if (a & bit) m[a] += m[a ^ bit];
        }
        return m;
    }

private:
    StructureFunction(int n, std::vector<std::uint8_t> table)
        : n_(n), table_(std::move(table)) {}

    int n_;
    std::vector<std::uint8_t> table_;
    mutable std::optional<std::vector<std::int64_t>> mobius_;
};

inline std::vector<std::int64_t> mobius_transform(const StructureFunction& phi) {
    return StructureFunction::mobius_transform_of(phi.n(), phi.table());
}

inline StructureFunction StructureFunction::from_truth_table_hex(int n, std::string_view hex) {
    require_component_count(n);
    const std::size_t entries = std::size_t{1} << n;
    const std::size_t nbytes = (entries + 7) / 8;
    if (hex.size() != 2 * nbytes)
        throw SizeMismatch("truth_table_hex has " + std::to_string(hex.size()) +
                           " characters, expected " + std::to_string(2 * nbytes) +
                           " for n = " + std::to_string(n));
    auto nibble = [&](char c) -> unsigned {
        if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
        if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
        throw InvalidParameter(std::string("bad hex digit '") + c + "' in truth_table_hex");
    };
    std::vector<std::uint8_t> table(entries, 0);
    for (std::size_t b = 0; b < nbytes; ++b) {
        const unsigned byte = (nibble(hex[2 * b]) << 4) | nibble(hex[2 * b + 1]);
        for (std::size_t k = 0; k < 8; ++k) {
            const std::size_t idx = 8 * b + k;
            const bool bit = (byte >> k) & 1u;
            if (idx < entries)
                table[idx] = bit ? 1 : 0;
            else if (bit)
                throw InvalidParameter("truth_table_hex has padding bits set");
        }
    }
    return from_truth_table(n, std::move(table));
}

enum class StandardStructure { Series, Parallel, KOutOfN, Bridge };

// k-out-of-n in the order-statistic sense φ(x) = x_{k:n}: the system dies at
// the k-th component failure, i.e. φ(A)=1 iff |A| ≥ n−k+1.
inline StructureFunction make_k_out_of_n(int n, int k) {
    require_component_count(n);
    if (k < 1 || k > n)
        throw InvalidParameter("k must be in (0, n] for a k-out-of-n structure");
    const std::size_t entries = std::size_t{1} << n;
    std::vector<std::uint8_t> table(entries, 0);
    for (Mask a = 0; a < entries; ++a)
        table[a] = subset_size(a) >= n - k + 1 ? 1 : 0;
    return StructureFunction::from_truth_table(n, std::move(table));
}

inline StructureFunction make_series(int n) { return make_k_out_of_n(n, 1); }

inline StructureFunction make_parallel(int n) { return make_k_out_of_n(n, n); }

// The five-component bridge with minimal path sets
// {1,4}, {2,5}, {1,3,5}, {2,3,4}.
inline StructureFunction make_bridge() {
    const Mask paths[] = {
        component_bit(1) | component_bit(4),
        component_bit(2) | component_bit(5),
        component_bit(1) | component_bit(3) | component_bit(5),
        component_bit(2) | component_bit(3) | component_bit(4),
    };
    std::vector<std::uint8_t> table(32, 0);
    for (Mask a = 0; a < 32; ++a)
        for (Mask p : paths)
            if ((a & p) == p) {
                table[a] = 1;
                break;
            }
    return StructureFunction::from_truth_table(5, std::move(table));
}

inline StructureFunction make_standard(StandardStructure kind, int n, int k = 0) {
    switch (kind) {
        case StandardStructure::Series:
            return make_series(n);
        case StandardStructure::Parallel:
            return make_parallel(n);
        case StandardStructure::KOutOfN:
            return make_k_out_of_n(n, k);
        case StandardStructure::Bridge:
            if (n != 5) throw InvalidParameter("the bridge structure has exactly 5 components");
            return make_bridge();
    }
    throw InvalidParameter("unknown standard structure kind");
}

}  // namespace bp
