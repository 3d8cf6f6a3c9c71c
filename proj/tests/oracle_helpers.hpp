#pragma once

// Test-side oracles, written from the bare definitions so they stay
// independent of the library's evaluation paths.

#include <cmath>
#include <map>
#include <vector>

#include "bp/lifetimes.hpp"
#include "bp/rng.hpp"
#include "bp/structure.hpp"

namespace test_oracle {

using bp::Mask;
using bp::Permutation;
using bp::Rational;

// Möbius transform straight from the alternating-sum definition,
// m(A) = Σ_{B⊆A} (-1)^{|A|-|B|} φ(B).
inline std::vector<long long> direct_mobius(const bp::StructureFunction& phi) {
    const Mask full = phi.full();
    std::vector<long long> m(full + 1, 0);
    for (Mask a = 0; a <= full; ++a) {
        long long acc = 0;
        bp::for_each_subset_of(a, [&](Mask b) {
            const int sign = (bp::subset_size(a) - bp::subset_size(b)) % 2 == 0 ? 1 : -1;
            acc += sign * phi(b);
        });
        m[a] = acc;
    }
    return m;
}

// q_j(A) by definition: orderings whose best |A| components are exactly A
// and whose next-best is j.
inline Rational brute_qj(int n, const std::map<Permutation, Rational>& probs, int j, Mask a) {
    Rational total = 0;
    const int size = bp::subset_size(a);
    for (const auto& [perm, w] : probs) {
        Mask top = 0;
        for (int i = n - size; i < n; ++i) top |= bp::component_bit(perm[i]);
        if (top == a && perm[n - size - 1] == j) total += w;
    }
    return total;
}

// q(A) by definition: the best |A| components are exactly A.
inline Rational brute_q(int n, const std::map<Permutation, Rational>& probs, Mask a) {
    const int size = bp::subset_size(a);
    if (size == 0 || size == n) return Rational(1);
    Rational total = 0;
    for (const auto& [perm, w] : probs) {
        Mask top = 0;
        for (int i = n - size; i < n; ++i) top |= bp::component_bit(perm[i]);
        if (top == a) total += w;
    }
    return total;
}

// Barlow–Proschan and signature by the cut-set characterization: the killer
// is σ(i) for the first i such that {σ(1),...,σ(i)} is a cut set.
struct BruteIndices {
    std::vector<Rational> bp;
    std::vector<Rational> p;
};

inline BruteIndices brute_indices(const bp::StructureFunction& phi,
                                  const std::map<Permutation, Rational>& probs) {
    const int n = phi.n();
    BruteIndices out{std::vector<Rational>(n, Rational{}), std::vector<Rational>(n, Rational{})};
    for (const auto& [perm, w] : probs) {
        Mask failed = 0;
        for (int i = 0; i < n; ++i) {
            failed |= bp::component_bit(perm[i]);
            if (phi.is_cut_set(failed)) {
                out.bp[perm[i] - 1] += w;
                out.p[i] += w;
                break;
            }
        }
    }
    return out;
}

inline std::map<Permutation, Rational> uniform_probs(int n) {
    Permutation perm(n);
    for (int i = 0; i < n; ++i) perm[i] = static_cast<std::uint8_t>(i + 1);
    std::map<Permutation, Rational> probs;
    const Rational w(1, bp::factorial(n));
    do {
        probs.emplace(perm, w);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return probs;
}

// Random rational law on the n! orderings: small integer weights normalized
// by their exact sum. Deterministic per (seed, index).
inline std::map<Permutation, Rational> random_order_probs(int n, std::uint64_t seed,
                                                          std::uint64_t index) {
    Permutation perm(n);
    for (int i = 0; i < n; ++i) perm[i] = static_cast<std::uint8_t>(i + 1);
    std::map<Permutation, Rational> weights;
    std::uint64_t counter = index * 50000;
    Rational sum = 0;
    do {
        const Rational w(bp::counter_below(seed, counter++, 10), 1);
        weights.emplace(perm, w);
        sum += w;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (sum == 0) {
        weights.begin()->second = 1;
        sum = 1;
    }
    for (auto& [k, w] : weights) w /= sum;
    return weights;
}

inline double reference_entropy(const std::vector<double>& w) {
    double h = 0.0;
    for (double x : w)
        if (x > 0.0) h -= x * std::log(x);
    return h / std::log(static_cast<double>(w.size()));
}

}  // namespace test_oracle
