#pragma once

// Independent verification paths: replaying failure sequences sample by
// sample (Monte Carlo) and exhaustive enumeration over permutation laws.
// Both walk failures in increasing lifetime order, removing components from
// the working set until φ drops to 0 — the component whose removal does it
// is the killer, its position the rank.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "bp/index_vector.hpp"
#include "bp/lifetimes.hpp"
#include "bp/structure.hpp"

namespace bp {

// Worker cap for sampling loops; BP_THREADS overrides hardware concurrency.
inline int worker_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("BP_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) hw = std::min(hw, cap);
    }
    return hw;
}

struct SimulationRecord {
    std::vector<double> lifetimes;
    std::vector<int> failure_order;  // failure_order[i] fails (i+1)-th
    int killer = 0;                  // component j with T = X_j
    int rank = 0;                    // k with T = X_{k:n}, 1-based
};

inline SimulationRecord replay_failure_sequence(const StructureFunction& phi,
                                                const std::vector<double>& lifetimes) {
    const int n = phi.n();
    if (static_cast<int>(lifetimes.size()) != n)
        throw SizeMismatch("lifetime vector length does not match the structure");
    SimulationRecord rec;
    rec.lifetimes = lifetimes;
    rec.failure_order.resize(n);
    std::iota(rec.failure_order.begin(), rec.failure_order.end(), 1);
    std::sort(rec.failure_order.begin(), rec.failure_order.end(),
              [&](int a, int b) { return lifetimes[a - 1] < lifetimes[b - 1]; });
    for (int i = 0; i + 1 < n; ++i)
        if (lifetimes[rec.failure_order[i] - 1] == lifetimes[rec.failure_order[i + 1] - 1])
            throw TiedLifetimes("tied lifetimes have no failure order");
    Mask surviving = phi.full();
    for (int i = 0; i < n; ++i) {
        const int c = rec.failure_order[i];
        surviving = without_component(surviving, c);
        if (phi(surviving) == 0) {
            rec.killer = c;
            rec.rank = i + 1;
            return rec;
        }
    }
    throw Error("structure never failed; table is not semicoherent");
}

struct McEstimate {
    std::vector<double> mean;
    std::vector<double> standard_error;  // sqrt(p̂(1-p̂)/N) per coordinate
    std::vector<std::uint64_t> counts;   // raw tallies; they partition the samples
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

namespace detail {

struct McTallies {
    std::vector<std::uint64_t> killer;  // by component, 1-based -> index-1
    std::vector<std::uint64_t> rank;    // by failure position
};

// Tallies are integers merged across workers, so the result is identical for
// any worker count.
inline McTallies mc_tallies(const StructureFunction& phi, const JointLifetimeModel& model,
                            std::uint64_t samples, std::uint64_t seed) {
    const int n = phi.n();
    if (model_n(model) != n)
        throw SizeMismatch("model and structure disagree on component count");
    if (samples < 1) throw InvalidParameter("sample count must be >= 1");
    const int workers =
        static_cast<int>(std::min<std::uint64_t>(samples, static_cast<std::uint64_t>(worker_count())));
    std::vector<McTallies> parts(workers);
    auto run = [&](int w) {
        McTallies local{std::vector<std::uint64_t>(n, 0), std::vector<std::uint64_t>(n, 0)};
        const std::uint64_t lo = samples * w / workers;
        const std::uint64_t hi = samples * (w + 1) / workers;
        std::vector<int> order(n);
        for (std::uint64_t k = lo; k < hi; ++k) {
            const std::vector<double> x = sample_lifetime_vector(model, seed, k);
            std::iota(order.begin(), order.end(), 1);
            std::sort(order.begin(), order.end(),
                      [&](int a, int b) { return x[a - 1] < x[b - 1]; });
            Mask surviving = phi.full();
            for (int i = 0; i < n; ++i) {
                surviving = without_component(surviving, order[i]);
                if (phi(surviving) == 0) {
                    ++local.killer[order[i] - 1];
                    ++local.rank[i];
                    break;
                }
            }
        }
        parts[w] = std::move(local);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    McTallies total{std::vector<std::uint64_t>(n, 0), std::vector<std::uint64_t>(n, 0)};
    for (const auto& p : parts)
        for (int i = 0; i < n; ++i) {
            total.killer[i] += p.killer[i];
            total.rank[i] += p.rank[i];
        }
    return total;
}

inline McEstimate estimate_from_counts(const std::vector<std::uint64_t>& counts,
                                       std::uint64_t samples, std::uint64_t seed) {
    McEstimate e;
    e.counts = counts;
    e.samples = samples;
    e.seed = seed;
    e.mean.reserve(counts.size());
    e.standard_error.reserve(counts.size());
    const double N = static_cast<double>(samples);
    for (std::uint64_t c : counts) {
        const double p = static_cast<double>(c) / N;
        e.mean.push_back(p);
        e.standard_error.push_back(std::sqrt(p * (1.0 - p) / N));
    }
    return e;
}

}  // namespace detail

// Frequency of "component j's failure kills the system" across samples.
inline McEstimate mc_barlow_proschan(const StructureFunction& phi,
                                     const JointLifetimeModel& model, std::uint64_t samples,
                                     std::uint64_t seed) {
    const auto tallies = detail::mc_tallies(phi, model, samples, seed);
    return detail::estimate_from_counts(tallies.killer, samples, seed);
}

// Frequency of "the system dies at the k-th failure".
inline McEstimate mc_signature(const StructureFunction& phi, const JointLifetimeModel& model,
                               std::uint64_t samples, std::uint64_t seed) {
    const auto tallies = detail::mc_tallies(phi, model, samples, seed);
    return detail::estimate_from_counts(tallies.rank, samples, seed);
}

// Both estimates from one shared sampling pass.
inline std::pair<McEstimate, McEstimate> mc_indices(const StructureFunction& phi,
                                                    const JointLifetimeModel& model,
                                                    std::uint64_t samples, std::uint64_t seed) {
    const auto tallies = detail::mc_tallies(phi, model, samples, seed);
    return {detail::estimate_from_counts(tallies.killer, samples, seed),
            detail::estimate_from_counts(tallies.rank, samples, seed)};
}

// q̂_j table estimated by tallying each sample's better-than sets; feeds the
// Monte Carlo path of the Möbius-form and signature computations.
inline OrderingProbabilities<double> mc_ordering_tables(const JointLifetimeModel& model,
                                                        std::uint64_t samples,
                                                        std::uint64_t seed) {
    const int n = model_n(model);
    detail::require_table_size(n);
    if (samples < 1) throw InvalidParameter("sample count must be >= 1");
    const std::size_t entries = std::size_t{1} << n;
    const int workers =
        static_cast<int>(std::min<std::uint64_t>(samples, static_cast<std::uint64_t>(worker_count())));
    std::vector<JTable<std::uint64_t>> parts(
        workers, JTable<std::uint64_t>(n, std::vector<std::uint64_t>(entries, 0)));
    auto run = [&](int w) {
        auto& local = parts[w];
        const std::uint64_t lo = samples * w / workers;
        const std::uint64_t hi = samples * (w + 1) / workers;
        std::vector<int> order(n);
        for (std::uint64_t k = lo; k < hi; ++k) {
            const std::vector<double> x = sample_lifetime_vector(model, seed, k);
            std::iota(order.begin(), order.end(), 1);
            std::sort(order.begin(), order.end(),
                      [&](int a, int b) { return x[a - 1] < x[b - 1]; });
            Mask better = 0;
            for (int i = n - 1; i >= 0; --i) {
                ++local[order[i] - 1][better];
                better |= component_bit(order[i]);
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    OrderingProbabilities<double> t;
    t.n = n;
    t.qj.assign(n, std::vector<double>(entries, 0.0));
    const double N = static_cast<double>(samples);
    for (int j = 0; j < n; ++j)
        for (std::size_t a = 0; a < entries; ++a) {
            std::uint64_t c = 0;
            for (const auto& p : parts) c += p[j][a];
            t.qj[j][a] = static_cast<double>(c) / N;
        }
    // Worst-case binomial standard error at p = 1/2, inflated to 4σ.
    t.entry_tol = 4.0 * 0.5 / std::sqrt(N);
    t.rj = rj_from_qj(n, t.qj);
    t.q = q_from_qj(n, t.qj, 1.0);  // identities hold exactly on tallies
    return t;
}

struct PermutationOracleResult {
    IndexVector bp;
    IndexVector p;
};

// Exhaustive oracle over a permutation law: every ordering in the support is
// replayed against the truth table and its probability credited to the
// killer and to the rank. Exact rationals throughout.
inline PermutationOracleResult permutation_oracle(const StructureFunction& phi,
                                                  const OrderDistribution& model) {
    const int n = phi.n();
    if (model.n != n) throw SizeMismatch("model and structure disagree on component count");
    if (n > kOrderEnumerationLimit)
        throw TooManyComponents("permutation oracle requires n <= " +
                                std::to_string(kOrderEnumerationLimit));
    if (!model.exact)
        throw InvalidParameter("permutation oracle requires exactly normalized probabilities");
    std::vector<Rational> bp(n, Rational{});
    std::vector<Rational> p(n, Rational{});
    for (const auto& [perm, w] : model.probs) {
        if (w == 0) continue;
        Mask surviving = phi.full();
        for (int i = 0; i < n; ++i) {
            surviving = without_component(surviving, perm[i]);
            if (phi(surviving) == 0) {
                bp[perm[i] - 1] += w;
                p[i] += w;
                break;
            }
        }
    }
    PermutationOracleResult result{
        make_exact_index(IndexKind::BarlowProschan, n, std::move(bp)),
        make_exact_index(IndexKind::SignatureP, n, std::move(p))};
    return result;
}

// The uniform law on all n! orderings; the permutation-oracle counterpart of
// an exchangeable model.
inline OrderDistribution uniform_order_distribution(int n) {
    require_component_count(n);
    if (n > kOrderEnumerationLimit)
        throw TooManyComponents("uniform order distribution requires n <= " +
                                std::to_string(kOrderEnumerationLimit));
    Permutation perm(n);
    for (int i = 0; i < n; ++i) perm[i] = static_cast<std::uint8_t>(i + 1);
    const Rational w(1, factorial(n));
    std::map<Permutation, Rational> probs;
    do {
        probs.emplace(perm, w);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return make_order_distribution(n, std::move(probs));
}

}  // namespace bp
