#pragma once

// Joint lifetime models and the ordering probabilities they induce:
//
//   q_j(A) — the components outliving j are exactly A,
//   r_j(A) — every component of A outlives j (superset sum of q_j),
//   q(A)   — the longest-lived |A| components are exactly A.
//
// Evaluation paths: exact rationals (exchangeable, order-distribution),
// closed form (independent Weibull), adaptive quadrature (independent
// marginals), and sampling (any model; see oracle.hpp for estimators).
// The standing no-ties assumption is enforced everywhere: samplers reject
// and redraw tied vectors, and order-distributions are laws on strict
// orderings by construction.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "bp/errors.hpp"
#include "bp/quadrature.hpp"
#include "bp/rational.hpp"
#include "bp/rng.hpp"
#include "bp/subset.hpp"

namespace bp {

// ---------------------------------------------------------------------------
// Models

struct MarginalDistribution {
    std::function<double(double)> cdf;       // F_i, F_i(0) = 0
    std::function<double(double)> pdf;       // f_i on (0, ∞)
    std::function<double(double)> quantile;  // optional; numeric inversion used when absent
};

inline MarginalDistribution exponential_marginal(double rate) {
    if (!(rate > 0)) throw InvalidParameter("exponential rate must be positive");
    MarginalDistribution m;
    m.cdf = [rate](double t) { return t <= 0 ? 0.0 : -std::expm1(-rate * t); };
    m.pdf = [rate](double t) { return t <= 0 ? 0.0 : rate * std::exp(-rate * t); };
    m.quantile = [rate](double u) { return -std::log1p(-u) / rate; };
    return m;
}

inline MarginalDistribution weibull_marginal(double lambda, double alpha) {
    if (!(lambda > 0) || !(alpha > 0))
        throw InvalidParameter("weibull parameters must be positive");
    MarginalDistribution m;
    m.cdf = [lambda, alpha](double t) {
        return t <= 0 ? 0.0 : -std::expm1(-std::pow(lambda * t, alpha));
    };
    m.pdf = [lambda, alpha](double t) {
        if (t <= 0) return 0.0;
        const double z = std::pow(lambda * t, alpha);
        return alpha * z / t * std::exp(-z);
    };
    m.quantile = [lambda, alpha](double u) {
        return std::pow(-std::log1p(-u), 1.0 / alpha) / lambda;
    };
    return m;
}

struct Exchangeable {
    int n = 0;
};

using Permutation = std::vector<std::uint8_t>;  // failure order, first to fail .. last

struct OrderDistribution {
    int n = 0;
    // probs[σ] = Pr(X_{σ(1)} < ... < X_{σ(n)}); rational for exactness.
    std::map<Permutation, Rational> probs;
    // True when the probabilities sum to exactly 1; a defect below 1e-12
    // (e.g. decimal input) is tolerated but demotes results to float.
    bool exact = true;
};

struct IndependentMarginals {
    int n = 0;
    std::vector<MarginalDistribution> marginals;
};

struct IndependentWeibull {
    int n = 0;
    std::vector<double> lambdas;
    double alpha = 1.0;
};

struct EmpiricalSampler {
    int n = 0;
    // Deterministic draw: (seed, index) -> n strictly positive lifetimes.
    std::function<std::vector<double>(std::uint64_t, std::uint64_t)> draw;
};

using JointLifetimeModel =
    std::variant<Exchangeable, OrderDistribution, IndependentMarginals, IndependentWeibull,
                 EmpiricalSampler>;

inline Exchangeable make_exchangeable(int n) {
    require_component_count(n);
    return Exchangeable{n};
}

inline OrderDistribution make_order_distribution(int n,
                                                 std::map<Permutation, Rational> probs) {
    require_component_count(n);
    Rational sum = 0;
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(n) + 1);
    for (const auto& [perm, w] : probs) {
        if (static_cast<int>(perm.size()) != n)
            throw InvalidParameter("order distribution key has wrong length");
        std::fill(seen.begin(), seen.end(), 0);
        for (std::uint8_t c : perm) {
            if (c < 1 || c > n || seen[c]) throw InvalidParameter("key is not a permutation");
            seen[c] = 1;
        }
        if (w < 0) throw InvalidParameter("order distribution probabilities must be >= 0");
        sum += w;
    }
    OrderDistribution d{n, std::move(probs), sum == 1};
    if (!d.exact && std::abs(to_double(sum - 1)) > 1e-12)
        throw InvalidParameter("order distribution probabilities must sum to 1 (got " +
                               rational_to_string(sum) + ")");
    return d;
}

inline IndependentMarginals make_independent_marginals(std::vector<MarginalDistribution> ms) {
    const int n = static_cast<int>(ms.size());
    require_component_count(n);
    for (const auto& m : ms)
        if (!m.cdf || !m.pdf) throw InvalidParameter("marginal needs both cdf and pdf");
    return IndependentMarginals{n, std::move(ms)};
}

inline IndependentWeibull make_independent_weibull(std::vector<double> lambdas, double alpha) {
    const int n = static_cast<int>(lambdas.size());
    require_component_count(n);
    for (double l : lambdas)
        if (!(l > 0)) throw InvalidParameter("weibull lambda values must be positive");
    if (!(alpha > 0)) throw InvalidParameter("weibull alpha must be positive");
    return IndependentWeibull{n, std::move(lambdas), alpha};
}

inline EmpiricalSampler make_empirical_sampler(
    int n, std::function<std::vector<double>(std::uint64_t, std::uint64_t)> draw) {
    require_component_count(n);
    if (!draw) throw InvalidParameter("empirical sampler needs a draw function");
    return EmpiricalSampler{n, std::move(draw)};
}

inline int model_n(const JointLifetimeModel& model) {
    return std::visit([](const auto& m) { return m.n; }, model);
}

inline bool model_has_exact_path(const JointLifetimeModel& model) {
    if (std::holds_alternative<Exchangeable>(model)) return true;
    if (const auto* d = std::get_if<OrderDistribution>(&model)) return d->exact;
    return false;
}

inline bool model_is_sampleable(const JointLifetimeModel&) {
    // Every variant carries a sampling recipe (order distributions sample a
    // permutation and assign sorted uniforms).
    return true;
}

// ---------------------------------------------------------------------------
// Per-entry evaluation

namespace detail {

inline void require_j_not_in(int n, int j, Mask a) {
    require_component(n, j);
    if ((a & ~full_mask(n)) != 0)
        throw InvalidParameter("subset mask exceeds the component range");
    if (contains(a, j)) throw JInA("q_j/r_j require j outside A");
}

}  // namespace detail

// Exchangeable lifetimes: q_j(A) = 1/(n·C(n-1,|A|)), independent of j and of
// which components form A.
inline Rational exchangeable_qj(int n, int j, Mask a) {
    detail::require_j_not_in(n, j, a);
    const BigInt den = BigInt(n) * binomial(n - 1, subset_size(a));
    return Rational(1, den);
}

inline constexpr int kOrderEnumerationLimit = 8;

// Sum of Pr(σ) over orderings whose best |A| components are exactly A with j
// immediately below them.
inline Rational order_distribution_qj(const OrderDistribution& model, int j, Mask a) {
    detail::require_j_not_in(model.n, j, a);
    if (model.n > kOrderEnumerationLimit)
        throw TooManyComponents("order-distribution enumeration requires n <= " +
                                std::to_string(kOrderEnumerationLimit));
    const int n = model.n;
    const int size = subset_size(a);
    Rational total = 0;
    for (const auto& [perm, w] : model.probs) {
        if (perm[n - size - 1] != j) continue;
        Mask top = 0;
        for (int i = n - size; i < n; ++i) top |= component_bit(perm[i]);
        if (top == a) total += w;
    }
    return total;
}

// ∫ f_j(t) Π_{i∈A} (1-F_i(t)) Π_{i∉A∪{j}} F_i(t) dt over (0,∞).
inline double independent_qj(const IndependentMarginals& model, int j, Mask a,
                             const QuadratureOptions& opts = {}) {
    detail::require_j_not_in(model.n, j, a);
    const int n = model.n;
    auto integrand = [&](double t) {
        double v = model.marginals[j - 1].pdf(t);
        for (int i = 1; i <= n && v != 0.0; ++i) {
            if (i == j) continue;
            const double F = model.marginals[i - 1].cdf(t);
            v *= contains(a, i) ? 1.0 - F : F;
        }
        return v;
    };
    return integrate_halfline(integrand, opts).value;
}

inline double independent_qj(const IndependentMarginals& model, int j, Mask a, double tol) {
    QuadratureOptions opts;
    opts.abs_tol = tol;
    return independent_qj(model, j, a, opts);
}

// ∫ f_j(t) Π_{i∈A} (1-F_i(t)) dt over (0,∞); r_j(∅) = 1 exactly.
inline double independent_rj(const IndependentMarginals& model, int j, Mask a,
                             const QuadratureOptions& opts = {}) {
    detail::require_j_not_in(model.n, j, a);
    if (a == 0) return 1.0;
    auto integrand = [&](double t) {
        double v = model.marginals[j - 1].pdf(t);
        for (int i = 1; i <= model.n && v != 0.0; ++i)
            if (contains(a, i)) v *= 1.0 - model.marginals[i - 1].cdf(t);
        return v;
    };
    return integrate_halfline(integrand, opts).value;
}

inline double independent_rj(const IndependentMarginals& model, int j, Mask a, double tol) {
    QuadratureOptions opts;
    opts.abs_tol = tol;
    return independent_rj(model, j, a, opts);
}

inline IndependentMarginals weibull_as_marginals(const IndependentWeibull& model) {
    std::vector<MarginalDistribution> ms;
    ms.reserve(model.lambdas.size());
    for (double l : model.lambdas) ms.push_back(weibull_marginal(l, model.alpha));
    return IndependentMarginals{model.n, std::move(ms)};
}

namespace detail {

inline double weibull_rate_sum(const IndependentWeibull& model, Mask s) {
    double sum = 0.0;
    for (int i = 1; i <= model.n; ++i)
        if (contains(s, i)) sum += std::pow(model.lambdas[i - 1], model.alpha);
    return sum;
}

}  // namespace detail

// r_j(A) = λ_α({j}) / λ_α(A∪{j}) with λ_α(S) = Σ_{i∈S} λ_i^α.
inline double weibull_rj(const IndependentWeibull& model, int j, Mask a) {
    detail::require_j_not_in(model.n, j, a);
    const double wj = std::pow(model.lambdas[j - 1], model.alpha);
    return wj / (wj + detail::weibull_rate_sum(model, a));
}

// Beyond this many free superset bits the alternating sum loses too much
// precision and the quadrature path takes over.
inline constexpr int kWeibullAlternatingLimit = 12;

// Alternating superset sum q_j(A) = Σ_{B⊇A} (-1)^{|B|-|A|} r_j(B), evaluated
// with Neumaier-compensated accumulation. Results within 1e-9 of [0,1] are
// clamped; anything farther out is returned as-is so invariant checks see it.
inline double weibull_qj(const IndependentWeibull& model, int j, Mask a,
                         const QuadratureOptions& fallback_opts = {}) {
    detail::require_j_not_in(model.n, j, a);
    const Mask rest = full_mask(model.n) & ~component_bit(j);
    const Mask free = rest & ~a;
    if (subset_size(free) > kWeibullAlternatingLimit)
        return independent_qj(weibull_as_marginals(model), j, a, fallback_opts);
    const double wj = std::pow(model.lambdas[j - 1], model.alpha);
    const double base = wj + detail::weibull_rate_sum(model, a);
    double sum = 0.0, comp = 0.0;
    for_each_subset_of(free, [&](Mask t) {
        const double term = (subset_size(t) % 2 == 0 ? 1.0 : -1.0) * wj /
                            (base + detail::weibull_rate_sum(model, t));
        const double s = sum + term;
        if (std::abs(sum) >= std::abs(term))
            comp += (sum - s) + term;
        else
            comp += (term - s) + sum;
        sum = s;
    });
    double v = sum + comp;
    if (v < 0.0 && v > -1e-9) v = 0.0;
    if (v > 1.0 && v < 1.0 + 1e-9) v = 1.0;
    return v;
}

// ---------------------------------------------------------------------------
// Tables and transforms

// Per-j table over A ⊆ [n]\{j}, stored dense over raw masks; entries at
// masks containing j are unused and stay zero.
template <typename T>
using JTable = std::vector<std::vector<T>>;

namespace detail {

template <typename T>
void superset_zeta(int n, Mask universe, std::vector<T>& v) {
    for (int i = 0; i < n; ++i) {
        const Mask bit = Mask{1} << i;
        if (!(universe & bit)) continue;
        for (Mask a = 0; a < v.size(); ++a)
            if (!(a & bit) && (a & ~universe) == 0) v[a] += v[a | bit];
    }
}

template <typename T>
void superset_mobius(int n, Mask universe, std::vector<T>& v) {
    for (int i = 0; i < n; ++i) {
        const Mask bit = Mask{1} << i;
        if (!(universe & bit)) continue;
        for (Mask a = 0; a < v.size(); ++a)
            if (!(a & bit) && (a & ~universe) == 0) v[a] -= v[a | bit];
    }
}

template <typename T>
void require_complete(int n, const JTable<T>& table) {
    if (static_cast<int>(table.size()) != n)
        throw IncompleteTable("expected one row per component");
    const std::size_t entries = std::size_t{1} << n;
    for (const auto& row : table)
        if (row.size() != entries)
            throw IncompleteTable("row must cover all 2^n subset masks");
}

}  // namespace detail

// r_j(A) = Σ_{B ⊇ A, B ⊆ [n]\{j}} q_j(B)
template <typename T>
JTable<T> rj_from_qj(int n, const JTable<T>& qj) {
    detail::require_complete(n, qj);
    JTable<T> rj = qj;
    for (int j = 1; j <= n; ++j)
        detail::superset_zeta(n, full_mask(n) & ~component_bit(j), rj[j - 1]);
    return rj;
}

// q_j(A) = Σ_{B ⊇ A} (-1)^{|B|-|A|} r_j(B); inverse of rj_from_qj.
template <typename T>
JTable<T> qj_from_rj(int n, const JTable<T>& rj) {
    detail::require_complete(n, rj);
    JTable<T> qj = rj;
    for (int j = 1; j <= n; ++j)
        detail::superset_mobius(n, full_mask(n) & ~component_bit(j), qj[j - 1]);
    return qj;
}

// Map-keyed variants matching the (j, A) table description; missing entries
// raise IncompleteTable.
template <typename T>
JTable<T> jtable_from_map(int n, const std::map<std::pair<int, Mask>, T>& entries) {
    require_component_count(n);
    JTable<T> table(n, std::vector<T>(std::size_t{1} << n, T{}));
    std::size_t found = 0;
    for (int j = 1; j <= n; ++j) {
        const Mask rest = full_mask(n) & ~component_bit(j);
        for_each_subset_of(rest, [&](Mask a) {
            auto it = entries.find({j, a});
            if (it == entries.end())
                throw IncompleteTable("missing table entry (j=" + std::to_string(j) +
                                      ", A=" + std::to_string(a) + ")");
            table[j - 1][a] = it->second;
            ++found;
        });
    }
    (void)found;
    return table;
}

// q(A) via q(A) = Σ_{j∉A} q_j(A) (with q([n]) = 1), cross-checked against the
// companion identity q(A) = Σ_{j∈A} q_j(A\{j}); a disagreement beyond the
// tolerance (exact mismatch for rational tables) raises InconsistentTable.
template <typename T>
std::vector<T> q_from_qj(int n, const JTable<T>& qj, double check_tol = 1e-9,
                         double* max_deviation = nullptr) {
    detail::require_complete(n, qj);
    const std::size_t entries = std::size_t{1} << n;
    const Mask full = full_mask(n);
    std::vector<T> q(entries, T{});
    double worst = 0.0;
    for (Mask a = 0; a < entries; ++a) {
        T via9{};
        bool have9 = a != full;
        if (have9)
            for (int j = 1; j <= n; ++j)
                if (!contains(a, j)) via9 += qj[j - 1][a];
        T via10{};
        bool have10 = a != 0;
        if (have10)
            for (int j = 1; j <= n; ++j)
                if (contains(a, j)) via10 += qj[j - 1][without_component(a, j)];
        if (!have9) via9 = T{1};
        if (!have10) via10 = T{1};
        if constexpr (std::is_same_v<T, Rational>) {
            // Strict equality, except for the documented <=1e-12 mass defect
            // of decimal-input order distributions.
            if (via9 != via10 && std::abs(to_double(via9 - via10)) > check_tol)
                throw InconsistentTable("q-table identities disagree at A=" + std::to_string(a));
        } else {
            const double dev = std::abs(static_cast<double>(via9 - via10));
            worst = std::max(worst, dev);
            if (dev > check_tol)
                throw InconsistentTable("q-table identities disagree at A=" + std::to_string(a) +
                                        " by " + std::to_string(dev));
        }
        q[a] = (a == full) ? T{1} : via9;
    }
    if (max_deviation != nullptr) *max_deviation = worst;
    return q;
}

// Evaluated ordering-probability tables for one model.
template <typename T>
struct OrderingProbabilities {
    int n = 0;
    JTable<T> qj;
    JTable<T> rj;
    std::vector<T> q;
    double entry_tol = 0.0;  // per-entry absolute error bound; 0 means exact
};

inline constexpr int kTableLimit = 12;

namespace detail {

inline void require_table_size(int n) {
    if (n > kTableLimit)
        throw TooManyComponents("full ordering tables are limited to n <= " +
                                std::to_string(kTableLimit));
}

}  // namespace detail

inline OrderingProbabilities<Rational> ordering_tables(const Exchangeable& model) {
    const int n = model.n;
    require_component_count(n);
    detail::require_table_size(n);
    const std::size_t entries = std::size_t{1} << n;
    OrderingProbabilities<Rational> t;
    t.n = n;
    t.qj.assign(n, std::vector<Rational>(entries, Rational{}));
    for (int j = 1; j <= n; ++j) {
        const Mask rest = full_mask(n) & ~component_bit(j);
        for_each_subset_of(rest,
                           [&](Mask a) { t.qj[j - 1][a] = exchangeable_qj(n, j, a); });
    }
    t.rj = rj_from_qj(n, t.qj);
    t.q = q_from_qj(n, t.qj);
    return t;
}

inline OrderingProbabilities<Rational> ordering_tables(const OrderDistribution& model) {
    const int n = model.n;
    require_component_count(n);
    if (n > kOrderEnumerationLimit)
        throw TooManyComponents("order-distribution enumeration requires n <= " +
                                std::to_string(kOrderEnumerationLimit));
    const std::size_t entries = std::size_t{1} << n;
    OrderingProbabilities<Rational> t;
    t.n = n;
    t.qj.assign(n, std::vector<Rational>(entries, Rational{}));
    // One pass over the support: walking σ from best to worst keeps the
    // better-than set as a running mask.
    for (const auto& [perm, w] : model.probs) {
        Mask better = 0;
        for (int i = n - 1; i >= 0; --i) {
            t.qj[perm[i] - 1][better] += w;
            better |= component_bit(perm[i]);
        }
    }
    t.rj = rj_from_qj(n, t.qj);
    t.q = q_from_qj(n, t.qj);
    return t;
}

inline OrderingProbabilities<double> ordering_tables(const IndependentWeibull& model) {
    const int n = model.n;
    require_component_count(n);
    detail::require_table_size(n);
    const std::size_t entries = std::size_t{1} << n;
    OrderingProbabilities<double> t;
    t.n = n;
    t.entry_tol = 1e-12;
    t.qj.assign(n, std::vector<double>(entries, 0.0));
    t.rj.assign(n, std::vector<double>(entries, 0.0));
    for (int j = 1; j <= n; ++j) {
        const Mask rest = full_mask(n) & ~component_bit(j);
        for_each_subset_of(rest, [&](Mask a) {
            t.qj[j - 1][a] = weibull_qj(model, j, a);
            t.rj[j - 1][a] = weibull_rj(model, j, a);
        });
    }
    t.q = q_from_qj(n, t.qj, 16.0 * n * 1e-12);
    return t;
}

inline OrderingProbabilities<double> ordering_tables(const IndependentMarginals& model,
                                                     const QuadratureOptions& opts = {}) {
    const int n = model.n;
    require_component_count(n);
    detail::require_table_size(n);
    const std::size_t entries = std::size_t{1} << n;
    OrderingProbabilities<double> t;
    t.n = n;
    t.entry_tol = opts.abs_tol;
    t.qj.assign(n, std::vector<double>(entries, 0.0));
    for (int j = 1; j <= n; ++j) {
        const Mask rest = full_mask(n) & ~component_bit(j);
        for_each_subset_of(rest, [&](Mask a) { t.qj[j - 1][a] = independent_qj(model, j, a, opts); });
    }
    t.rj = rj_from_qj(n, t.qj);
    t.q = q_from_qj(n, t.qj, 16.0 * n * opts.abs_tol);
    return t;
}

// ---------------------------------------------------------------------------
// Sampling

inline constexpr int kMaxTieAttempts = 1000;
inline constexpr std::uint64_t kAttemptStride = 1024;

namespace detail {

inline bool strictly_distinct(const std::vector<double>& x) {
    std::vector<double> s = x;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

inline double invert_cdf(const MarginalDistribution& m, double u) {
    if (m.quantile) return m.quantile(u);
    double hi = 1.0;
    for (int guard = 0; m.cdf(hi) < u; ++guard) {
        hi *= 2.0;
        if (guard > 1100) throw Error("marginal cdf never reaches the requested level");
    }
    double lo = 0.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (m.cdf(mid) < u ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// One attempt at draw #index; counters are laid out per attempt so redraws
// and parallel draws never collide.
inline std::vector<double> draw_attempt(const JointLifetimeModel& model, std::uint64_t seed,
                                        std::uint64_t sub_index) {
    const int n = model_n(model);
    const std::uint64_t base = sub_index * static_cast<std::uint64_t>(n + 1);
    std::vector<double> x(n);
    if (const auto* m = std::get_if<Exchangeable>(&model)) {
        // i.i.d. uniforms: the canonical representative, since every output
        // of interest depends only on the ordering law.
        (void)m;
        for (int i = 0; i < n; ++i) x[i] = counter_u01(seed, base + i);
        return x;
    }
    if (const auto* m = std::get_if<OrderDistribution>(&model)) {
        const double u = counter_u01(seed, base + n);
        const Permutation* chosen = nullptr;
        double cum = 0.0;
        for (const auto& [perm, w] : m->probs) {
            chosen = &perm;
            cum += to_double(w);
            if (u < cum) break;
        }
        if (chosen == nullptr) throw InvalidParameter("order distribution has empty support");
        std::vector<double> sorted(n);
        for (int i = 0; i < n; ++i) sorted[i] = counter_u01(seed, base + i);
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < n; ++i) x[(*chosen)[i] - 1] = sorted[i];
        return x;
    }
    if (const auto* m = std::get_if<IndependentMarginals>(&model)) {
        for (int i = 0; i < n; ++i)
            x[i] = invert_cdf(m->marginals[i], counter_u01(seed, base + i));
        return x;
    }
    if (const auto* m = std::get_if<IndependentWeibull>(&model)) {
        for (int i = 0; i < n; ++i) {
            const double u = counter_u01(seed, base + i);
            x[i] = std::pow(-std::log1p(-u), 1.0 / m->alpha) / m->lambdas[i];
        }
        return x;
    }
    const auto& m = std::get<EmpiricalSampler>(model);
    x = m.draw(seed, sub_index);
    if (static_cast<int>(x.size()) != n)
        throw InvalidParameter("empirical sampler returned wrong vector length");
    for (double v : x)
        if (!std::isfinite(v) || v <= 0.0)
            throw InvalidParameter("empirical sampler returned a non-positive lifetime");
    return x;
}

}  // namespace detail

// Deterministic per (seed, index); tied vectors are rejected and redrawn (the
// count is reported through `rejections` when given).
inline std::vector<double> sample_lifetime_vector(const JointLifetimeModel& model,
                                                  std::uint64_t seed, std::uint64_t index,
                                                  int* rejections = nullptr) {
    for (int attempt = 0; attempt <= kMaxTieAttempts; ++attempt) {
        std::vector<double> x =
            detail::draw_attempt(model, seed, index * kAttemptStride + attempt);
        if (detail::strictly_distinct(x)) {
            if (rejections != nullptr) *rejections = attempt;
            return x;
        }
    }
    throw TieRejectionOverflow("more than " + std::to_string(kMaxTieAttempts) +
                               " consecutive tied draws at index " + std::to_string(index));
}

inline std::vector<std::vector<double>> sample_lifetimes(const JointLifetimeModel& model,
                                                         std::uint64_t seed,
                                                         std::uint64_t count) {
    std::vector<std::vector<double>> out;
    out.reserve(count);
    for (std::uint64_t k = 0; k < count; ++k)
        out.push_back(sample_lifetime_vector(model, seed, k));
    return out;
}

}  // namespace bp
