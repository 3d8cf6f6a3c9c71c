#pragma once

// Importance and signature computations for a system (φ, F):
//
//   I_BP^(j) = Σ_{A⊆[n]\{j}} q_j(A) Δ_jφ(A)            (Barlow–Proschan)
//            = Σ_{A⊆[n]\{j}} r_j(A) m_φ(A∪{j})          (Möbius form)
//   b_j      = Σ_A Δ_jφ(A) / (n·C(n-1,|A|))             (Shapley–Shubik)
//   p_k      = Σ_{|A|=n-k+1} q(A)φ(A) − Σ_{|A|=n-k} q(A)φ(A)
//   s_k      = the same with q(A) = 1/C(n,|A|)
//   tail_k   = Σ_{|A|=n-k} q(A)φ(A)
//
// plus the normalized-entropy symmetry index and the symmetry checks on q_j
// and q. Structural quantities (b, s) are always exact rationals; the rest
// follow the model's best path: exact, closed form, quadrature or sampling.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bp/index_vector.hpp"
#include "bp/lifetimes.hpp"
#include "bp/oracle.hpp"
#include "bp/structure.hpp"

namespace bp {

enum class Method { Auto, Exact, Quadrature, ClosedForm, MonteCarlo };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::Auto: return "auto";
        case Method::Exact: return "exact";
        case Method::Quadrature: return "quadrature";
        case Method::ClosedForm: return "closed_form";
        case Method::MonteCarlo: return "monte_carlo";
    }
    return "?";
}

struct EvalOptions {
    Method method = Method::Auto;
    double tol = 1e-10;               // quadrature absolute tolerance
    std::uint64_t samples = 100000;   // Monte Carlo sample count
    std::uint64_t seed = 0;
};

// Fastest-exact-first ladder for Auto; explicit requests are validated
// against what the model variant can actually evaluate.
inline Method resolve_method(const JointLifetimeModel& model, Method requested) {
    struct Caps {
        Method preferred;
        bool exact, quadrature, closed_form;
    };
    const Caps caps = std::visit(
        [](const auto& m) -> Caps {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, Exchangeable>)
                return {Method::Exact, true, false, false};
            else if constexpr (std::is_same_v<M, OrderDistribution>)
                return {Method::Exact, true, false, false};
            else if constexpr (std::is_same_v<M, IndependentWeibull>)
                return {Method::ClosedForm, false, true, true};
            else if constexpr (std::is_same_v<M, IndependentMarginals>)
                return {Method::Quadrature, false, true, false};
            else
                return {Method::MonteCarlo, false, false, false};
        },
        model);
    if (requested == Method::Auto) return caps.preferred;
    const bool ok = (requested == Method::Exact && caps.exact) ||
                    (requested == Method::Quadrature && caps.quadrature) ||
                    (requested == Method::ClosedForm && caps.closed_form) ||
                    (requested == Method::MonteCarlo && model_is_sampleable(model));
    if (!ok)
        throw MethodUnavailable(std::string("method '") + method_name(requested) +
                                "' is not available for this lifetime model");
    return requested;
}

namespace detail {

inline void require_same_n(const StructureFunction& phi, const JointLifetimeModel& model) {
    if (model_n(model) != phi.n())
        throw SizeMismatch("model has " + std::to_string(model_n(model)) +
                           " components, structure has " + std::to_string(phi.n()));
}

// Shapley–Shubik weights grouped by |A|: only the per-size pivot counts are
// needed, which keeps n = 20 cheap.
inline std::vector<Rational> shapley_values(const StructureFunction& phi) {
    const int n = phi.n();
    const Mask full = phi.full();
    std::vector<Rational> b(n, Rational{});
    for (int j = 1; j <= n; ++j) {
        const Mask bit = component_bit(j);
        std::vector<std::uint64_t> pivots(n, 0);
        for (Mask a = 0; a <= full; ++a) {
            if (a & bit) continue;
            if (phi(a | bit) > phi(a)) ++pivots[subset_size(a)];
        }
        Rational acc = 0;
        for (int k = 0; k < n; ++k)
            if (pivots[k] != 0)
                acc += Rational(pivots[k], BigInt(n) * binomial(n - 1, k));
        b[j - 1] = acc;
    }
    return b;
}

// Working-set counts by size: counts[m] = #{A : |A| = m, φ(A) = 1}.
inline std::vector<std::uint64_t> working_counts(const StructureFunction& phi) {
    std::vector<std::uint64_t> counts(phi.n() + 1, 0);
    for (Mask a = 0; a <= phi.full(); ++a)
        if (phi(a)) ++counts[subset_size(a)];
    return counts;
}

template <typename T>
std::vector<T> bp_from_qj(const StructureFunction& phi, const JTable<T>& qj) {
    const int n = phi.n();
    std::vector<T> v(n, T{});
    for (int j = 1; j <= n; ++j) {
        const Mask bit = component_bit(j);
        for (Mask a = 0; a <= phi.full(); ++a)
            if (!(a & bit) && phi(a | bit) > phi(a)) v[j - 1] += qj[j - 1][a];
    }
    return v;
}

template <typename T>
std::vector<T> bp_mobius_from_rj(const StructureFunction& phi, const JTable<T>& rj) {
    const int n = phi.n();
    const auto& m = phi.mobius();
    std::vector<T> v(n, T{});
    for (int j = 1; j <= n; ++j) {
        const Mask bit = component_bit(j);
        for (Mask b = 0; b <= phi.full(); ++b) {
            if (!(b & bit) || m[b] == 0) continue;
            v[j - 1] += rj[j - 1][b & ~bit] * T(m[b]);
        }
    }
    return v;
}

template <typename T>
std::vector<T> signature_from_q(const StructureFunction& phi, const std::vector<T>& q) {
    const int n = phi.n();
    std::vector<T> level(n + 1, T{});  // Σ_{|A|=m} q(A)φ(A)
    for (Mask a = 0; a <= phi.full(); ++a)
        if (phi(a)) level[subset_size(a)] += q[a];
    std::vector<T> p(n, T{});
    for (int k = 1; k <= n; ++k) p[k - 1] = level[n - k + 1] - level[n - k];
    return p;
}

template <typename T>
std::vector<T> tail_from_q(const StructureFunction& phi, const std::vector<T>& q) {
    const int n = phi.n();
    std::vector<T> level(n + 1, T{});
    for (Mask a = 0; a <= phi.full(); ++a)
        if (phi(a)) level[subset_size(a)] += q[a];
    std::vector<T> tail(n + 1, T{});
    for (int k = 0; k <= n; ++k) tail[k] = level[n - k];
    return tail;
}

// p_k = Σ_A m_φ(A) · Pr(X_{k:n} = min_{i∈A} X_i), the probability factor
// being the superset-level difference S_{n-k+1}(A) − S_{n-k}(A).
template <typename T>
std::vector<T> signature_mobius_from_q(const StructureFunction& phi, const std::vector<T>& q) {
    const int n = phi.n();
    const auto& m = phi.mobius();
    std::vector<T> p(n, T{});
    std::vector<T> levels(n + 1, T{});
    for (Mask a = 0; a <= phi.full(); ++a) {
        if (m[a] == 0) continue;
        std::fill(levels.begin(), levels.end(), T{});
        for_each_superset_within(a, phi.full(),
                                 [&](Mask b) { levels[subset_size(b)] += q[b]; });
        for (int k = 1; k <= n; ++k) {
            const T factor = levels[n - k + 1] - levels[n - k];
            p[k - 1] += factor * T(m[a]);
        }
    }
    return p;
}

// Exchangeable short-cuts that avoid 2^n rational tables: under a symmetric
// law r_j(A) = 1/(|A|+1) and Σ_{B⊇A,|B|=r} q(B) = C(n-|A|, r-|A|)/C(n, r).
inline std::vector<Rational> exchangeable_bp_mobius(const StructureFunction& phi) {
    const int n = phi.n();
    const auto& m = phi.mobius();
    std::vector<Rational> v(n, Rational{});
    for (int j = 1; j <= n; ++j) {
        const Mask bit = component_bit(j);
        for (Mask b = 0; b <= phi.full(); ++b) {
            if (!(b & bit) || m[b] == 0) continue;
            v[j - 1] += Rational(m[b], subset_size(b & ~bit) + 1);
        }
    }
    return v;
}

inline std::vector<Rational> exchangeable_signature_mobius(const StructureFunction& phi) {
    const int n = phi.n();
    const auto& m = phi.mobius();
    auto superset_level = [&](int a, int r) -> Rational {
        if (r < a) return Rational{};
        return Rational(binomial(n - a, r - a), binomial(n, r));
    };
    std::vector<Rational> p(n, Rational{});
    for (Mask mask = 0; mask <= phi.full(); ++mask) {
        if (m[mask] == 0) continue;
        const int a = subset_size(mask);
        for (int k = 1; k <= n; ++k)
            p[k - 1] += (superset_level(a, n - k + 1) - superset_level(a, n - k)) * m[mask];
    }
    return p;
}

struct FloatTables {
    OrderingProbabilities<double> tables;
    double entry_tol = 0.0;
};

inline OrderingProbabilities<double> float_tables(const JointLifetimeModel& model,
                                                  Method method, const EvalOptions& opts) {
    if (method == Method::MonteCarlo)
        return mc_ordering_tables(model, opts.samples, opts.seed);
    if (const auto* w = std::get_if<IndependentWeibull>(&model)) {
        if (method == Method::ClosedForm) return ordering_tables(*w);
        QuadratureOptions qopts;
        qopts.abs_tol = opts.tol;
        return ordering_tables(weibull_as_marginals(*w), qopts);
    }
    const auto& m = std::get<IndependentMarginals>(model);
    QuadratureOptions qopts;
    qopts.abs_tol = opts.tol;
    return ordering_tables(m, qopts);
}

inline OrderingProbabilities<Rational> exact_tables(const JointLifetimeModel& model) {
    if (const auto* e = std::get_if<Exchangeable>(&model)) return ordering_tables(*e);
    return ordering_tables(std::get<OrderDistribution>(model));
}

// Worst-case error accumulated when `terms` values each within `entry_tol`
// are added.
inline double sum_tol(double entry_tol, std::uint64_t terms) {
    return entry_tol * static_cast<double>(std::max<std::uint64_t>(terms, 1));
}

// Rational-path result, demoted to float when the model carries the
// <=1e-12 mass defect of decimal-input order distributions.
inline IndexVector finish_rational(IndexKind kind, int n, std::vector<Rational> values,
                                   const JointLifetimeModel& model) {
    if (model_has_exact_path(model)) return make_exact_index(kind, n, std::move(values));
    std::vector<double> v;
    v.reserve(values.size());
    for (const Rational& r : values) v.push_back(to_double(r));
    return make_float_index(kind, n, std::move(v), 1e-11);
}

}  // namespace detail

// Structural importance b (the Shapley–Shubik value of φ); exact rationals.
inline IndexVector structural_b(const StructureFunction& phi) {
    return make_exact_index(IndexKind::StructuralB, phi.n(), detail::shapley_values(phi));
}

// Structural signature s (Boland's form); exact rationals.
inline IndexVector structural_signature(const StructureFunction& phi) {
    const int n = phi.n();
    const auto counts = detail::working_counts(phi);
    std::vector<Rational> s(n, Rational{});
    for (int k = 1; k <= n; ++k) {
        const Rational hi(counts[n - k + 1], binomial(n, n - k + 1));
        const Rational lo(counts[n - k], binomial(n, n - k));
        s[k - 1] = hi - lo;
    }
    return make_exact_index(IndexKind::StructuralS, n, std::move(s));
}

inline IndexVector barlow_proschan(const StructureFunction& phi,
                                   const JointLifetimeModel& model,
                                   const EvalOptions& opts = {}) {
    detail::require_same_n(phi, model);
    const Method method = resolve_method(model, opts.method);
    const int n = phi.n();
    if (method == Method::Exact) {
        if (std::holds_alternative<Exchangeable>(model))
            return make_exact_index(IndexKind::BarlowProschan, n, detail::shapley_values(phi));
        const auto tables = detail::exact_tables(model);
        return detail::finish_rational(IndexKind::BarlowProschan, n,
                                       detail::bp_from_qj(phi, tables.qj), model);
    }
    if (method == Method::MonteCarlo) {
        McEstimate est = mc_barlow_proschan(phi, model, opts.samples, opts.seed);
        double worst_se = 0.0;
        for (double se : est.standard_error) worst_se = std::max(worst_se, se);
        return make_float_index(IndexKind::BarlowProschan, n, std::move(est.mean),
                                4.0 * worst_se + 25.0 / static_cast<double>(opts.samples));
    }
    // Per-entry closed form / quadrature, only where Δ_jφ(A) = 1.
    QuadratureOptions qopts;
    qopts.abs_tol = opts.tol;
    std::vector<double> v(n, 0.0);
    std::uint64_t worst_terms = 0;
    for (int j = 1; j <= n; ++j) {
        const Mask bit = component_bit(j);
        double acc = 0.0;
        std::uint64_t terms = 0;
        for (Mask a = 0; a <= phi.full(); ++a) {
            if ((a & bit) || phi(a | bit) == phi(a)) continue;
            ++terms;
            if (method == Method::ClosedForm)
                acc += weibull_qj(std::get<IndependentWeibull>(model), j, a, qopts);
            else if (const auto* w = std::get_if<IndependentWeibull>(&model))
                acc += independent_qj(weibull_as_marginals(*w), j, a, qopts);
            else
                acc += independent_qj(std::get<IndependentMarginals>(model), j, a, qopts);
        }
        v[j - 1] = acc;
        worst_terms = std::max(worst_terms, terms);
    }
    const double entry_tol = method == Method::ClosedForm ? 1e-11 : opts.tol;
    return make_float_index(IndexKind::BarlowProschan, n, std::move(v),
                            detail::sum_tol(entry_tol, worst_terms));
}

// Iyer's form I_BP^(j) = Σ_A r_j(A) m_φ(A∪{j}).
inline IndexVector barlow_proschan_mobius(const StructureFunction& phi,
                                          const JointLifetimeModel& model,
                                          const EvalOptions& opts = {}) {
    detail::require_same_n(phi, model);
    const Method method = resolve_method(model, opts.method);
    const int n = phi.n();
    if (method == Method::Exact) {
        if (std::holds_alternative<Exchangeable>(model))
            return make_exact_index(IndexKind::BarlowProschan, n,
                                    detail::exchangeable_bp_mobius(phi));
        const auto tables = detail::exact_tables(model);
        return detail::finish_rational(IndexKind::BarlowProschan, n,
                                       detail::bp_mobius_from_rj(phi, tables.rj), model);
    }
    // Per-entry r_j at the Möbius support; Möbius coefficients can be large,
    // so track the coefficient mass in the error bound.
    QuadratureOptions qopts;
    qopts.abs_tol = opts.tol;
    const auto& m = phi.mobius();
    std::vector<double> v(n, 0.0);
    double worst_mass = 0.0;
    const bool mc = method == Method::MonteCarlo;
    OrderingProbabilities<double> mc_tables;
    if (mc) mc_tables = mc_ordering_tables(model, opts.samples, opts.seed);
    for (int j = 1; j <= n; ++j) {
        const Mask bit = component_bit(j);
        double acc = 0.0;
        double mass = 0.0;
        for (Mask b = 0; b <= phi.full(); ++b) {
            if (!(b & bit) || m[b] == 0) continue;
            const Mask a = b & ~bit;
            double r;
            if (mc)
                r = mc_tables.rj[j - 1][a];
            else if (method == Method::ClosedForm)
                r = weibull_rj(std::get<IndependentWeibull>(model), j, a);
            else if (const auto* w = std::get_if<IndependentWeibull>(&model))
                r = independent_rj(weibull_as_marginals(*w), j, a, qopts);
            else
                r = independent_rj(std::get<IndependentMarginals>(model), j, a, qopts);
            acc += r * static_cast<double>(m[b]);
            mass += std::abs(static_cast<double>(m[b]));
        }
        v[j - 1] = acc;
        worst_mass = std::max(worst_mass, mass);
    }
    const double entry_tol = mc           ? mc_tables.entry_tol
                             : method == Method::ClosedForm ? 1e-14
                                                            : opts.tol;
    return make_float_index(IndexKind::BarlowProschan, n, std::move(v),
                            entry_tol * std::max(worst_mass, 1.0));
}

inline IndexVector signature_p(const StructureFunction& phi, const JointLifetimeModel& model,
                               const EvalOptions& opts = {}) {
    detail::require_same_n(phi, model);
    const Method method = resolve_method(model, opts.method);
    const int n = phi.n();
    if (method == Method::Exact) {
        if (std::holds_alternative<Exchangeable>(model)) {
            IndexVector s = structural_signature(phi);
            return make_exact_index(IndexKind::SignatureP, n, std::move(s.exact));
        }
        const auto tables = detail::exact_tables(model);
        return detail::finish_rational(IndexKind::SignatureP, n,
                                       detail::signature_from_q(phi, tables.q), model);
    }
    if (method == Method::MonteCarlo) {
        McEstimate est = mc_signature(phi, model, opts.samples, opts.seed);
        double worst_se = 0.0;
        for (double se : est.standard_error) worst_se = std::max(worst_se, se);
        return make_float_index(IndexKind::SignatureP, n, std::move(est.mean),
                                4.0 * worst_se + 25.0 / static_cast<double>(opts.samples));
    }
    const auto tables = detail::float_tables(model, method, opts);
    std::vector<double> p = detail::signature_from_q(phi, tables.q);
    const double tol =
        detail::sum_tol(tables.entry_tol * n, std::uint64_t{1} << (n - 1)) * 2.0;
    return make_float_index(IndexKind::SignatureP, n, std::move(p), tol);
}

inline IndexVector signature_mobius(const StructureFunction& phi,
                                    const JointLifetimeModel& model,
                                    const EvalOptions& opts = {}) {
    detail::require_same_n(phi, model);
    const Method method = resolve_method(model, opts.method);
    const int n = phi.n();
    if (method == Method::Exact) {
        if (std::holds_alternative<Exchangeable>(model))
            return make_exact_index(IndexKind::SignatureP, n,
                                    detail::exchangeable_signature_mobius(phi));
        const auto tables = detail::exact_tables(model);
        return detail::finish_rational(IndexKind::SignatureP, n,
                                       detail::signature_mobius_from_q(phi, tables.q), model);
    }
    const auto tables = method == Method::MonteCarlo
                            ? mc_ordering_tables(model, opts.samples, opts.seed)
                            : detail::float_tables(model, method, opts);
    std::vector<double> p = detail::signature_mobius_from_q(phi, tables.q);
    double mobius_mass = 0.0;
    for (std::int64_t c : phi.mobius()) mobius_mass += std::abs(static_cast<double>(c));
    const double tol = tables.entry_tol * n * mobius_mass *
                       static_cast<double>(std::uint64_t{1} << std::max(n - 1, 0));
    return make_float_index(IndexKind::SignatureP, n, std::move(p), std::max(tol, 1e-12));
}

// Pr(T > X_{k:n}) for k = 0..n; successive differences reproduce p.
inline IndexVector tail_signature(const StructureFunction& phi,
                                  const JointLifetimeModel& model,
                                  const EvalOptions& opts = {}) {
    detail::require_same_n(phi, model);
    const Method method = resolve_method(model, opts.method);
    const int n = phi.n();
    if (method == Method::Exact) {
        if (std::holds_alternative<Exchangeable>(model)) {
            const auto counts = detail::working_counts(phi);
            std::vector<Rational> tail(n + 1, Rational{});
            for (int k = 0; k <= n; ++k)
                tail[k] = Rational(counts[n - k], binomial(n, n - k));
            return make_exact_index(IndexKind::TailSignature, n, std::move(tail));
        }
        const auto tables = detail::exact_tables(model);
        return detail::finish_rational(IndexKind::TailSignature, n,
                                       detail::tail_from_q(phi, tables.q), model);
    }
    if (method == Method::MonteCarlo) {
        // Partial sums of the sampled signature keep the tail consistent
        // with mc_signature's estimate.
        McEstimate est = mc_signature(phi, model, opts.samples, opts.seed);
        std::vector<double> tail(n + 1, 0.0);
        tail[0] = 1.0;
        for (int k = 1; k <= n; ++k) tail[k] = tail[k - 1] - est.mean[k - 1];
        if (std::abs(tail[n]) < 1e-12) tail[n] = 0.0;
        double worst_se = 0.0;
        for (double se : est.standard_error) worst_se = std::max(worst_se, se);
        return make_float_index(IndexKind::TailSignature, n, std::move(tail),
                                4.0 * n * worst_se + 25.0 / static_cast<double>(opts.samples));
    }
    const auto tables = detail::float_tables(model, method, opts);
    std::vector<double> tail = detail::tail_from_q(phi, tables.q);
    const double tol =
        detail::sum_tol(tables.entry_tol * n, std::uint64_t{1} << (n - 1)) * 2.0;
    return make_float_index(IndexKind::TailSignature, n, std::move(tail), tol);
}

// Normalized Shannon entropy H(v) ∈ [0,1] with 0·ln 0 = 0; 1 iff uniform,
// 0 iff Dirac. Only defined for probability-vector kinds and n ≥ 2.
inline double symmetry_index(const IndexVector& v) {
    if (v.kind == IndexKind::TailSignature)
        throw NotADistribution("the tail signature is not a probability distribution");
    if (v.n < 2) throw NotADistribution("symmetry index needs at least 2 components");
    // Negative noise up to the vector's own accumulated error bound is
    // numerical and clips to 0 before the log; anything larger is a real
    // defect.
    const double clip = std::max(1e-12, v.validation_slack());
    double sum = 0.0;
    double h = 0.0;
    for (double w : v.values) {
        if (w < 0.0) {
            if (w < -clip) throw NotADistribution("negative entry in index vector");
            w = 0.0;
        }
        sum += w;
        if (w > 0.0) h -= w * std::log(w);
    }
    if (std::abs(sum - 1.0) > std::max(1e-9, v.validation_slack()))
        throw NotADistribution("index vector does not sum to 1");
    if (h == 0.0) return 0.0;
    // Noise-scale drift past the [0,1] endpoints is numerical.
    return std::clamp(h / std::log(static_cast<double>(v.n)), 0.0, 1.0);
}

// Checks q_j(A) = 1/(n·C(n-1,|A|)) for all (j, A): the exact condition under
// which I_BP = b for every structure. First violating pair is the witness.
struct BpEqualsBResult {
    bool holds_for_all_structures = false;
    std::optional<std::pair<int, Mask>> witness;
};

inline BpEqualsBResult bp_equals_b_check(const JointLifetimeModel& model,
                                         const EvalOptions& opts = {}) {
    const int n = model_n(model);
    if (std::holds_alternative<Exchangeable>(model)) return {true, std::nullopt};
    if (std::holds_alternative<EmpiricalSampler>(model))
        throw MethodUnavailable("bp_equals_b_check needs a deterministic q_j path");
    const double float_tol = std::max(1e-9, 10.0 * opts.tol);
    if (const auto* d = std::get_if<OrderDistribution>(&model)) {
        const auto tables = ordering_tables(*d);
        for (int j = 1; j <= n; ++j) {
            const Mask rest = full_mask(n) & ~component_bit(j);
            for (Mask a = 0; a <= full_mask(n); ++a) {
                if ((a & ~rest) != 0) continue;
                if (tables.qj[j - 1][a] != exchangeable_qj(n, j, a))
                    return {false, std::make_pair(j, a)};
            }
        }
        return {true, std::nullopt};
    }
    QuadratureOptions qopts;
    qopts.abs_tol = opts.tol;
    for (int j = 1; j <= n; ++j) {
        const Mask bit = component_bit(j);
        for (Mask a = 0; a <= full_mask(n); ++a) {
            if (a & bit) continue;
            double value;
            if (const auto* w = std::get_if<IndependentWeibull>(&model))
                value = weibull_qj(*w, j, a, qopts);
            else
                value = independent_qj(std::get<IndependentMarginals>(model), j, a, qopts);
            const double target = to_double(exchangeable_qj(n, j, a));
            if (std::abs(value - target) > float_tol) return {false, std::make_pair(j, a)};
        }
    }
    return {true, std::nullopt};
}

// Checks q(A) = 1/C(n,|A|) for all A (the condition under which p = s for
// every structure); weaker than the q_j condition above.
struct QSymmetryResult {
    bool holds = false;
    std::optional<Mask> witness;
};

inline QSymmetryResult q_symmetry_check(const JointLifetimeModel& model,
                                        const EvalOptions& opts = {}) {
    const int n = model_n(model);
    if (std::holds_alternative<Exchangeable>(model)) return {true, std::nullopt};
    if (std::holds_alternative<EmpiricalSampler>(model))
        throw MethodUnavailable("q_symmetry_check needs a deterministic q path");
    const double float_tol = std::max(1e-9, 10.0 * opts.tol);
    if (const auto* d = std::get_if<OrderDistribution>(&model)) {
        const auto tables = ordering_tables(*d);
        for (Mask a = 0; a <= full_mask(n); ++a)
            if (tables.q[a] != Rational(1, binomial(n, subset_size(a))))
                return {false, a};
        return {true, std::nullopt};
    }
    const Method method = resolve_method(model, opts.method);
    const auto tables = detail::float_tables(model, method, opts);
    for (Mask a = 0; a <= full_mask(n); ++a) {
        const double target = 1.0 / static_cast<double>(binomial(n, subset_size(a)));
        if (std::abs(tables.q[a] - target) > float_tol * n) return {false, a};
    }
    return {true, std::nullopt};
}

}  // namespace bp
