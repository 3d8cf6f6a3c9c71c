#pragma once

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "bp/errors.hpp"
#include "bp/rational.hpp"

namespace bp {

enum class IndexKind { BarlowProschan, StructuralB, SignatureP, StructuralS, TailSignature };

inline const char* index_kind_name(IndexKind k) {
    switch (k) {
        case IndexKind::BarlowProschan: return "barlow_proschan";
        case IndexKind::StructuralB: return "structural_b";
        case IndexKind::SignatureP: return "signature_p";
        case IndexKind::StructuralS: return "structural_s";
        case IndexKind::TailSignature: return "tail_signature";
    }
    return "?";
}

// A length-n probability vector (or the length-n+1 tail) with provenance:
// exact rationals when the evaluation path was exact, doubles plus an error
// bound otherwise.
struct IndexVector {
    IndexKind kind = IndexKind::BarlowProschan;
    int n = 0;
    std::vector<double> values;
    std::vector<Rational> exact;  // nonempty iff the path was exact
    double tol = 0.0;             // absolute per-entry bound for float paths

    bool is_exact() const { return !exact.empty(); }

    double validation_slack() const {
        return is_exact() ? 0.0 : std::max(1e-9, 10.0 * tol * std::max(n, 1));
    }

    // Distribution kinds: entries >= 0 summing to 1. Tail: starts at 1, ends
    // at 0, nonincreasing. Exact vectors must satisfy these exactly in the
    // rationals; their double mirror only up to conversion rounding.
    void validate() const {
        const double slack = is_exact() ? 1e-12 * std::max(n, 1) : validation_slack();
        auto fail = [&](const std::string& what) {
            throw Error(std::string(index_kind_name(kind)) + " vector invalid: " + what);
        };
        if (kind == IndexKind::TailSignature) {
            if (static_cast<int>(values.size()) != n + 1) fail("tail must have n+1 entries");
            if (std::abs(values.front() - 1.0) > slack) fail("tail must start at 1");
            if (std::abs(values.back()) > slack) fail("tail must end at 0");
            for (std::size_t k = 1; k < values.size(); ++k)
                if (values[k] > values[k - 1] + slack) fail("tail must be nonincreasing");
            if (is_exact()) {
                if (exact.front() != 1 || exact.back() != 0) fail("tail endpoints");
                for (std::size_t k = 1; k < exact.size(); ++k)
                    if (exact[k] > exact[k - 1]) fail("tail must be nonincreasing");
            }
            return;
        }
        if (static_cast<int>(values.size()) != n) fail("must have n entries");
        double sum = 0.0;
        for (double v : values) {
            if (v < -slack) fail("negative entry " + std::to_string(v));
            sum += v;
        }
        if (std::abs(sum - 1.0) > slack) fail("entries sum to " + std::to_string(sum));
        if (is_exact()) {
            Rational rsum = 0;
            for (const Rational& r : exact) {
                if (r < 0) fail("negative exact entry");
                rsum += r;
            }
            if (rsum != 1) fail("exact entries sum to " + rational_to_string(rsum));
        }
    }
};

inline IndexVector make_exact_index(IndexKind kind, int n, std::vector<Rational> exact) {
    IndexVector v;
    v.kind = kind;
    v.n = n;
    v.exact = std::move(exact);
    v.values.reserve(v.exact.size());
    for (const Rational& r : v.exact) v.values.push_back(to_double(r));
    v.validate();
    return v;
}

inline IndexVector make_float_index(IndexKind kind, int n, std::vector<double> values,
                                    double tol) {
    IndexVector v;
    v.kind = kind;
    v.n = n;
    v.values = std::move(values);
    v.tol = tol;
    v.validate();
    return v;
}

}  // namespace bp
