// Test-only brute-force oracles, written directly from the scenario
// definitions and kept independent of the library's rule/matrix machinery.
#pragma once

#include <vector>

#include "pairrank/types.hpp"

namespace pairrank::testing {

// Direct pair enumeration for verifiable groups (s0..s3 semantics inlined).
inline std::vector<double> brute_force_verifiable_totals(
    const std::vector<ResponseSample>& samples, double alpha, double beta) {
    const size_t n = samples.size();
    std::vector<double> totals(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const auto& a = samples[i];
            const auto& b = samples[j];
            if (a.correct() && !b.correct()) totals[i] += alpha;
            else if (!a.correct() && b.correct()) totals[i] -= alpha;
            else if (a.correct() && b.correct() && a.length < b.length) totals[i] += beta;
            else if (a.correct() && b.correct() && a.length > b.length) totals[i] -= beta;
            // both incorrect, or both correct with equal lengths: 0
        }
    }
    return totals;
}

// Direct pair enumeration for quality-ranked fuzzy groups (f0/f1 inlined).
inline std::vector<double> brute_force_fuzzy_totals(const std::vector<ResponseSample>& samples,
                                                    double alpha, double beta) {
    const size_t n = samples.size();
    std::vector<double> totals(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const auto& a = samples[i];
            const auto& b = samples[j];
            const bool a_better = a.quality_rank() < b.quality_rank();
            const auto& better = a_better ? a : b;
            const auto& worse = a_better ? b : a;
            const double magnitude =
                better.length < worse.length ? alpha + beta : alpha;
            totals[i] += a_better ? magnitude : -magnitude;
        }
    }
    return totals;
}

// Independent O(N^2) re-implementation of the pointwise score adjustment.
struct PointwiseOracleResult {
    std::vector<double> d;
    std::vector<int> c;
    std::vector<double> r;
};

inline PointwiseOracleResult brute_force_pointwise(const std::vector<double>& scores,
                                                   const std::vector<long long>& lengths) {
    const size_t n = scores.size();
    PointwiseOracleResult out;
    out.d.assign(n, 0.0);
    out.c.assign(n, 0);
    out.r.assign(n, 0.0);

    std::vector<bool> defined(n, false);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (scores[i] > scores[j]) {
                const double gap = scores[i] - scores[j];
                if (!defined[i] || gap < out.d[i]) out.d[i] = gap;
                defined[i] = true;
            }
        }
    }
    double sum = 0.0;
    int count = 0;
    for (size_t i = 0; i < n; ++i) {
        if (defined[i]) {
            sum += out.d[i];
            ++count;
        }
    }
    for (size_t i = 0; i < n; ++i) {
        if (!defined[i]) out.d[i] = count > 0 ? sum / count : 0.0;
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (i != j && scores[j] >= scores[i] && lengths[j] < lengths[i]) ++out.c[i];
        }
        out.r[i] = scores[i] - (static_cast<double>(out.c[i]) / static_cast<double>(n)) * out.d[i];
    }
    return out;
}

}  // namespace pairrank::testing
