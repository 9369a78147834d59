#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "dqs/curve.hpp"
#include "dqs/errors.hpp"
#include "dqs/search.hpp"

namespace dqs {

// Expected total queries E(j) = j / P(j) under a run-j-then-restart strategy,
// minimized over integer j. Entries with P(j) = 0 have no defined E(j); they
// are stored as NaN, skipped by the minimizer, and skipped by every writer so
// no non-finite value ever reaches an output file.
struct ExpectedIterationsResult {
    CurveModel model;
    std::uint64_t j_star = 0;  // argmin over scanned j (smallest on ties)
    double e_min = 0.0;
    std::vector<double> e_curve;  // e_curve[j-1] = E(j); NaN where undefined
    bool saturated = false;  // argmin fell on the last scanned j; the true
                             // minimum may lie beyond the scan
};

inline std::vector<double> expected_curve(const ProbabilityCurve& curve) {
    if (curve.p.empty()) {
        throw error(errc::invalid_argument, "empty probability curve");
    }
    std::vector<double> e;
    e.reserve(curve.p.size());
    bool any_defined = false;
    for (std::size_t idx = 0; idx < curve.p.size(); ++idx) {
        const double p = curve.p[idx];
        if (p > 0.0) {
            e.push_back(static_cast<double>(idx + 1) / p);
            any_defined = true;
        } else {
            e.push_back(std::numeric_limits<double>::quiet_NaN());
        }
    }
    if (!any_defined) {
        throw error(errc::no_success,
                    "success probability is zero everywhere; expected iterations undefined");
    }
    return e;
}

inline ExpectedIterationsResult minimize_expected(const ProbabilityCurve& curve) {
    ExpectedIterationsResult result;
    result.model = curve.model;
    result.e_curve = expected_curve(curve);
    double best = std::numeric_limits<double>::infinity();
    std::uint64_t best_j = 0;
    for (std::size_t idx = 0; idx < result.e_curve.size(); ++idx) {
        const double e = result.e_curve[idx];
        if (std::isfinite(e) && e < best) {  // strict: ties keep the smaller j
            best = e;
            best_j = idx + 1;
        }
    }
    result.j_star = best_j;
    result.e_min = best;
    result.saturated = (best_j == result.e_curve.size());
    return result;
}

// Smallest j with P(j) >= p_target.
inline std::uint64_t queries_to_reach(const ProbabilityCurve& curve, double p_target) {
    if (!(p_target > 0.0 && p_target < 1.0)) {
        throw error(errc::invalid_argument, "target probability must lie strictly in (0, 1)");
    }
    double max_p = 0.0;
    for (std::size_t idx = 0; idx < curve.p.size(); ++idx) {
        if (curve.p[idx] >= p_target) {
            return idx + 1;
        }
        max_p = std::max(max_p, curve.p[idx]);
    }
    throw threshold_error("probability " + std::to_string(p_target) + " not reached within " +
                              std::to_string(curve.p.size()) +
                              " iterations; maximum attained " + std::to_string(max_p),
                          max_p);
}

// Cost of the classical search relative to the damped one; > 1 means the
// damped search wins.
inline double overhead_ratio(const ExpectedIterationsResult& classical,
                             const ExpectedIterationsResult& damped) {
    return classical.e_min / damped.e_min;
}

// Default scan length for minimizing E(j): generous enough that every
// instance of interest has its minimum strictly inside the range.
inline std::uint64_t default_scan_length(const SearchInstance& instance) {
    const double span = 50.0 * std::sqrt(static_cast<double>(instance.database_size) /
                                         static_cast<double>(instance.target_count));
    return std::max<std::uint64_t>(1000, static_cast<std::uint64_t>(std::ceil(span)));
}

}  // namespace dqs
