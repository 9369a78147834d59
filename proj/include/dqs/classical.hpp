#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dqs/curve.hpp"
#include "dqs/damped.hpp"
#include "dqs/errors.hpp"
#include "dqs/search.hpp"

namespace dqs {

// Classical baselines the quantum models are compared against.
enum class ClassicalModel {
    with_replacement,     // i.i.d. draws: P(j) = 1 - (1 - M/N)^j
    without_replacement,  // exhaustive draws: P(j) = 1 - C(N-M, j)/C(N, j)
    fully_damped,         // the damped search map at cos(phi) = 0
};

inline const char* classical_model_name(ClassicalModel model) {
    switch (model) {
        case ClassicalModel::with_replacement:
            return "classical-replace";
        case ClassicalModel::without_replacement:
            return "classical-noreplace";
        case ClassicalModel::fully_damped:
            return "classical-fully-damped";
    }
    throw error(errc::invalid_argument, "unknown classical model");
}

inline ProbabilityCurve classical_curve(const SearchInstance& instance, ClassicalModel model,
                                        std::uint64_t j_max) {
    if (j_max < 1) {
        throw error(errc::invalid_argument, "curve needs at least one iteration");
    }
    const double n = static_cast<double>(instance.database_size);
    const double m = static_cast<double>(instance.target_count);

    ProbabilityCurve curve;
    curve.model = CurveModel{classical_model_name(model), instance.database_size,
                             instance.target_count, {}};
    curve.p.reserve(static_cast<std::size_t>(j_max));

    switch (model) {
        case ClassicalModel::with_replacement: {
            const double q = 1.0 - m / n;
            double miss = 1.0;
            for (std::uint64_t j = 1; j <= j_max; ++j) {
                miss *= q;
                curve.p.push_back(1.0 - miss);
            }
            break;
        }
        case ClassicalModel::without_replacement: {
            // Stable product form: the chance that j draws all miss is
            // prod_{i=0..j-1} (N-M-i)/(N-i), identically zero once j > N-M.
            const std::uint64_t misses_available =
                instance.database_size - instance.target_count;
            double miss = 1.0;
            for (std::uint64_t j = 1; j <= j_max; ++j) {
                if (j <= misses_available) {
                    miss *= static_cast<double>(misses_available - (j - 1)) /
                            static_cast<double>(instance.database_size - (j - 1));
                } else {
                    miss = 0.0;
                }
                curve.p.push_back(1.0 - miss);
            }
            break;
        }
        case ClassicalModel::fully_damped: {
            ProbabilityCurve damped =
                damped_probability_curve(instance, DampingConfig::explicit_value(0.0), j_max);
            curve.model.cos_phi = 0.0;
            curve.p = std::move(damped.p);
            break;
        }
    }
    return curve;
}

// Expected-iterations minimum for the with-replacement model. Restarting
// after every draw is optimal: for P(j) = 1 - q^j, Bernoulli's inequality
// gives 1 - q^j <= j(1 - q), hence E(j) = j/P(j) >= 1/(1-q) = N/M with
// equality exactly at j = 1.
inline std::pair<std::uint64_t, double> classical_expected_min(const SearchInstance& instance) {
    return {1, static_cast<double>(instance.database_size) /
                   static_cast<double>(instance.target_count)};
}

}  // namespace dqs
