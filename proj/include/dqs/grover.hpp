#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dqs/curve.hpp"
#include "dqs/errors.hpp"
#include "dqs/ising.hpp"
#include "dqs/search.hpp"

namespace dqs {

// Neumaier-compensated sum. The diffusion step reflects about the exact mean;
// a naive left-fold accumulation lets the 2^12-element state norm drift to
// ~2e-12 over 200 iterations, while the compensated sum keeps it near 2e-15.
inline double compensated_sum(const double* data, std::size_t count) {
    double sum = 0.0;
    double compensation = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double x = data[i];
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            compensation += (sum - t) + x;
        } else {
            compensation += (x - t) + sum;
        }
        sum = t;
    }
    return sum + compensation;
}

inline double compensated_sum(const std::vector<double>& values) {
    return compensated_sum(values.data(), values.size());
}

// Amplitudes after j Grover iterations in closed form: every target basis
// state carries k = sin((2j+1)theta)/sqrt(M) and every nontarget state
// carries l = cos((2j+1)theta)/sqrt(N-M).
struct GroverAmplitudes {
    std::uint64_t iterations;
    double k;  // per-target amplitude
    double l;  // per-nontarget amplitude
};

inline GroverAmplitudes closed_form_amplitudes(const SearchInstance& instance, std::uint64_t j) {
    if (instance.target_count == instance.database_size) {
        throw error(errc::degenerate_instance,
                    "every database entry is a target; the nontarget amplitude is undefined");
    }
    const double angle = (2.0 * static_cast<double>(j) + 1.0) * instance.theta;
    const double m = static_cast<double>(instance.target_count);
    const double rest = static_cast<double>(instance.database_size - instance.target_count);
    return GroverAmplitudes{j, std::sin(angle) / std::sqrt(m), std::cos(angle) / std::sqrt(rest)};
}

// P(j) = M * k_j^2 = sin^2((2j+1) theta). Valid for M = N too (theta = pi/2).
inline double success_probability_grover(const SearchInstance& instance, std::uint64_t j) {
    const double s = std::sin((2.0 * static_cast<double>(j) + 1.0) * instance.theta);
    return s * s;
}

// Rotation by 2*theta acting on the (target, nontarget) amplitude pair
// (sqrt(M) k, sqrt(N-M) l), as the matrix [[c, s], [-s, c]] with
// c = cos 2theta = (N - 2M)/N and s = sin 2theta = 2 sqrt(M(N-M))/N.
struct Rotation2 {
    double c;
    double s;
};

inline Rotation2 grover_rotation(const SearchInstance& instance) {
    const double n = static_cast<double>(instance.database_size);
    const double m = static_cast<double>(instance.target_count);
    return Rotation2{(n - 2.0 * m) / n, 2.0 * std::sqrt(m * (n - m)) / n};
}

// Full state-vector iteration. The dynamics is real: the oracle negates the
// marked amplitudes and the diffusion reflects every amplitude about the
// mean, a_i -> 2*mean - a_i.
class StateVectorSearch {
  public:
    explicit StateVectorSearch(const OracleMask& mask) : marked_(mask.marked) {
        if (mask.spins < 1 || mask.spins > 30) {
            throw error(errc::invalid_argument,
                        "state vector needs between 1 and 30 spins, got " +
                            std::to_string(mask.spins));
        }
        const std::size_t size = std::size_t{1} << mask.spins;
        if (marked_.empty() || marked_.size() >= size) {
            throw error(errc::degenerate_instance,
                        "oracle mask must mark at least one and not every basis state");
        }
        amplitudes_.assign(size, 1.0 / std::sqrt(static_cast<double>(size)));
    }

    void step() {
        for (const std::uint32_t i : marked_) {
            amplitudes_[i] = -amplitudes_[i];
        }
        const double mean =
            compensated_sum(amplitudes_) / static_cast<double>(amplitudes_.size());
        for (double& a : amplitudes_) {
            a = 2.0 * mean - a;
        }
        ++iterations_;
    }

    const std::vector<double>& amplitudes() const { return amplitudes_; }
    const std::vector<std::uint32_t>& marked() const { return marked_; }
    std::uint64_t iterations() const { return iterations_; }

    double marked_probability() const {
        double total = 0.0;
        for (const std::uint32_t i : marked_) {
            total += amplitudes_[i] * amplitudes_[i];
        }
        return total;
    }

  private:
    std::vector<std::uint32_t> marked_;
    std::vector<double> amplitudes_;
    std::uint64_t iterations_ = 0;
};

inline std::vector<double> statevector_run(const OracleMask& mask, std::uint64_t j) {
    StateVectorSearch search(mask);
    for (std::uint64_t i = 0; i < j; ++i) {
        search.step();
    }
    return search.amplitudes();
}

inline ProbabilityCurve grover_probability_curve(const SearchInstance& instance,
                                                 std::uint64_t j_max) {
    if (j_max < 1) {
        throw error(errc::invalid_argument, "curve needs at least one iteration");
    }
    ProbabilityCurve curve;
    curve.model = CurveModel{"grover", instance.database_size, instance.target_count, {}};
    curve.p.reserve(static_cast<std::size_t>(j_max));
    for (std::uint64_t j = 1; j <= j_max; ++j) {
        curve.p.push_back(success_probability_grover(instance, j));
    }
    return curve;
}

}  // namespace dqs
