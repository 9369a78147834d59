#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "dqs/curve.hpp"
#include "dqs/errors.hpp"
#include "dqs/search.hpp"

namespace dqs {

// Damping strength for the dissipative search map. cos(phi) = 1 is the
// undamped (pure Grover) limit and cos(phi) = 0 the fully damped one.
// `critical` recomputes cos(phi) = (1 - sin theta)/(1 + sin theta) from the
// instance; `explicit_value` uses a caller-supplied cos(phi) in [0, 1].
struct DampingConfig {
    enum class Mode { critical, explicit_value };

    Mode mode = Mode::critical;
    double cos_phi = 1.0;  // consulted in explicit_value mode only

    static DampingConfig critical() { return DampingConfig{Mode::critical, 1.0}; }
    static DampingConfig explicit_value(double cos_phi) {
        return DampingConfig{Mode::explicit_value, cos_phi};
    }
};

// Trace triple (x, z, t) = (Tr rho X, Tr rho Z, Tr rho). t is the survival
// probability, so P(j) = 1 - t_j is the probability that the search has
// already collapsed onto a target.
struct DampedState {
    double x;
    double z;
    double t;
};

// One search step as a linear map on (x, z, t): a 2*theta rotation combined
// with damping that moves weight from z into the absorbed fraction of t.
struct TransferMatrix {
    double m[3][3];
};

inline double critical_damping(const SearchInstance& instance) {
    const double s = std::sin(instance.theta);
    return (1.0 - s) / (1.0 + s);
}

inline TransferMatrix transfer_matrix(double theta, double cos_phi) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi / 2.0)) {
        throw error(errc::invalid_argument, "theta must lie in [0, pi/2]");
    }
    if (!(cos_phi >= 0.0 && cos_phi <= 1.0)) {
        throw error(errc::invalid_argument, "cos(phi) must lie in [0, 1]");
    }
    const double c2 = std::cos(2.0 * theta);
    const double s2 = std::sin(2.0 * theta);
    const double keep = (1.0 + cos_phi * cos_phi) / 2.0;
    const double leak = (1.0 - cos_phi * cos_phi) / 2.0;
    return TransferMatrix{{{c2 * cos_phi, s2 * keep, s2 * leak},
                           {-s2 * cos_phi, c2 * keep, c2 * leak},
                           {0.0, leak, keep}}};
}

inline DampedState initial_state(const SearchInstance& instance) {
    return DampedState{std::sin(instance.theta), std::cos(instance.theta), 1.0};
}

inline DampedState apply(const TransferMatrix& m, const DampedState& s) {
    return DampedState{m.m[0][0] * s.x + m.m[0][1] * s.z + m.m[0][2] * s.t,
                       m.m[1][0] * s.x + m.m[1][1] * s.z + m.m[1][2] * s.t,
                       m.m[2][0] * s.x + m.m[2][1] * s.z + m.m[2][2] * s.t};
}

inline double resolve_cos_phi(const SearchInstance& instance, const DampingConfig& damping) {
    if (damping.mode == DampingConfig::Mode::critical) {
        return critical_damping(instance);
    }
    if (!(damping.cos_phi >= 0.0 && damping.cos_phi <= 1.0)) {
        throw error(errc::invalid_argument, "cos(phi) must lie in [0, 1]");
    }
    return damping.cos_phi;
}

// States after 1..j_max applications of the transfer matrix to the initial
// trace vector (sin theta, cos theta, 1).
inline std::vector<DampedState> damped_trajectory(const SearchInstance& instance,
                                                  const DampingConfig& damping,
                                                  std::uint64_t j_max) {
    if (j_max < 1) {
        throw error(errc::invalid_argument, "trajectory needs at least one step");
    }
    const TransferMatrix m = transfer_matrix(instance.theta, resolve_cos_phi(instance, damping));
    std::vector<DampedState> states;
    states.reserve(static_cast<std::size_t>(j_max));
    DampedState s = initial_state(instance);
    for (std::uint64_t j = 0; j < j_max; ++j) {
        s = apply(m, s);
        states.push_back(s);
    }
    return states;
}

inline ProbabilityCurve damped_probability_curve(const SearchInstance& instance,
                                                 const DampingConfig& damping,
                                                 std::uint64_t j_max) {
    const double cos_phi = resolve_cos_phi(instance, damping);
    ProbabilityCurve curve;
    curve.model =
        CurveModel{"damped", instance.database_size, instance.target_count, cos_phi};
    curve.p.reserve(static_cast<std::size_t>(j_max));
    for (const DampedState& s : damped_trajectory(instance, damping, j_max)) {
        // 1 - t is a probability up to rounding; clamp the last few ulps.
        curve.p.push_back(std::clamp(1.0 - s.t, 0.0, 1.0));
    }
    return curve;
}

// Consistency probe for the undamped limit: with cos(phi) = 1 the map is a
// pure 2*theta rotation of (x, z) with t pinned at 1, so the trajectory must
// track (sin((2j+1) theta), cos((2j+1) theta)). Returns the largest absolute
// deviation seen over j <= j_max.
inline double undamped_limit_check(const SearchInstance& instance, std::uint64_t j_max) {
    double worst = 0.0;
    std::uint64_t j = 1;
    for (const DampedState& s :
         damped_trajectory(instance, DampingConfig::explicit_value(1.0), j_max)) {
        const double angle = (2.0 * static_cast<double>(j) + 1.0) * instance.theta;
        worst = std::max(worst, std::abs(s.x - std::sin(angle)));
        worst = std::max(worst, std::abs(s.z - std::cos(angle)));
        ++j;
    }
    return worst;
}

}  // namespace dqs
