#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dqs {

// Identifies which model produced a curve and on which instance. `kind` is
// one of: grover, damped, classical-replace, classical-noreplace,
// classical-fully-damped. cos_phi is set for the damped family only.
struct CurveModel {
    std::string kind;
    std::uint64_t database_size = 0;
    std::uint64_t target_count = 0;
    std::optional<double> cos_phi;
};

// Success probabilities P(1..j_max) for one model on one instance.
struct ProbabilityCurve {
    CurveModel model;
    std::vector<double> p;  // p[j-1] = P(j), each in [0, 1]

    double at(std::uint64_t j) const { return p.at(static_cast<std::size_t>(j - 1)); }
    std::uint64_t max_iterations() const { return p.size(); }
};

}  // namespace dqs
