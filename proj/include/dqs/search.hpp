#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "dqs/errors.hpp"

namespace dqs {

// A search problem over a database of size N containing M marked entries.
// theta is the amplitude-plane angle with sin^2(theta) = M/N; it is always
// recomputed from (N, M) on construction so the fields cannot disagree.
struct SearchInstance {
    std::uint64_t database_size;  // N
    std::uint64_t target_count;   // M
    double theta;                 // in (0, pi/2]

    SearchInstance(std::uint64_t n_database, std::uint64_t n_targets)
        : database_size(n_database), target_count(n_targets), theta(0.0) {
        if (n_database == 0 || n_targets == 0 || n_targets > n_database) {
            throw error(errc::invalid_argument,
                        "search instance requires 0 < M <= N, got N=" +
                            std::to_string(n_database) + " M=" + std::to_string(n_targets));
        }
        theta = std::asin(std::sqrt(static_cast<double>(n_targets) /
                                    static_cast<double>(n_database)));
    }
};

}  // namespace dqs
