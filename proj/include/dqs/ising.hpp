#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dqs/errors.hpp"

namespace dqs {

// Hard default cap on the chain length: 2^24 diagonal entries. Callers that
// really want more can pass a larger cap explicitly.
inline constexpr int default_spin_cap = 24;

// Open chain of n Ising spins with nearest-neighbour coupling:
//
//   H = -epsilon * sum_{i=1..n-1} s_i s_{i+1},   s_i in {+1, -1}.
//
// H is diagonal in the computational basis. Basis index bit b holds spin
// s_{b+1}, with bit value 0 meaning spin +1. Every eigenvalue is an exact
// integer multiple of epsilon, so energies are kept as plain integers in
// units of epsilon; epsilon itself only matters for presentation.
struct IsingChain {
    int spins;
    double epsilon = 1.0;
};

struct EnergyDiagonal {
    int spins;
    double epsilon;
    std::vector<int> values;  // values[i] = H_ii / epsilon, one per basis state
};

struct SpectrumEntry {
    int lambda;      // eigenvalue in units of epsilon
    int degeneracy;  // number of basis states with this energy
    std::vector<std::uint32_t> marked;  // those basis states, ascending
};

struct EnergySpectrum {
    int spins;
    double epsilon;
    std::vector<SpectrumEntry> entries;  // ascending lambda
};

// Index set an oracle negates: all basis states with H_ii = lambda.
struct OracleMask {
    int spins;
    std::vector<std::uint32_t> marked;  // ascending
};

inline EnergyDiagonal build_diagonal(const IsingChain& chain, int spin_cap = default_spin_cap) {
    if (chain.spins < 2 || chain.spins > spin_cap || spin_cap > 30) {
        throw error(errc::size_limit,
                    "chain length must be between 2 and " + std::to_string(spin_cap) +
                        " spins, got " + std::to_string(chain.spins));
    }
    if (!(chain.epsilon > 0.0)) {
        throw error(errc::invalid_argument, "interaction energy epsilon must be positive");
    }

    const std::size_t size = std::size_t{1} << chain.spins;
    std::vector<int> values(size);
    for (std::size_t i = 0; i < size; ++i) {
        // Each bond contributes +1 to sum(s_i s_{i+1}) when the neighbouring
        // bits agree and -1 when they differ.
        int bond_sum = 0;
        for (int b = 0; b + 1 < chain.spins; ++b) {
            const bool differ = ((i >> b) ^ (i >> (b + 1))) & 1u;
            bond_sum += differ ? -1 : 1;
        }
        values[i] = -bond_sum;
    }
    return EnergyDiagonal{chain.spins, chain.epsilon, std::move(values)};
}

inline EnergySpectrum spectrum(const EnergyDiagonal& diagonal) {
    std::map<int, std::vector<std::uint32_t>> groups;
    for (std::size_t i = 0; i < diagonal.values.size(); ++i) {
        groups[diagonal.values[i]].push_back(static_cast<std::uint32_t>(i));
    }
    EnergySpectrum result{diagonal.spins, diagonal.epsilon, {}};
    result.entries.reserve(groups.size());
    for (auto& [lambda, marked] : groups) {
        result.entries.push_back(
            SpectrumEntry{lambda, static_cast<int>(marked.size()), std::move(marked)});
    }
    return result;
}

inline OracleMask oracle_mask(const EnergyDiagonal& diagonal, int lambda) {
    OracleMask mask{diagonal.spins, {}};
    for (std::size_t i = 0; i < diagonal.values.size(); ++i) {
        if (diagonal.values[i] == lambda) {
            mask.marked.push_back(static_cast<std::uint32_t>(i));
        }
    }
    if (mask.marked.empty()) {
        throw error(errc::not_an_eigenvalue,
                    "lambda = " + std::to_string(lambda) + " (in units of epsilon) is not an " +
                        "eigenvalue of the " + std::to_string(diagonal.spins) + "-spin chain");
    }
    return mask;
}

}  // namespace dqs
