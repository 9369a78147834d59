#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string>

#include "json.hpp"

#include "dqs/analysis.hpp"
#include "dqs/curve.hpp"
#include "dqs/ising.hpp"

namespace dqs {

// Serialization policy shared by every writer: 10 significant digits,
// C-locale formatting, LF line endings. Identical inputs must produce
// byte-identical output, so nothing here depends on locale or environment.

inline std::string format_number(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.10g", value);
    return buffer;
}

// Doubles destined for JSON are first rounded to the same 10 significant
// digits, so the JSON writer (which prints the shortest round-trip form)
// never emits more precision than the CSV writers do.
inline double round_to_output_precision(double value) {
    return std::strtod(format_number(value).c_str(), nullptr);
}

inline void write_spectrum_csv(std::ostream& out, const EnergySpectrum& spectrum) {
    out << "lambda,degeneracy\n";
    for (const SpectrumEntry& entry : spectrum.entries) {
        out << entry.lambda << ',' << entry.degeneracy << '\n';
    }
}

inline nlohmann::ordered_json spectrum_json(const EnergySpectrum& spectrum) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const SpectrumEntry& entry : spectrum.entries) {
        entries.push_back({{"lambda", entry.lambda}, {"m", entry.degeneracy}});
    }
    return nlohmann::ordered_json{
        {"n", spectrum.spins},
        {"epsilon", round_to_output_precision(spectrum.epsilon)},
        {"entries", entries},
    };
}

inline void write_curve_csv(std::ostream& out, const ProbabilityCurve& curve) {
    out << "j,p_success\n";
    for (std::size_t idx = 0; idx < curve.p.size(); ++idx) {
        out << (idx + 1) << ',' << format_number(curve.p[idx]) << '\n';
    }
}

// Rows whose E(j) is undefined (P(j) = 0) are omitted entirely.
inline void write_expected_csv(std::ostream& out, const ProbabilityCurve& curve,
                               const std::vector<double>& e_curve) {
    out << "j,p_success,expected_iterations\n";
    for (std::size_t idx = 0; idx < curve.p.size() && idx < e_curve.size(); ++idx) {
        if (std::isfinite(e_curve[idx])) {
            out << (idx + 1) << ',' << format_number(curve.p[idx]) << ','
                << format_number(e_curve[idx]) << '\n';
        }
    }
}

inline nlohmann::ordered_json summary_json(const ExpectedIterationsResult& result) {
    return nlohmann::ordered_json{
        {"model", result.model.kind},
        {"j_star", result.j_star},
        {"e_min", round_to_output_precision(result.e_min)},
        {"saturated", result.saturated},
    };
}

}  // namespace dqs
