#pragma once

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "dqs/analysis.hpp"
#include "dqs/classical.hpp"
#include "dqs/damped.hpp"
#include "dqs/format.hpp"
#include "dqs/grover.hpp"
#include "dqs/ising.hpp"
#include "dqs/reference.hpp"
#include "dqs/search.hpp"

namespace dqs {

// Report generation is pure: these functions build the complete document
// (or file bundle) in memory, and the command-line tool only writes the
// bytes out. That keeps every report reproducible and directly testable.

namespace detail {

inline nlohmann::ordered_json expected_min_block(const ExpectedIterationsResult& result,
                                                 std::uint64_t scan_length) {
    nlohmann::ordered_json block{
        {"kind", result.model.kind},
        {"j_star", result.j_star},
        {"e_min", round_to_output_precision(result.e_min)},
        {"saturated", result.saturated},
        {"scan_length", scan_length},
    };
    if (result.model.cos_phi) {
        block["cos_phi"] = round_to_output_precision(*result.model.cos_phi);
    }
    return block;
}

}  // namespace detail

// Minimum-expected-iterations table for the 8- and 12-spin chains: one row
// per spectral eigenvalue, with the critically damped search beside all
// three classical baselines and their ratios, plus the published reference
// values for the matching +/-lambda row.
inline nlohmann::ordered_json build_tables_document(double epsilon = 1.0) {
    nlohmann::ordered_json systems = nlohmann::ordered_json::array();
    for (const int spins : {8, 12}) {
        const EnergyDiagonal diagonal = build_diagonal(IsingChain{spins, epsilon});
        const EnergySpectrum spec = spectrum(diagonal);
        const std::uint64_t database_size = std::uint64_t{1} << spins;

        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const SpectrumEntry& entry : spec.entries) {
            const SearchInstance instance(database_size,
                                          static_cast<std::uint64_t>(entry.degeneracy));
            const std::uint64_t scan = default_scan_length(instance);

            const ExpectedIterationsResult damped = minimize_expected(
                damped_probability_curve(instance, DampingConfig::critical(), scan));
            const ExpectedIterationsResult replace = minimize_expected(
                classical_curve(instance, ClassicalModel::with_replacement, scan));
            const ExpectedIterationsResult noreplace = minimize_expected(
                classical_curve(instance, ClassicalModel::without_replacement, scan));
            const ExpectedIterationsResult fully = minimize_expected(
                classical_curve(instance, ClassicalModel::fully_damped, scan));

            nlohmann::ordered_json row{
                {"lambda", entry.lambda},
                {"degeneracy", entry.degeneracy},
                {"damped", detail::expected_min_block(damped, scan)},
                {"classical_replace", detail::expected_min_block(replace, scan)},
                {"classical_noreplace", detail::expected_min_block(noreplace, scan)},
                {"classical_fully_damped", detail::expected_min_block(fully, scan)},
                {"ratio_replace_over_damped",
                 round_to_output_precision(overhead_ratio(replace, damped))},
                {"ratio_noreplace_over_damped",
                 round_to_output_precision(overhead_ratio(noreplace, damped))},
                {"ratio_fully_damped_over_damped",
                 round_to_output_precision(overhead_ratio(fully, damped))},
            };
            if (const ReferenceRow* ref = find_reference(spins, std::abs(entry.lambda))) {
                row["reference"] = nlohmann::ordered_json{
                    {"e_classical", ref->e_classical},
                    {"e_damped", ref->e_damped},
                    {"ratio", ref->ratio},
                };
            }
            rows.push_back(std::move(row));
        }
        systems.push_back(nlohmann::ordered_json{
            {"spins", spins},
            {"database_size", database_size},
            {"epsilon", round_to_output_precision(epsilon)},
            {"rows", rows},
        });
    }
    return nlohmann::ordered_json{
        {"report", "tables"},
        {"classical_model_default", "classical-replace"},
        {"systems", systems},
    };
}

// Human-readable comparison: computed minima next to the published reference
// columns (reference digits verbatim). Works off the JSON document so the
// two forms can never drift apart.
inline std::string render_tables_text(const nlohmann::ordered_json& document) {
    std::ostringstream out;
    out << "minimum expected iterations before success: computed vs published reference\n";
    out << "(classical column: with-replacement model, E_min = N/M at j = 1;\n";
    out << " damped column: critically damped transfer-matrix recurrence)\n";
    for (const auto& system : document.at("systems")) {
        const int spins = system.at("spins").get<int>();
        out << "\nspins=" << spins << "  N=" << system.at("database_size").get<std::uint64_t>()
            << "\n";
        out << "  lambda     M      E_damped   ref_damped   E_classical   ref_classical"
               "      ratio   ref_ratio\n";
        for (const auto& r : system.at("rows")) {
            const int lambda = r.at("lambda").get<int>();
            const int m = r.at("degeneracy").get<int>();
            const double e_damped = r.at("damped").at("e_min").get<double>();
            const double e_classical = r.at("classical_replace").at("e_min").get<double>();
            const double ratio = r.at("ratio_replace_over_damped").get<double>();
            const ReferenceRow* ref = find_reference(spins, std::abs(lambda));
            char line[256];
            std::snprintf(line, sizeof line,
                          "  %6d  %4d  %12.4f  %11s  %12.4f  %14s  %9.4f  %10s\n", lambda, m,
                          e_damped, ref ? ref->e_damped_text : "-", e_classical,
                          ref ? ref->e_classical_text : "-", ratio,
                          ref ? ref->ratio_text : "-");
            out << line;
        }
    }
    return out.str();
}

// One file of the figures bundle, already rendered to bytes.
struct ReportFile {
    std::string name;
    std::string content;
};

// Datasets behind the probability-oscillation figure (N=4096, M=22: all
// three model families) and the expected-iterations figures (both chains,
// every negative lambda; the spectrum is symmetric, so +lambda curves are
// identical). Returns the CSV files plus a manifest describing each one.
inline std::vector<ReportFile> build_figures_bundle(double epsilon = 1.0) {
    std::vector<ReportFile> files;
    nlohmann::ordered_json manifest_entries = nlohmann::ordered_json::array();

    const auto add_curve_file = [&](const std::string& name, int figure, int spins, int lambda,
                                    const ProbabilityCurve& curve, bool with_expected) {
        std::ostringstream body;
        nlohmann::ordered_json meta{
            {"file", name},
            {"figure", figure},
            {"spins", spins},
            {"database_size", curve.model.database_size},
            {"lambda", lambda},
            {"degeneracy", curve.model.target_count},
            {"model", curve.model.kind},
            {"max_j", curve.p.size()},
        };
        if (curve.model.cos_phi) {
            meta["cos_phi"] = round_to_output_precision(*curve.model.cos_phi);
        }
        if (with_expected) {
            write_expected_csv(body, curve, expected_curve(curve));
            meta["columns"] = "j,p_success,expected_iterations";
        } else {
            write_curve_csv(body, curve);
            meta["columns"] = "j,p_success";
        }
        files.push_back(ReportFile{name, body.str()});
        manifest_entries.push_back(std::move(meta));
    };

    const auto model_curve = [](const SearchInstance& instance, const std::string& kind,
                                std::uint64_t j_max) {
        if (kind == "grover") {
            return grover_probability_curve(instance, j_max);
        }
        if (kind == "damped") {
            return damped_probability_curve(instance, DampingConfig::critical(), j_max);
        }
        return classical_curve(instance, ClassicalModel::with_replacement, j_max);
    };

    // Figure 1: success-probability curves at N=4096, M=22 (lambda = -9).
    {
        const OracleMask mask = oracle_mask(build_diagonal(IsingChain{12, epsilon}), -9);
        const SearchInstance instance(std::uint64_t{1} << 12, mask.marked.size());
        for (const std::string kind : {"grover", "damped", "classical-replace"}) {
            const std::string name = "figure1_probability_spins12_lambda-9_" + kind + ".csv";
            add_curve_file(name, 1, 12, -9, model_curve(instance, kind, 100), false);
        }
    }

    // Figures 2 and 3: expected-iterations curves for every negative lambda
    // of the 8- and 12-spin chains.
    int figure = 2;
    for (const int spins : {8, 12}) {
        const EnergySpectrum spec = spectrum(build_diagonal(IsingChain{spins, epsilon}));
        for (const SpectrumEntry& entry : spec.entries) {
            if (entry.lambda >= 0) {
                continue;
            }
            const SearchInstance instance(std::uint64_t{1} << spins,
                                          static_cast<std::uint64_t>(entry.degeneracy));
            for (const std::string kind : {"grover", "damped", "classical-replace"}) {
                const std::string name = "figure" + std::to_string(figure) + "_expected_spins" +
                                         std::to_string(spins) + "_lambda" +
                                         std::to_string(entry.lambda) + "_" + kind + ".csv";
                add_curve_file(name, figure, spins, entry.lambda,
                               model_curve(instance, kind, 200), true);
            }
        }
        ++figure;
    }

    nlohmann::ordered_json manifest{
        {"report", "figures"},
        {"epsilon", round_to_output_precision(epsilon)},
        {"note", "the spectrum is symmetric under global spin flip; curves for "
                 "negative lambda apply verbatim to +lambda"},
        {"files", manifest_entries},
    };
    files.push_back(ReportFile{"manifest.json", manifest.dump(2) + "\n"});
    return files;
}

}  // namespace dqs
