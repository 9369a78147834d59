// dqs — spectrum, search-curve, and expected-iterations toolkit for open
// Ising chains: Grover, critically damped, and classical search compared on
// the same eigenvalue-degeneracy instances.
//
// Exit codes: 0 success, 2 argument or domain error, 3 requested lambda is
// not an eigenvalue of the chain.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dqs/analysis.hpp"
#include "dqs/classical.hpp"
#include "dqs/damped.hpp"
#include "dqs/errors.hpp"
#include "dqs/format.hpp"
#include "dqs/grover.hpp"
#include "dqs/ising.hpp"
#include "dqs/report.hpp"
#include "dqs/search.hpp"

namespace {

const std::set<std::string> kModelNames = {
    "grover", "damped", "classical-replace", "classical-noreplace", "classical-fully-damped"};

struct CurveRequest {
    int spins = 0;
    int lambda = 0;
    std::vector<std::string> models;
    std::uint64_t max_j = 0;  // 0 = per-instance default
    std::optional<double> cos_phi;
};

dqs::SearchInstance resolve_instance(int spins, int lambda) {
    const dqs::EnergyDiagonal diagonal = dqs::build_diagonal(dqs::IsingChain{spins, 1.0});
    const dqs::OracleMask mask = dqs::oracle_mask(diagonal, lambda);
    return dqs::SearchInstance(std::uint64_t{1} << spins, mask.marked.size());
}

dqs::ProbabilityCurve make_curve(const dqs::SearchInstance& instance, const std::string& model,
                                 std::uint64_t j_max, const std::optional<double>& cos_phi) {
    if (model == "grover") {
        return dqs::grover_probability_curve(instance, j_max);
    }
    if (model == "damped") {
        const dqs::DampingConfig damping = cos_phi
                                               ? dqs::DampingConfig::explicit_value(*cos_phi)
                                               : dqs::DampingConfig::critical();
        return dqs::damped_probability_curve(instance, damping, j_max);
    }
    if (model == "classical-replace") {
        return dqs::classical_curve(instance, dqs::ClassicalModel::with_replacement, j_max);
    }
    if (model == "classical-noreplace") {
        return dqs::classical_curve(instance, dqs::ClassicalModel::without_replacement, j_max);
    }
    if (model == "classical-fully-damped") {
        return dqs::classical_curve(instance, dqs::ClassicalModel::fully_damped, j_max);
    }
    throw dqs::error(dqs::errc::invalid_argument, "unknown model: " + model);
}

void check_cos_phi_applies(const CurveRequest& request) {
    if (request.cos_phi) {
        bool any_damped = false;
        for (const std::string& model : request.models) {
            any_damped = any_damped || model == "damped";
        }
        if (!any_damped) {
            throw dqs::error(dqs::errc::invalid_argument,
                             "--cos-phi only applies to the damped model");
        }
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw dqs::error(dqs::errc::invalid_argument, "cannot open for writing: " + path.string());
    }
    out << content;
}

// One requested model writes to --out as a plain file (or stdout without
// --out); several models need --out and treat it as a directory.
std::filesystem::path
output_path_for(const std::string& out, const std::string& stem, const std::string& model,
                const std::string& extension, bool multi_model) {
    const std::filesystem::path base(out);
    if (multi_model || std::filesystem::is_directory(base)) {
        return base / (stem + "_" + model + extension);
    }
    return base;
}

int run_spectrum(int spins, double epsilon, const std::string& format, const std::string& out) {
    const dqs::EnergySpectrum spec =
        dqs::spectrum(dqs::build_diagonal(dqs::IsingChain{spins, epsilon}));
    std::string content;
    if (format == "json") {
        content = dqs::spectrum_json(spec).dump(2) + "\n";
    } else {
        std::ostringstream body;
        dqs::write_spectrum_csv(body, spec);
        content = body.str();
    }
    if (out.empty()) {
        std::cout << content;
    } else {
        write_text_file(out, content);
    }
    return 0;
}

int run_curve(const CurveRequest& request, const std::string& out) {
    check_cos_phi_applies(request);
    if (request.models.size() > 1 && out.empty()) {
        throw dqs::error(dqs::errc::invalid_argument,
                         "several models requested; --out must name an output directory");
    }
    const dqs::SearchInstance instance = resolve_instance(request.spins, request.lambda);
    const std::uint64_t j_max = request.max_j > 0 ? request.max_j : 100;
    const std::string stem = "curve_spins" + std::to_string(request.spins) + "_lambda" +
                             std::to_string(request.lambda);
    for (const std::string& model : request.models) {
        const dqs::ProbabilityCurve curve =
            make_curve(instance, model, j_max, request.cos_phi);
        std::ostringstream body;
        dqs::write_curve_csv(body, curve);
        if (out.empty()) {
            std::cout << body.str();
        } else {
            write_text_file(
                output_path_for(out, stem, model, ".csv", request.models.size() > 1),
                body.str());
        }
    }
    return 0;
}

int run_expected(const CurveRequest& request, const std::string& format,
                 const std::string& out) {
    check_cos_phi_applies(request);
    if (request.models.size() > 1 && format == "csv" && out.empty()) {
        throw dqs::error(dqs::errc::invalid_argument,
                         "several models with --format csv need --out (one file per model)");
    }
    const dqs::SearchInstance instance = resolve_instance(request.spins, request.lambda);
    const std::uint64_t j_max =
        request.max_j > 0 ? request.max_j : dqs::default_scan_length(instance);
    const std::string stem = "expected_spins" + std::to_string(request.spins) + "_lambda" +
                             std::to_string(request.lambda);

    nlohmann::ordered_json summaries = nlohmann::ordered_json::array();
    for (const std::string& model : request.models) {
        const dqs::ProbabilityCurve curve =
            make_curve(instance, model, j_max, request.cos_phi);
        const dqs::ExpectedIterationsResult result = dqs::minimize_expected(curve);
        summaries.push_back(dqs::summary_json(result));

        std::ostringstream body;
        dqs::write_expected_csv(body, curve, result.e_curve);
        if (!out.empty()) {
            const bool multi = request.models.size() > 1;
            write_text_file(output_path_for(out, stem, model, ".csv", multi), body.str());
            write_text_file(output_path_for(out, stem + "_summary", model, ".json", multi),
                            dqs::summary_json(result).dump(2) + "\n");
        } else if (format == "csv") {
            std::cout << body.str();
        }
    }
    if (format == "json") {
        if (summaries.size() == 1) {
            std::cout << summaries.front().dump(2) << "\n";
        } else {
            std::cout << summaries.dump(2) << "\n";
        }
    }
    return 0;
}

int run_report_tables(double epsilon, const std::string& out) {
    const nlohmann::ordered_json document = dqs::build_tables_document(epsilon);
    std::cout << dqs::render_tables_text(document);
    if (!out.empty()) {
        const std::filesystem::path dir(out);
        std::filesystem::create_directories(dir);
        write_text_file(dir / "tables.json", document.dump(2) + "\n");
        std::cout << "\nwrote " << (dir / "tables.json").string() << "\n";
    }
    return 0;
}

int run_report_figures(double epsilon, const std::string& out) {
    const std::filesystem::path dir(out.empty() ? "figures" : out);
    std::filesystem::create_directories(dir);
    for (const dqs::ReportFile& file : dqs::build_figures_bundle(epsilon)) {
        write_text_file(dir / file.name, file.content);
    }
    std::cout << "wrote figure data to " << dir.string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ising-spin search comparison toolkit: exact spectra, Grover and "
                 "damped quantum search curves, classical baselines, and "
                 "expected-iteration analysis"};
    app.require_subcommand(1);

    // spectrum
    int spec_spins = 0;
    double spec_epsilon = 1.0;
    std::string spec_format = "csv";
    std::string spec_out;
    CLI::App* spectrum_cmd =
        app.add_subcommand("spectrum", "eigenvalues and degeneracies of the chain");
    spectrum_cmd->add_option("--spins", spec_spins, "chain length n (2..24)")->required();
    spectrum_cmd->add_option("--epsilon", spec_epsilon, "interaction energy unit");
    spectrum_cmd->add_option("--format", spec_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    spectrum_cmd->add_option("--out", spec_out, "output file (default: stdout)");

    // curve
    CurveRequest curve_request;
    std::string curve_out;
    CLI::App* curve_cmd =
        app.add_subcommand("curve", "success probability P(j) for one or more models");
    curve_cmd->add_option("--spins", curve_request.spins, "chain length n (2..24)")->required();
    curve_cmd->add_option("--lambda", curve_request.lambda, "eigenvalue in units of epsilon")
        ->required();
    curve_cmd
        ->add_option("--model", curve_request.models,
                     "model (repeatable): grover, damped, classical-replace, "
                     "classical-noreplace, classical-fully-damped")
        ->required()
        ->check(CLI::IsMember(kModelNames));
    curve_cmd->add_option("--max-j", curve_request.max_j, "iterations to tabulate (default 100)");
    double curve_cos_phi = -1.0;
    CLI::Option* curve_cos_phi_opt = curve_cmd->add_option(
        "--cos-phi", curve_cos_phi, "damping override in [0, 1] (damped model only)");
    curve_cmd->add_option("--out", curve_out,
                          "output file, or directory when several models are given");

    // expected
    CurveRequest expected_request;
    std::string expected_format = "json";
    std::string expected_out;
    CLI::App* expected_cmd = app.add_subcommand(
        "expected", "expected iterations E(j) = j/P(j) and its integer minimum");
    expected_cmd->add_option("--spins", expected_request.spins, "chain length n (2..24)")
        ->required();
    expected_cmd
        ->add_option("--lambda", expected_request.lambda, "eigenvalue in units of epsilon")
        ->required();
    expected_cmd
        ->add_option("--model", expected_request.models,
                     "model (repeatable): grover, damped, classical-replace, "
                     "classical-noreplace, classical-fully-damped")
        ->required()
        ->check(CLI::IsMember(kModelNames));
    expected_cmd->add_option("--max-j", expected_request.max_j,
                             "scan length (default: max(1000, ceil(50*sqrt(N/M))))");
    double expected_cos_phi = -1.0;
    CLI::Option* expected_cos_phi_opt = expected_cmd->add_option(
        "--cos-phi", expected_cos_phi, "damping override in [0, 1] (damped model only)");
    expected_cmd->add_option("--format", expected_format,
                             "stdout format: json summary or csv curve")
        ->check(CLI::IsMember({"csv", "json"}));
    expected_cmd->add_option("--out", expected_out,
                             "directory for per-model curve CSV and summary JSON files");

    // report tables | report figures
    double report_epsilon = 1.0;
    std::string report_out;
    CLI::App* report_cmd = app.add_subcommand("report", "regenerate the summary datasets");
    report_cmd->require_subcommand(1);
    CLI::App* tables_cmd = report_cmd->add_subcommand(
        "tables", "minimum expected iterations for both chains, next to the "
                  "published reference values");
    tables_cmd->add_option("--epsilon", report_epsilon, "interaction energy unit");
    tables_cmd->add_option("--out", report_out, "directory to write tables.json into");
    CLI::App* figures_cmd = report_cmd->add_subcommand(
        "figures", "per-figure CSV datasets (probability and expected-iteration curves)");
    figures_cmd->add_option("--epsilon", report_epsilon, "interaction energy unit");
    figures_cmd->add_option("--out", report_out, "directory to write into (default: figures)");

    try {
        app.parse(argc, argv);

        if (*spectrum_cmd) {
            return run_spectrum(spec_spins, spec_epsilon, spec_format, spec_out);
        }
        if (*curve_cmd) {
            if (curve_cos_phi_opt->count() > 0) {
                curve_request.cos_phi = curve_cos_phi;
            }
            if (curve_request.max_j == 0 && curve_cmd->count("--max-j") > 0) {
                throw dqs::error(dqs::errc::invalid_argument, "--max-j must be at least 1");
            }
            return run_curve(curve_request, curve_out);
        }
        if (*expected_cmd) {
            if (expected_cos_phi_opt->count() > 0) {
                expected_request.cos_phi = expected_cos_phi;
            }
            if (expected_request.max_j == 0 && expected_cmd->count("--max-j") > 0) {
                throw dqs::error(dqs::errc::invalid_argument, "--max-j must be at least 1");
            }
            return run_expected(expected_request, expected_format, expected_out);
        }
        if (*tables_cmd) {
            return run_report_tables(report_epsilon, report_out);
        }
        if (*figures_cmd) {
            return run_report_figures(report_epsilon, report_out);
        }
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exits 0
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const dqs::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == dqs::errc::not_an_eigenvalue ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
