#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

// Drives the installed binary end to end through a shell, checking output
// bytes and process exit codes.

namespace {

struct CommandResult {
    int exit_code;
    std::string output;  // stdout and stderr interleaved
};

CommandResult run_cli(const std::string& arguments) {
    const std::string command = std::string(DQS_CLI_PATH) + " " + arguments + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        ADD_FAILURE() << "popen failed for: " << command;
        return {-1, ""};
    }
    std::string output;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        output.append(buffer, got);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream body;
    body << in.rdbuf();
    return body.str();
}

class TempDir {
  public:
    TempDir() {
        path_ = std::filesystem::temp_directory_path() /
                ("dqs_cli_test_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter_++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }

    const std::filesystem::path& path() const { return path_; }

  private:
    static int counter_;
    std::filesystem::path path_;
};

int TempDir::counter_ = 0;

TEST(CliSpectrumTest, CsvToStdout) {
    const CommandResult result = run_cli("spectrum --spins 4");
    EXPECT_EQ(result.exit_code, 0);
    EXPECT_EQ(result.output, "lambda,degeneracy\n-3,2\n-1,6\n1,6\n3,2\n");
}

TEST(CliSpectrumTest, JsonDocument) {
    const CommandResult result = run_cli("spectrum --spins 8 --format json");
    ASSERT_EQ(result.exit_code, 0);
    const nlohmann::json doc = nlohmann::json::parse(result.output);
    EXPECT_EQ(doc.at("n"), 8);
    EXPECT_EQ(doc.at("epsilon"), 1.0);
    ASSERT_EQ(doc.at("entries").size(), 8u);
    EXPECT_EQ(doc.at("entries").front().at("lambda"), -7);
    EXPECT_EQ(doc.at("entries").front().at("m"), 2);
}

TEST(CliSpectrumTest, WritesToFile) {
    TempDir dir;
    const std::filesystem::path file = dir.path() / "spectrum.csv";
    const CommandResult result = run_cli("spectrum --spins 2 --out " + file.string());
    EXPECT_EQ(result.exit_code, 0);
    EXPECT_EQ(read_file(file), "lambda,degeneracy\n-1,2\n1,2\n");
}

TEST(CliCurveTest, GroverCheckpointRow) {
    const CommandResult result =
        run_cli("curve --spins 12 --lambda -9 --model grover --max-j 10");
    ASSERT_EQ(result.exit_code, 0);
    EXPECT_NE(result.output.find("j,p_success\n"), std::string::npos);
    EXPECT_NE(result.output.find("\n10,0.9990777893\n"), std::string::npos);
}

TEST(CliCurveTest, SeveralModelsWriteSeparateFiles) {
    TempDir dir;
    const CommandResult result =
        run_cli("curve --spins 8 --lambda -7 --model grover --model damped --max-j 5 --out " +
                dir.path().string());
    EXPECT_EQ(result.exit_code, 0);
    EXPECT_TRUE(
        std::filesystem::exists(dir.path() / "curve_spins8_lambda-7_grover.csv"));
    EXPECT_TRUE(
        std::filesystem::exists(dir.path() / "curve_spins8_lambda-7_damped.csv"));
}

TEST(CliCurveTest, SeveralModelsRequireAnOutputDirectory) {
    const CommandResult result =
        run_cli("curve --spins 8 --lambda -7 --model grover --model damped");
    EXPECT_EQ(result.exit_code, 2);
}

TEST(CliCurveTest, CosPhiNeedsTheDampedModel) {
    EXPECT_EQ(run_cli("curve --spins 8 --lambda -7 --model grover --cos-phi 0.5").exit_code,
              2);
    EXPECT_EQ(run_cli("curve --spins 8 --lambda -7 --model damped --cos-phi 0.5").exit_code,
              0);
    EXPECT_EQ(run_cli("curve --spins 8 --lambda -7 --model damped --cos-phi 1.5").exit_code,
              2);
}

TEST(CliExpectedTest, SummaryJson) {
    const CommandResult result = run_cli("expected --spins 12 --lambda -9 --model grover");
    ASSERT_EQ(result.exit_code, 0);
    const nlohmann::json summary = nlohmann::json::parse(result.output);
    EXPECT_EQ(summary.at("model"), "grover");
    EXPECT_EQ(summary.at("j_star"), 7);
    EXPECT_NEAR(summary.at("e_min").get<double>(), 8.810625796, 1e-9);
    EXPECT_FALSE(summary.at("saturated").get<bool>());
}

TEST(CliExpectedTest, SeveralModelsReturnAnArray) {
    const CommandResult result =
        run_cli("expected --spins 12 --lambda -9 --model grover --model classical-replace");
    ASSERT_EQ(result.exit_code, 0);
    const nlohmann::json summaries = nlohmann::json::parse(result.output);
    ASSERT_TRUE(summaries.is_array());
    ASSERT_EQ(summaries.size(), 2u);
    EXPECT_EQ(summaries[0].at("model"), "grover");
    EXPECT_EQ(summaries[1].at("model"), "classical-replace");
    EXPECT_NEAR(summaries[1].at("e_min").get<double>(), 4096.0 / 22.0, 1e-7);
}

TEST(CliExpectedTest, CsvCurveOnStdout) {
    const CommandResult result =
        run_cli("expected --spins 8 --lambda -7 --model grover --format csv --max-j 20");
    ASSERT_EQ(result.exit_code, 0);
    EXPECT_EQ(result.output.rfind("j,p_success,expected_iterations\n", 0), 0u);
}

TEST(CliExpectedTest, WritesCurveAndSummaryFiles) {
    TempDir dir;
    const CommandResult result =
        run_cli("expected --spins 8 --lambda -7 --model grover --model damped --out " +
                dir.path().string());
    EXPECT_EQ(result.exit_code, 0);
    EXPECT_TRUE(
        std::filesystem::exists(dir.path() / "expected_spins8_lambda-7_grover.csv"));
    EXPECT_TRUE(std::filesystem::exists(dir.path() /
                                        "expected_spins8_lambda-7_summary_grover.json"));
    EXPECT_TRUE(
        std::filesystem::exists(dir.path() / "expected_spins8_lambda-7_damped.csv"));
}

TEST(CliErrorTest, NotAnEigenvalueExitsThree) {
    const CommandResult result = run_cli("curve --spins 8 --lambda -8 --model grover");
    EXPECT_EQ(result.exit_code, 3);
    EXPECT_NE(result.output.find("not an eigenvalue"), std::string::npos);
}

TEST(CliErrorTest, ArgumentProblemsExitTwo) {
    EXPECT_EQ(run_cli("spectrum --spins 1").exit_code, 2);
    EXPECT_EQ(run_cli("spectrum --spins 80").exit_code, 2);
    EXPECT_EQ(run_cli("spectrum").exit_code, 2);
    EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
    EXPECT_EQ(run_cli("curve --spins 8 --lambda -7 --model warp-drive").exit_code, 2);
    EXPECT_EQ(run_cli("curve --spins 8 --lambda -7 --model grover --max-j 0").exit_code, 2);
}

TEST(CliErrorTest, HelpExitsZero) {
    EXPECT_EQ(run_cli("--help").exit_code, 0);
    EXPECT_EQ(run_cli("curve --help").exit_code, 0);
    EXPECT_EQ(run_cli("report --help").exit_code, 0);
}

TEST(CliReportTest, TablesPrintBothChains) {
    const CommandResult result = run_cli("report tables");
    ASSERT_EQ(result.exit_code, 0);
    EXPECT_NE(result.output.find("spins=8  N=256"), std::string::npos);
    EXPECT_NE(result.output.find("spins=12  N=4096"), std::string::npos);
    EXPECT_NE(result.output.find("ref_damped"), std::string::npos);
}

TEST(CliReportTest, FiguresBundleLandsOnDisk) {
    TempDir dir;
    const CommandResult result = run_cli("report figures --out " + dir.path().string());
    ASSERT_EQ(result.exit_code, 0);
    EXPECT_TRUE(std::filesystem::exists(dir.path() / "manifest.json"));
    EXPECT_TRUE(std::filesystem::exists(
        dir.path() / "figure1_probability_spins12_lambda-9_grover.csv"));
    EXPECT_TRUE(std::filesystem::exists(
        dir.path() / "figure3_expected_spins12_lambda-11_damped.csv"));
    const nlohmann::json manifest =
        nlohmann::json::parse(read_file(dir.path() / "manifest.json"));
    EXPECT_EQ(manifest.at("report"), "figures");
    EXPECT_EQ(manifest.at("files").size(), 33u);
}

}  // namespace
