#include "dqs/classical.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <utility>

#include "dqs/analysis.hpp"
#include "dqs/search.hpp"

namespace dqs {
namespace {

TEST(ClassicalCurveTest, FirstDrawHitsWithRatioProbability) {
    // M/N is exactly representable for these power-of-two sizes, so the
    // first-draw probability must come out bit-exact.
    const SearchInstance instance(4096, 22);
    const ProbabilityCurve with =
        classical_curve(instance, ClassicalModel::with_replacement, 5);
    const ProbabilityCurve without =
        classical_curve(instance, ClassicalModel::without_replacement, 5);
    EXPECT_EQ(with.at(1), 22.0 / 4096.0);
    EXPECT_EQ(without.at(1), 22.0 / 4096.0);
    EXPECT_EQ(with.model.kind, "classical-replace");
    EXPECT_EQ(without.model.kind, "classical-noreplace");
}

TEST(ClassicalCurveTest, WithReplacementFollowsGeometricMisses) {
    const SearchInstance instance(256, 2);
    const ProbabilityCurve curve =
        classical_curve(instance, ClassicalModel::with_replacement, 300);
    const double q = 254.0 / 256.0;
    double miss = 1.0;
    for (std::uint64_t j = 1; j <= 300; ++j) {
        miss *= q;
        ASSERT_NEAR(curve.at(j), 1.0 - miss, 1e-15) << "j=" << j;
    }
}

TEST(ClassicalCurveTest, WithoutReplacementCheckpoint) {
    // P(128) for N=256, M=2: frozen from an exact rational evaluation of
    // 1 - C(254,128)/C(256,128).
    const ProbabilityCurve curve =
        classical_curve(SearchInstance(256, 2), ClassicalModel::without_replacement, 128);
    EXPECT_NEAR(curve.at(128), 0.7509803921568627451, 1e-14);
}

TEST(ClassicalCurveTest, WithoutReplacementExhaustsTheDatabase) {
    const ProbabilityCurve curve =
        classical_curve(SearchInstance(256, 2), ClassicalModel::without_replacement, 260);
    EXPECT_LT(curve.at(254), 1.0);  // the last two draws could still be the targets
    for (std::uint64_t j = 255; j <= 260; ++j) {
        EXPECT_EQ(curve.at(j), 1.0) << "j=" << j;
    }
}

TEST(ClassicalCurveTest, WithoutReplacementDominatesWithReplacement) {
    const SearchInstance instance(256, 14);
    const ProbabilityCurve with =
        classical_curve(instance, ClassicalModel::with_replacement, 500);
    const ProbabilityCurve without =
        classical_curve(instance, ClassicalModel::without_replacement, 500);
    for (std::uint64_t j = 1; j <= 500; ++j) {
        ASSERT_GE(without.at(j), with.at(j)) << "j=" << j;
    }
}

TEST(ClassicalCurveTest, EveryEntryIsATarget) {
    const SearchInstance instance(8, 8);
    EXPECT_EQ(classical_curve(instance, ClassicalModel::with_replacement, 3).at(1), 1.0);
    EXPECT_EQ(classical_curve(instance, ClassicalModel::without_replacement, 3).at(1), 1.0);
}

TEST(ClassicalCurveTest, RejectsEmptyScan) {
    EXPECT_THROW(
        classical_curve(SearchInstance(256, 2), ClassicalModel::with_replacement, 0), error);
}

TEST(ClassicalExpectedTest, RestartingEveryDrawIsOptimal) {
    // For P(j) = 1 - q^j Bernoulli's inequality pins the minimum of j/P(j)
    // at j = 1 with value N/M; the scan must land on it bit-exactly.
    const std::uint64_t sizes[][2] = {{256, 2},   {256, 14},  {256, 42},   {256, 70},
                                      {4096, 2},  {4096, 22}, {4096, 110}, {4096, 330},
                                      {4096, 660}, {4096, 924}};
    for (const auto& size : sizes) {
        const SearchInstance instance(size[0], size[1]);
        const std::pair<std::uint64_t, double> closed = classical_expected_min(instance);
        EXPECT_EQ(closed.first, 1u);
        EXPECT_EQ(closed.second, static_cast<double>(size[0]) / static_cast<double>(size[1]));

        const ProbabilityCurve curve = classical_curve(
            instance, ClassicalModel::with_replacement, default_scan_length(instance));
        const ExpectedIterationsResult result = minimize_expected(curve);
        EXPECT_EQ(result.j_star, 1u) << "N=" << size[0] << " M=" << size[1];
        EXPECT_EQ(result.e_min, closed.second) << "N=" << size[0] << " M=" << size[1];
    }
}

TEST(FullyDampedTest, MatchesTheDampedMapAtZeroCosPhi) {
    const SearchInstance instance(256, 2);
    const ProbabilityCurve classical =
        classical_curve(instance, ClassicalModel::fully_damped, 50);
    const ProbabilityCurve damped =
        damped_probability_curve(instance, DampingConfig::explicit_value(0.0), 50);
    EXPECT_EQ(classical.model.kind, "classical-fully-damped");
    ASSERT_TRUE(classical.model.cos_phi.has_value());
    EXPECT_EQ(*classical.model.cos_phi, 0.0);
    EXPECT_EQ(classical.p, damped.p);
}

TEST(FullyDampedTest, MinimumExpectedIterationsRegression) {
    const SearchInstance instance(256, 2);
    const ProbabilityCurve curve = classical_curve(instance, ClassicalModel::fully_damped,
                                                   default_scan_length(instance));
    const ExpectedIterationsResult result = minimize_expected(curve);
    EXPECT_EQ(result.j_star, 14u);
    EXPECT_NEAR(result.e_min, 141.84000096548795, 141.84 * 1e-12);
}

}  // namespace
}  // namespace dqs
