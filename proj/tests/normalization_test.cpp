#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "simrank/dataset.hpp"
#include "simrank/errors.hpp"
#include "simrank/normalization.hpp"

using namespace simrank;

namespace {

std::vector<std::vector<double>> matrix_columns(const NormalizedMatrix& m) {
    std::vector<std::vector<double>> cols(m.cols());
    for (std::size_t p = 0; p < m.rows(); ++p) {
        for (std::size_t c = 0; c < m.cols(); ++c) cols[c].push_back(m.at(p, c));
    }
    return cols;
}

Dataset with_column_transform(const Dataset& ds, std::size_t col, double a, double b) {
    auto players = ds.players();
    for (auto& p : players) p.values[col] = a * p.values[col] + b;
    return Dataset(ds.schema(), players);
}

}  // namespace

TEST(ColumnExtrema, GoalsPerGame) {
    const auto ext = column_extrema(reference_dataset(), "Goals pg");
    EXPECT_EQ(ext.min, 0.24);  // D. Silva
    EXPECT_EQ(ext.max, 1.06);  // Neymar
}

TEST(ColumnExtrema, ShotsPerGameMax) {
    EXPECT_EQ(column_extrema(reference_dataset(), "SpG").max, 6.8);
}

TEST(ColumnExtrema, ConstantColumnAndUnknown) {
    const CriteriaSchema schema({{"c", Direction::Maximize, true}});
    const Dataset ds(schema, {{"a", {3.0}}, {"b", {3.0}}, {"c", {3.0}}});
    const auto ext = column_extrema(ds, "c");
    EXPECT_EQ(ext.min, 3.0);
    EXPECT_EQ(ext.max, 3.0);
    EXPECT_THROW(column_extrema(ds, "nope"), UnknownCriterion);
    EXPECT_THROW(column_extrema(reference_dataset(), "Games"), UnknownCriterion);
}

TEST(ScaleValue, EndpointsFollowDirection) {
    const ColumnExtrema ext{"x", 2.0, 6.0};
    EXPECT_EQ(scale_value(6.0, ext, Direction::Maximize), 1.0);
    EXPECT_EQ(scale_value(2.0, ext, Direction::Maximize), 0.0);
    EXPECT_EQ(scale_value(6.0, ext, Direction::Minimize), 0.0);
    EXPECT_EQ(scale_value(2.0, ext, Direction::Minimize), 1.0);
}

TEST(Normalize, MessiGoalsPerGame) {
    const auto m = normalize(reference_dataset());
    const auto messi = *m.player_index("Messi");
    const auto col = *reference_dataset().criterion_index("Goals pg");
    // (0.95 - 0.24) / (1.06 - 0.24) = 0.71 / 0.82
    EXPECT_NEAR(m.at(messi, col), 0.8658536585365854, 1e-12);
}

TEST(Normalize, MatchesBruteForceOracle) {
    const auto& ds = reference_dataset();
    const auto m = normalize(ds);
    const auto specs = ds.schema().included();
    const auto cols = matrix_columns(m);
    for (std::size_t c = 0; c < ds.criterion_count(); ++c) {
        const auto expected =
            oracle::brute_force_scale(ds.column(c), specs[c].direction == Direction::Minimize);
        for (std::size_t p = 0; p < ds.player_count(); ++p) {
            EXPECT_NEAR(cols[c][p], expected[p], 1e-15) << specs[c].name << " / " << ds.players()[p].name;
        }
    }
}

TEST(Normalize, RangeAndAttainment) {
    const auto m = normalize(reference_dataset());
    for (const auto& col : matrix_columns(m)) {
        for (double v : col) {
            EXPECT_GE(v, 0.0);
            EXPECT_LE(v, 1.0);
        }
        EXPECT_EQ(*std::min_element(col.begin(), col.end()), 0.0);
        EXPECT_EQ(*std::max_element(col.begin(), col.end()), 1.0);
    }
    EXPECT_TRUE(m.warnings().empty());
}

TEST(Normalize, DirectionPicksTheBestRawValue) {
    const auto& ds = reference_dataset();
    const auto m = normalize(ds);
    const auto specs = ds.schema().included();
    for (std::size_t c = 0; c < ds.criterion_count(); ++c) {
        const auto raw = ds.column(c);
        const auto best = specs[c].direction == Direction::Minimize ? std::min_element(raw.begin(), raw.end())
                                                                     : std::max_element(raw.begin(), raw.end());
        EXPECT_EQ(m.at(static_cast<std::size_t>(best - raw.begin()), c), 1.0) << specs[c].name;
    }
}

TEST(Normalize, Monotonicity) {
    const auto& ds = reference_dataset();
    const auto m = normalize(ds);
    const auto specs = ds.schema().included();
    for (std::size_t c = 0; c < ds.criterion_count(); ++c) {
        const bool minimize = specs[c].direction == Direction::Minimize;
        for (std::size_t i = 0; i < ds.player_count(); ++i) {
            for (std::size_t j = 0; j < ds.player_count(); ++j) {
                if (ds.value(i, c) < ds.value(j, c)) {
                    if (minimize) {
                        EXPECT_GT(m.at(i, c), m.at(j, c));
                    } else {
                        EXPECT_LT(m.at(i, c), m.at(j, c));
                    }
                }
            }
        }
    }
}

TEST(Normalize, AffineInvariance) {
    const auto& ds = reference_dataset();
    const auto base = normalize(ds);
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> scale(0.01, 100.0);
    std::uniform_real_distribution<double> shift(-50.0, 50.0);
    std::uniform_int_distribution<std::size_t> pick(0, ds.criterion_count() - 1);
    for (int trial = 0; trial < 200; ++trial) {
        const auto col = pick(rng);
        const double a = scale(rng);
        // keep values non-negative so the dataset still validates
        const double b = std::abs(shift(rng));
        const auto m = normalize(with_column_transform(ds, col, a, b));
        for (std::size_t p = 0; p < ds.player_count(); ++p) {
            ASSERT_NEAR(m.at(p, col), base.at(p, col), 1e-12);
        }
    }
}

TEST(Normalize, PassAccuracyScaleIsIrrelevant) {
    // PS% on a 0-100 scale or as a 0-1 fraction gives the same matrix.
    const auto& ds = reference_dataset();
    const auto col = *ds.criterion_index("PS%");
    const auto base = normalize(ds);
    const auto fraction = normalize(with_column_transform(ds, col, 0.01, 0.0));
    for (std::size_t p = 0; p < ds.player_count(); ++p) {
        EXPECT_NEAR(fraction.at(p, col), base.at(p, col), 1e-12);
    }
}

TEST(Normalize, ConstantColumnWarnsAndMapsToZero) {
    const CriteriaSchema schema({{"flat", Direction::Maximize, true}, {"x", Direction::Minimize, true}});
    const Dataset ds(schema, {{"a", {2.0, 1.0}}, {"b", {2.0, 3.0}}, {"c", {2.0, 2.0}}});
    const auto m = normalize(ds);
    ASSERT_EQ(m.warnings().size(), 1u);
    EXPECT_EQ(m.warnings()[0].criterion, "flat");
    for (std::size_t p = 0; p < 3; ++p) EXPECT_EQ(m.at(p, 0), 0.0);
    EXPECT_EQ(m.at(0, 1), 1.0);
    EXPECT_EQ(m.at(1, 1), 0.0);
    EXPECT_EQ(m.at(2, 1), 0.5);
}

TEST(Normalize, RejectsInvalidDataset) {
    const CriteriaSchema schema({{"x", Direction::Maximize, true}});
    EXPECT_THROW(normalize(Dataset(schema, {{"a", {1.0}}})), InvalidDataset);
    EXPECT_THROW(normalize(Dataset(schema, {{"a", {1.0}}, {"b", {std::nan("")}}})), InvalidDataset);
}
