#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simrank/dataset.hpp"
#include "simrank/schema.hpp"

namespace simrank {

struct ColumnExtrema {
    std::string criterion;
    double min = 0.0;
    double max = 0.0;

    bool degenerate() const noexcept { return min == max; }
    friend bool operator==(const ColumnExtrema&, const ColumnExtrema&) = default;
};

/// Emitted instead of an error when a column is constant; every player gets
/// 0 for that criterion.
struct DegenerateColumn {
    std::string criterion;
    double value = 0.0;

    friend bool operator==(const DegenerateColumn&, const DegenerateColumn&) = default;
};

/// Players x included criteria, each value scaled so the best raw value of a
/// criterion maps to 1 and the worst to 0.
class NormalizedMatrix {
public:
    NormalizedMatrix(std::vector<std::string> players, std::vector<std::string> criteria,
                     std::vector<double> values, std::vector<ColumnExtrema> extrema,
                     std::vector<DegenerateColumn> warnings = {});

    const std::vector<std::string>& players() const noexcept { return players_; }
    const std::vector<std::string>& criteria() const noexcept { return criteria_; }
    const std::vector<ColumnExtrema>& extrema() const noexcept { return extrema_; }
    const std::vector<DegenerateColumn>& warnings() const noexcept { return warnings_; }

    std::size_t rows() const noexcept { return players_.size(); }
    std::size_t cols() const noexcept { return criteria_.size(); }

    double at(std::size_t player, std::size_t criterion) const { return values_[player * cols() + criterion]; }

    /// Contiguous row of one player's normalized coordinates.
    std::span<const double> row(std::size_t player) const {
        return std::span<const double>(values_).subspan(player * cols(), cols());
    }

    std::optional<std::size_t> player_index(std::string_view name) const noexcept;

private:
    std::vector<std::string> players_;
    std::vector<std::string> criteria_;
    std::vector<double> values_;
    std::vector<ColumnExtrema> extrema_;
    std::vector<DegenerateColumn> warnings_;
};

/// Exact minimum and maximum of a raw column; throws UnknownCriterion.
ColumnExtrema column_extrema(const Dataset& dataset, std::string_view criterion);

/// Single-value min-max scaling. Maximize: (x - min) / (max - min);
/// Minimize: (max - x) / (max - min). A constant column yields 0.
double scale_value(double x, const ColumnExtrema& extrema, Direction direction) noexcept;

/// Throws InvalidDataset when validate(dataset) is non-empty.
NormalizedMatrix normalize(const Dataset& dataset);

}  // namespace simrank
