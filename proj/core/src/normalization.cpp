#include "simrank/normalization.hpp"

#include <algorithm>

#include "simrank/errors.hpp"

namespace simrank {

NormalizedMatrix::NormalizedMatrix(std::vector<std::string> players, std::vector<std::string> criteria,
                                   std::vector<double> values, std::vector<ColumnExtrema> extrema,
                                   std::vector<DegenerateColumn> warnings)
    : players_(std::move(players)),
      criteria_(std::move(criteria)),
      values_(std::move(values)),
      extrema_(std::move(extrema)),
      warnings_(std::move(warnings)) {
    if (values_.size() != players_.size() * criteria_.size()) {
        throw DimensionMismatch(values_.size(), players_.size() * criteria_.size());
    }
    if (extrema_.size() != criteria_.size()) {
        throw DimensionMismatch(extrema_.size(), criteria_.size());
    }
}

std::optional<std::size_t> NormalizedMatrix::player_index(std::string_view name) const noexcept {
    auto it = std::find(players_.begin(), players_.end(), name);
    if (it == players_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - players_.begin());
}

ColumnExtrema column_extrema(const Dataset& dataset, std::string_view criterion) {
    const auto idx = dataset.criterion_index(criterion);
    if (!idx) throw UnknownCriterion(std::string(criterion));
    if (dataset.player_count() == 0) throw EmptyDataset();

    ColumnExtrema ext{std::string(criterion), dataset.value(0, *idx), dataset.value(0, *idx)};
    for (std::size_t p = 1; p < dataset.player_count(); ++p) {
        const double v = dataset.value(p, *idx);
        ext.min = std::min(ext.min, v);
        ext.max = std::max(ext.max, v);
    }
    return ext;
}

double scale_value(double x, const ColumnExtrema& extrema, Direction direction) noexcept {
    if (extrema.degenerate()) return 0.0;
    const double range = extrema.max - extrema.min;
    return direction == Direction::Maximize ? (x - extrema.min) / range : (extrema.max - x) / range;
}

NormalizedMatrix normalize(const Dataset& dataset) {
    if (const auto violations = validate(dataset); !violations.empty()) {
        throw InvalidDataset("cannot normalize: " + violations.front().message +
                             (violations.front().player.empty() ? "" : " (" + violations.front().player + ")"));
    }

    const auto specs = dataset.schema().included();
    const std::size_t rows = dataset.player_count();
    const std::size_t cols = dataset.criterion_count();

    std::vector<std::string> players;
    players.reserve(rows);
    for (const auto& p : dataset.players()) players.push_back(p.name);

    std::vector<ColumnExtrema> extrema;
    std::vector<DegenerateColumn> warnings;
    std::vector<double> values(rows * cols);
    for (std::size_t c = 0; c < cols; ++c) {
        auto ext = column_extrema(dataset, specs[c].name);
        if (ext.degenerate()) warnings.push_back({ext.criterion, ext.min});
        for (std::size_t p = 0; p < rows; ++p) {
            values[p * cols + c] = scale_value(dataset.value(p, c), ext, specs[c].direction);
        }
        extrema.push_back(std::move(ext));
    }
    return NormalizedMatrix(std::move(players), dataset.criteria(), std::move(values), std::move(extrema),
                            std::move(warnings));
}

}  // namespace simrank
