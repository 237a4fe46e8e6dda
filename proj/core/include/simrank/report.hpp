#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simrank/correlation.hpp"
#include "simrank/dataset.hpp"
#include "simrank/normalization.hpp"
#include "simrank/ranking.hpp"

namespace simrank {

enum class OutputFormat { Table, Csv, Json };

std::optional<OutputFormat> parse_output_format(std::string_view name) noexcept;

/// Fixed-point text with round-half-to-even on exact ties, '.' separator
/// regardless of locale.
std::string format_fixed(double value, int decimals);

// -- rankings ---------------------------------------------------------------

/// Table: rank, player, distance to 3 decimals. CSV and JSON carry the
/// shortest round-trip representation of each distance.
std::string emit_ranking(const SimilarityRanking& ranking, OutputFormat format);
std::string emit_ranking_entries(const std::vector<RankingEntry>& entries, OutputFormat format,
                                 std::string_view target, MetricChoice metric);

std::vector<RankingEntry> ranking_entries_from_csv(std::string_view csv);
SimilarityRanking ranking_from_json(std::string_view json);

// -- scatter plots -----------------------------------------------------------

struct ScatterPoint {
    std::string player;
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const ScatterPoint&, const ScatterPoint&) = default;
};

struct ScatterSeries {
    std::string x_criterion;
    std::string y_criterion;
    std::vector<ScatterPoint> points;
    std::optional<LinearFit> trend;
};

bool operator==(const ScatterSeries& a, const ScatterSeries& b);

/// One labelled point per player from the raw columns; the trend is the
/// least-squares line when requested. Throws UnknownCriterion.
ScatterSeries scatter_data(const Dataset& dataset, std::string_view x, std::string_view y, bool with_trend);

std::string emit_scatter(const ScatterSeries& series, OutputFormat format);
std::vector<ScatterPoint> scatter_points_from_csv(std::string_view csv);
ScatterSeries scatter_from_json(std::string_view json);

/// Self-contained SVG: framed axes titled with the criterion names, one
/// marker and label per player, and the trend segment when present.
/// Output depends only on the series. Throws EmptySeries.
void emit_scatter_svg(const ScatterSeries& series, std::ostream& out);
std::string render_scatter_svg(const ScatterSeries& series);

// -- normalized matrix --------------------------------------------------------

/// Player column plus one column per criterion, 6 decimals.
std::string emit_normalized_csv(const NormalizedMatrix& matrix);

// -- correlations -------------------------------------------------------------

/// CSV grid; full precision for Csv, 2 decimals with stars for Table.
/// Undefined cells are written as NA.
std::string emit_correlation_grid(const CorrelationMatrix& matrix, OutputFormat format);
std::string emit_top_pairs(const std::vector<CorrelationCell>& pairs, OutputFormat format);
std::string emit_correlation_json(const CorrelationMatrix& matrix, const std::vector<CorrelationCell>& top);

// -- validation ---------------------------------------------------------------

std::string emit_violations(const std::vector<Violation>& violations);

}  // namespace simrank
