#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <regex>
#include <sstream>

#include "simrank/dataset.hpp"
#include "simrank/errors.hpp"
#include "simrank/report.hpp"

using namespace simrank;

namespace {

const SimilarityRanking& messi_ranking() {
    static const SimilarityRanking r = rank_by_similarity(normalize(reference_dataset()), "Messi");
    return r;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

std::vector<std::string> lines(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

std::size_t count(const std::string& haystack, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST(FormatFixed, RoundHalfEvenAndNoNegativeZero) {
    EXPECT_EQ(format_fixed(0.0625, 3), "0.062");
    EXPECT_EQ(format_fixed(0.1875, 3), "0.188");
    EXPECT_EQ(format_fixed(3.7694, 3), "3.769");
    EXPECT_EQ(format_fixed(-0.0001, 3), "0.000");
    EXPECT_EQ(format_fixed(std::nan(""), 2), "NA");
}

TEST(EmitRanking, TableFirstRow) {
    const auto out = lines(emit_ranking(messi_ranking(), OutputFormat::Table));
    ASSERT_EQ(out.size(), 29u);
    EXPECT_EQ(tokens(out[0]), (std::vector<std::string>{"Rank", "Player", "Distance"}));
    EXPECT_EQ(tokens(out[1]), (std::vector<std::string>{"1", "Coutinho", "3.769"}));
}

TEST(EmitRanking, SingleEntry) {
    const CriteriaSchema schema({{"a", Direction::Maximize, true}});
    const auto r = rank_by_similarity(normalize(Dataset(schema, {{"x", {0.0}}, {"y", {1.0}}})), "x");
    const auto out = lines(emit_ranking(r, OutputFormat::Table));
    ASSERT_EQ(out.size(), 2u);
    EXPECT_EQ(tokens(out[1]), (std::vector<std::string>{"1", "y", "1.000"}));
}

TEST(EmitRanking, CsvRoundTripKeepsFullPrecision) {
    const auto parsed = ranking_entries_from_csv(emit_ranking(messi_ranking(), OutputFormat::Csv));
    EXPECT_EQ(parsed, messi_ranking().entries);
}

TEST(EmitRanking, JsonRoundTrip) {
    const auto euclid = rank_by_similarity(normalize(reference_dataset()), "C. Ronaldo", MetricChoice::euclidean());
    EXPECT_EQ(ranking_from_json(emit_ranking(euclid, OutputFormat::Json)), euclid);
    EXPECT_EQ(ranking_from_json(emit_ranking(messi_ranking(), OutputFormat::Json)), messi_ranking());
}

TEST(EmitRanking, MalformedInputs) {
    EXPECT_THROW(ranking_entries_from_csv("a,b,c\n"), FormatError);
    EXPECT_THROW(ranking_entries_from_csv("rank,player,distance\n1,x,abc\n"), ParseError);
    EXPECT_THROW(ranking_from_json("{\"target\": 1}"), FormatError);
}

TEST(ScatterData, GoalsVersusAssists) {
    const auto s = scatter_data(reference_dataset(), "Goals pg", "As pg", false);
    ASSERT_EQ(s.points.size(), 29u);
    EXPECT_FALSE(s.trend.has_value());
    const auto it = std::find_if(s.points.begin(), s.points.end(), [](auto& p) { return p.player == "Neymar"; });
    ASSERT_NE(it, s.points.end());
    EXPECT_EQ(it->x, 1.06);
    EXPECT_EQ(it->y, 0.69);
    for (const auto& p : s.points) {
        EXPECT_LE(p.x, it->x);
        EXPECT_LE(p.y, it->y);
    }
}

TEST(ScatterData, DribblingVersusDispossessedTrendsUp) {
    const auto s = scatter_data(reference_dataset(), "Dribbling", "Disp", true);
    ASSERT_TRUE(s.trend.has_value());
    EXPECT_GT(s.trend->slope, 0.0);
}

TEST(ScatterData, SameAxisGivesIdentityTrend) {
    const auto s = scatter_data(reference_dataset(), "KeyP", "KeyP", true);
    for (const auto& p : s.points) EXPECT_EQ(p.x, p.y);
    EXPECT_NEAR(s.trend->slope, 1.0, 1e-9);
    EXPECT_NEAR(s.trend->intercept, 0.0, 1e-9);
}

TEST(ScatterData, UnknownCriterion) {
    EXPECT_THROW(scatter_data(reference_dataset(), "Games", "KeyP", false), UnknownCriterion);
}

TEST(EmitScatter, RoundTrips) {
    const auto s = scatter_data(reference_dataset(), "Dribbling", "Disp", true);
    EXPECT_EQ(scatter_from_json(emit_scatter(s, OutputFormat::Json)), s);
    EXPECT_EQ(scatter_points_from_csv(emit_scatter(s, OutputFormat::Csv)), s.points);
    const auto plain = scatter_data(reference_dataset(), "SpG", "Goals pg", false);
    EXPECT_EQ(scatter_from_json(emit_scatter(plain, OutputFormat::Json)), plain);
}

TEST(EmitScatterSvg, FigureOneHasAllLabelledMarkers) {
    const auto svg = render_scatter_svg(scatter_data(reference_dataset(), "Goals pg", "As pg", false));
    EXPECT_TRUE(svg.starts_with("<?xml"));
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
    EXPECT_EQ(count(svg, "<circle class=\"marker\""), 29u);
    EXPECT_EQ(count(svg, "<text class=\"label\""), 29u);
    EXPECT_NE(svg.find(">Goals pg</text>"), std::string::npos);
    EXPECT_NE(svg.find(">As pg</text>"), std::string::npos);
    EXPECT_NE(svg.find(">C. Ronaldo</text>"), std::string::npos);
    EXPECT_EQ(count(svg, "class=\"trend\""), 0u);
}

TEST(EmitScatterSvg, TrendLineAndEscaping) {
    ScatterSeries s{"a<b", "c&d", {{"O'Neil \"Jr\"", 1.0, 2.0}, {"B", 2.0, 3.0}}, LinearFit{1.0, 1.0}};
    const auto svg = render_scatter_svg(s);
    EXPECT_EQ(count(svg, "class=\"trend\""), 1u);
    EXPECT_NE(svg.find("a&lt;b"), std::string::npos);
    EXPECT_NE(svg.find("c&amp;d"), std::string::npos);
    EXPECT_NE(svg.find("O&apos;Neil &quot;Jr&quot;"), std::string::npos);
}

TEST(EmitScatterSvg, SinglePointAndEmpty) {
    const auto svg = render_scatter_svg(ScatterSeries{"x", "y", {{"solo", 3.0, 3.0}}, std::nullopt});
    EXPECT_EQ(count(svg, "<circle class=\"marker\""), 1u);
    EXPECT_EQ(svg.find("nan"), std::string::npos);
    EXPECT_THROW(render_scatter_svg(ScatterSeries{"x", "y", {}, std::nullopt}), EmptySeries);
}

TEST(EmitScatterSvg, Deterministic) {
    const auto s = scatter_data(reference_dataset(), "Dribbling", "Disp", true);
    EXPECT_EQ(render_scatter_svg(s), render_scatter_svg(s));
}

TEST(EmitNormalizedCsv, SixDecimalsAndShape) {
    const auto out = lines(emit_normalized_csv(normalize(reference_dataset())));
    ASSERT_EQ(out.size(), 30u);
    EXPECT_TRUE(out[0].starts_with("Player,SpG,PS%,"));
    const std::regex cell("^[0-9]\\.[0-9]{6}$");
    auto rec = detail::parse_csv_records(out[1]).front();
    EXPECT_EQ(rec[0], "Messi");
    ASSERT_EQ(rec.size(), 18u);
    for (std::size_t i = 1; i < rec.size(); ++i) EXPECT_TRUE(std::regex_match(rec[i], cell)) << rec[i];
}

TEST(EmitCorrelation, GridAndTopPairs) {
    const auto m = correlation_matrix(reference_dataset());
    const auto grid = lines(emit_correlation_grid(m, OutputFormat::Table));
    EXPECT_EQ(grid.size(), 18u);
    EXPECT_NE(grid[0].find("KeyP"), std::string::npos);
    EXPECT_NE(emit_correlation_grid(m, OutputFormat::Table).find("0.80***"), std::string::npos);

    const auto top = top_correlated_pairs(m, 4);
    const auto csv = lines(emit_top_pairs(top, OutputFormat::Csv));
    ASSERT_EQ(csv.size(), 5u);
    EXPECT_TRUE(csv[1].starts_with("KeyP,AvPasses,0.80"));
    EXPECT_TRUE(csv[1].ends_with(",***"));
    const auto json = emit_correlation_json(m, top);
    EXPECT_NE(json.find("\"top\""), std::string::npos);
}

TEST(EmitViolations, OneLinePerViolation) {
    const std::vector<Violation> v{{Violation::Kind::DuplicatePlayer, "Messi", "", "player name appears more than once"},
                                   {Violation::Kind::NonFiniteValue, "X", "KeyP", "value is not finite"}};
    const auto out = lines(emit_violations(v));
    ASSERT_EQ(out.size(), 2u);
    EXPECT_TRUE(out[0].starts_with("DuplicatePlayer player='Messi'"));
    EXPECT_TRUE(out[1].starts_with("NonFiniteValue player='X' criterion='KeyP'"));
}
