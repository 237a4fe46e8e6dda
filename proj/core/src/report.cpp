#include "simrank/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "simrank/errors.hpp"

namespace simrank {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string pad_right(std::string_view s, std::size_t width) {
    std::string out(s);
    if (out.size() < width) out.append(width - out.size(), ' ');
    return out;
}

std::string pad_left(std::string_view s, std::size_t width) {
    std::string out;
    if (s.size() < width) out.append(width - s.size(), ' ');
    out += s;
    return out;
}

// Renders rows as whitespace-aligned columns separated by two spaces.
// Columns listed in right_aligned are padded on the left.
std::string render_table(const std::vector<std::vector<std::string>>& rows, const std::vector<bool>& right_aligned) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        widths.resize(std::max(widths.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) line += "  ";
            const bool right = c < right_aligned.size() && right_aligned[c];
            line += right ? pad_left(row[c], widths[c]) : pad_right(row[c], widths[c]);
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out.push_back(ch);
        }
    }
    return out;
}

double require_number(const std::string& cell, std::size_t row, std::size_t col) {
    const auto v = detail::parse_decimal(cell);
    if (!v) throw ParseError(row, col, "not a number: '" + cell + "'");
    return *v;
}

std::vector<std::vector<std::string>> records_with_header(std::string_view csv,
                                                          const std::vector<std::string_view>& expected) {
    auto records = detail::parse_csv_records(csv);
    if (records.empty()) throw FormatError("empty CSV document");
    const auto& header = records.front();
    if (header.size() != expected.size()) throw FormatError("unexpected CSV header");
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (detail::trim(header[i]) != expected[i]) throw FormatError("unexpected CSV header");
    }
    for (std::size_t r = 1; r < records.size(); ++r) {
        if (records[r].size() != expected.size()) {
            throw ParseError(r + 1, records[r].size() + 1, "wrong field count");
        }
    }
    return records;
}

double json_number(const nlohmann::json& j) {
    // NaN is written as null
    return j.is_null() ? std::nan("") : j.get<double>();
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) noexcept {
    if (name == "table") return OutputFormat::Table;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    return std::nullopt;
}

std::string format_fixed(double value, int decimals) {
    if (std::isnan(value)) return "NA";
    char buf[400];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals);
    if (ec != std::errc{}) return detail::format_shortest(value);
    std::string out(buf, ptr);
    // "-0.000" reads as a sign error in a table
    if (out.starts_with('-') && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
    return out;
}

// -- rankings ---------------------------------------------------------------

std::string emit_ranking_entries(const std::vector<RankingEntry>& entries, OutputFormat format,
                                 std::string_view target, MetricChoice metric) {
    switch (format) {
        case OutputFormat::Table: {
            std::vector<std::vector<std::string>> rows{{"Rank", "Player", "Distance"}};
            for (const auto& e : entries) {
                rows.push_back({std::to_string(e.rank), e.player, format_fixed(e.distance, 3)});
            }
            return render_table(rows, {false, false, true});
        }
        case OutputFormat::Csv: {
            std::string out = "rank,player,distance\n";
            for (const auto& e : entries) {
                out += std::to_string(e.rank) + ',' + detail::quote_csv_field(e.player) + ',' +
                       detail::format_shortest(e.distance) + '\n';
            }
            return out;
        }
        case OutputFormat::Json: {
            ordered_json doc;
            doc["target"] = std::string(target);
            doc["p"] = metric.p();
            doc["entries"] = ordered_json::array();
            for (const auto& e : entries) {
                doc["entries"].push_back({{"rank", e.rank}, {"player", e.player}, {"distance", e.distance}});
            }
            return doc.dump(2) + "\n";
        }
    }
    return {};
}

std::string emit_ranking(const SimilarityRanking& ranking, OutputFormat format) {
    return emit_ranking_entries(ranking.entries, format, ranking.target, ranking.metric);
}

std::vector<RankingEntry> ranking_entries_from_csv(std::string_view csv) {
    const auto records = records_with_header(csv, {"rank", "player", "distance"});
    std::vector<RankingEntry> out;
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        RankingEntry e;
        const double rank = require_number(rec[0], r + 1, 1);
        if (rank < 1 || rank != std::floor(rank)) throw ParseError(r + 1, 1, "rank must be a positive integer");
        e.rank = static_cast<std::size_t>(rank);
        e.player = rec[1];
        e.distance = require_number(rec[2], r + 1, 3);
        out.push_back(std::move(e));
    }
    return out;
}

SimilarityRanking ranking_from_json(std::string_view json) {
    try {
        const auto doc = nlohmann::json::parse(json);
        SimilarityRanking ranking{doc.at("target").get<std::string>(), MetricChoice(doc.at("p").get<double>()), {}};
        for (const auto& e : doc.at("entries")) {
            ranking.entries.push_back(
                {e.at("rank").get<std::size_t>(), e.at("player").get<std::string>(), json_number(e.at("distance"))});
        }
        return ranking;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("bad ranking JSON: ") + e.what());
    }
}

// -- scatter plots -----------------------------------------------------------

bool operator==(const ScatterSeries& a, const ScatterSeries& b) {
    if (a.x_criterion != b.x_criterion || a.y_criterion != b.y_criterion || a.points != b.points) return false;
    if (a.trend.has_value() != b.trend.has_value()) return false;
    return !a.trend || (a.trend->slope == b.trend->slope && a.trend->intercept == b.trend->intercept);
}

ScatterSeries scatter_data(const Dataset& dataset, std::string_view x, std::string_view y, bool with_trend) {
    const auto xs = dataset.column(x);
    const auto ys = dataset.column(y);

    ScatterSeries series{std::string(x), std::string(y), {}, std::nullopt};
    series.points.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        series.points.push_back({dataset.players()[i].name, xs[i], ys[i]});
    }
    if (with_trend) series.trend = least_squares_line(xs, ys);
    return series;
}

std::string emit_scatter(const ScatterSeries& series, OutputFormat format) {
    switch (format) {
        case OutputFormat::Table: {
            std::vector<std::vector<std::string>> rows{{"Player", series.x_criterion, series.y_criterion}};
            for (const auto& p : series.points) {
                rows.push_back({p.player, format_fixed(p.x, 2), format_fixed(p.y, 2)});
            }
            std::string out = render_table(rows, {false, true, true});
            if (series.trend) {
                out += "\ntrend: " + series.y_criterion + " = " + format_fixed(series.trend->slope, 4) + " * " +
                       series.x_criterion + " + " + format_fixed(series.trend->intercept, 4) + "\n";
            }
            return out;
        }
        case OutputFormat::Csv: {
            std::string out = "player,x,y\n";
            for (const auto& p : series.points) {
                out += detail::quote_csv_field(p.player) + ',' + detail::format_shortest(p.x) + ',' +
                       detail::format_shortest(p.y) + '\n';
            }
            return out;
        }
        case OutputFormat::Json: {
            ordered_json doc;
            doc["x"] = series.x_criterion;
            doc["y"] = series.y_criterion;
            doc["points"] = ordered_json::array();
            for (const auto& p : series.points) {
                doc["points"].push_back({{"player", p.player}, {"x", p.x}, {"y", p.y}});
            }
            if (series.trend) {
                doc["trend"] = {{"slope", series.trend->slope}, {"intercept", series.trend->intercept}};
            }
            return doc.dump(2) + "\n";
        }
    }
    return {};
}

std::vector<ScatterPoint> scatter_points_from_csv(std::string_view csv) {
    const auto records = records_with_header(csv, {"player", "x", "y"});
    std::vector<ScatterPoint> out;
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        out.push_back({rec[0], require_number(rec[1], r + 1, 2), require_number(rec[2], r + 1, 3)});
    }
    return out;
}

ScatterSeries scatter_from_json(std::string_view json) {
    try {
        const auto doc = nlohmann::json::parse(json);
        ScatterSeries series{doc.at("x").get<std::string>(), doc.at("y").get<std::string>(), {}, std::nullopt};
        for (const auto& p : doc.at("points")) {
            series.points.push_back({p.at("player").get<std::string>(), p.at("x").get<double>(), p.at("y").get<double>()});
        }
        if (doc.contains("trend")) {
            series.trend = LinearFit{doc["trend"].at("slope").get<double>(), doc["trend"].at("intercept").get<double>()};
        }
        return series;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("bad scatter JSON: ") + e.what());
    }
}

namespace {

struct AxisRange {
    double lo;
    double hi;
};

AxisRange padded_range(double lo, double hi) {
    if (lo == hi) {
        const double half = std::max(std::fabs(lo) * 0.1, 0.5);
        return {lo - half, hi + half};
    }
    const double pad = (hi - lo) * 0.05;
    return {lo - pad, hi + pad};
}

int tick_decimals(const AxisRange& r) {
    const double span = r.hi - r.lo;
    if (span >= 20.0) return 0;
    if (span >= 2.0) return 1;
    return 2;
}

}  // namespace

void emit_scatter_svg(const ScatterSeries& series, std::ostream& out) {
    if (series.points.empty()) throw EmptySeries();

    constexpr int kWidth = 800;
    constexpr int kHeight = 600;
    constexpr double kLeft = 80;
    constexpr double kRight = 30;
    constexpr double kTop = 40;
    constexpr double kBottom = 70;
    constexpr int kTicks = 5;
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;

    auto [x_min, x_max] = std::minmax_element(series.points.begin(), series.points.end(),
                                              [](const ScatterPoint& a, const ScatterPoint& b) { return a.x < b.x; });
    auto [y_min, y_max] = std::minmax_element(series.points.begin(), series.points.end(),
                                              [](const ScatterPoint& a, const ScatterPoint& b) { return a.y < b.y; });
    const AxisRange xr = padded_range(x_min->x, x_max->x);
    const AxisRange yr = padded_range(y_min->y, y_max->y);

    auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
    auto py = [&](double y) { return kTop + (yr.hi - y) / (yr.hi - yr.lo) * plot_h; };
    auto num = [](double v) { return format_fixed(v, 2); };

    const std::string x_name = xml_escape(series.x_criterion);
    const std::string y_name = xml_escape(series.y_criterion);

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\">\n"
        << "  <title>" << y_name << " versus " << x_name << "</title>\n"
        << "  <rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n"
        << "  <defs>\n"
        << "    <clipPath id=\"plot-area\"><rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\""
        << num(plot_w) << "\" height=\"" << num(plot_h) << "\"/></clipPath>\n"
        << "  </defs>\n";

    out << "  <g class=\"axes\" stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n"
        << "    <rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\"" << num(plot_w) << "\" height=\""
        << num(plot_h) << "\"/>\n";
    for (int i = 0; i <= kTicks; ++i) {
        const double fx = kLeft + plot_w * i / kTicks;
        const double fy = kTop + plot_h * i / kTicks;
        out << "    <line x1=\"" << num(fx) << "\" y1=\"" << num(kTop + plot_h) << "\" x2=\"" << num(fx) << "\" y2=\""
            << num(kTop + plot_h + 5) << "\"/>\n"
            << "    <line x1=\"" << num(kLeft - 5) << "\" y1=\"" << num(fy) << "\" x2=\"" << num(kLeft) << "\" y2=\""
            << num(fy) << "\"/>\n";
    }
    out << "  </g>\n";

    out << "  <g class=\"tick-labels\" font-size=\"11\" fill=\"black\">\n";
    const int xd = tick_decimals(xr);
    const int yd = tick_decimals(yr);
    for (int i = 0; i <= kTicks; ++i) {
        const double fx = kLeft + plot_w * i / kTicks;
        const double fy = kTop + plot_h * i / kTicks;
        const double xv = xr.lo + (xr.hi - xr.lo) * i / kTicks;
        const double yv = yr.hi - (yr.hi - yr.lo) * i / kTicks;
        out << "    <text x=\"" << num(fx) << "\" y=\"" << num(kTop + plot_h + 18) << "\" text-anchor=\"middle\">"
            << format_fixed(xv, xd) << "</text>\n"
            << "    <text x=\"" << num(kLeft - 8) << "\" y=\"" << num(fy + 4) << "\" text-anchor=\"end\">"
            << format_fixed(yv, yd) << "</text>\n";
    }
    out << "  </g>\n";

    out << "  <text class=\"x-label\" x=\"" << num(kLeft + plot_w / 2) << "\" y=\"" << num(kHeight - 20.0)
        << "\" text-anchor=\"middle\" font-size=\"14\">" << x_name << "</text>\n"
        << "  <text class=\"y-label\" x=\"" << num(-(kTop + plot_h / 2)) << "\" y=\"20.00\""
        << " transform=\"rotate(-90)\" text-anchor=\"middle\" font-size=\"14\">" << y_name << "</text>\n";

    if (series.trend) {
        const double y0 = series.trend->slope * xr.lo + series.trend->intercept;
        const double y1 = series.trend->slope * xr.hi + series.trend->intercept;
        out << "  <line class=\"trend\" x1=\"" << num(px(xr.lo)) << "\" y1=\"" << num(py(y0)) << "\" x2=\""
            << num(px(xr.hi)) << "\" y2=\"" << num(py(y1))
            << "\" stroke=\"blue\" stroke-width=\"1.5\" clip-path=\"url(#plot-area)\"/>\n";
    }

    out << "  <g class=\"points\">\n";
    for (const auto& p : series.points) {
        const double cx = px(p.x);
        const double cy = py(p.y);
        out << "    <circle class=\"marker\" cx=\"" << num(cx) << "\" cy=\"" << num(cy)
            << "\" r=\"4\" fill=\"steelblue\" stroke=\"black\" stroke-width=\"0.5\"/>\n"
            << "    <text class=\"label\" x=\"" << num(cx + 6) << "\" y=\"" << num(cy - 6) << "\" font-size=\"10\">"
            << xml_escape(p.player) << "</text>\n";
    }
    out << "  </g>\n"
        << "</svg>\n";
}

std::string render_scatter_svg(const ScatterSeries& series) {
    std::ostringstream out;
    emit_scatter_svg(series, out);
    return out.str();
}

// -- normalized matrix --------------------------------------------------------

std::string emit_normalized_csv(const NormalizedMatrix& matrix) {
    std::string out = "Player";
    for (const auto& c : matrix.criteria()) out += ',' + detail::quote_csv_field(c);
    out += '\n';
    for (std::size_t p = 0; p < matrix.rows(); ++p) {
        out += detail::quote_csv_field(matrix.players()[p]);
        for (std::size_t c = 0; c < matrix.cols(); ++c) out += ',' + format_fixed(matrix.at(p, c), 6);
        out += '\n';
    }
    return out;
}

// -- correlations -------------------------------------------------------------

std::string emit_correlation_grid(const CorrelationMatrix& matrix, OutputFormat format) {
    const bool display = format == OutputFormat::Table;
    std::string out;
    for (const auto& c : matrix.criteria()) out += ',' + detail::quote_csv_field(c);
    out += '\n';
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        out += detail::quote_csv_field(matrix.criteria()[i]);
        for (std::size_t j = 0; j < matrix.size(); ++j) {
            const auto& cell = matrix.at(i, j);
            out += ',';
            if (!cell.defined) {
                out += "NA";
            } else if (display) {
                out += format_fixed(cell.rho, 2) + (i == j ? "" : cell.stars);
            } else {
                out += detail::format_shortest(cell.rho);
            }
        }
        out += '\n';
    }
    return out;
}

std::string emit_top_pairs(const std::vector<CorrelationCell>& pairs, OutputFormat format) {
    switch (format) {
        case OutputFormat::Table: {
            std::vector<std::vector<std::string>> rows{{"#", "Criterion A", "Criterion B", "rho", "p-value", "sig"}};
            std::size_t i = 0;
            for (const auto& c : pairs) {
                rows.push_back({std::to_string(++i), c.criterion_a, c.criterion_b, format_fixed(c.rho, 2),
                                format_fixed(c.p_value, 6), c.stars});
            }
            return render_table(rows, {true, false, false, true, true, false});
        }
        case OutputFormat::Csv: {
            std::string out = "criterion_a,criterion_b,rho,p_value,stars\n";
            for (const auto& c : pairs) {
                out += detail::quote_csv_field(c.criterion_a) + ',' + detail::quote_csv_field(c.criterion_b) + ',' +
                       detail::format_shortest(c.rho) + ',' + detail::format_shortest(c.p_value) + ',' + c.stars +
                       '\n';
            }
            return out;
        }
        case OutputFormat::Json: {
            auto arr = ordered_json::array();
            for (const auto& c : pairs) {
                arr.push_back({{"criterion_a", c.criterion_a},
                               {"criterion_b", c.criterion_b},
                               {"rho", c.rho},
                               {"p_value", c.p_value},
                               {"stars", c.stars}});
            }
            return arr.dump(2) + "\n";
        }
    }
    return {};
}

std::string emit_correlation_json(const CorrelationMatrix& matrix, const std::vector<CorrelationCell>& top) {
    ordered_json doc;
    doc["criteria"] = matrix.criteria();
    doc["samples"] = matrix.samples();
    auto rho = ordered_json::array();
    auto p = ordered_json::array();
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        auto rho_row = ordered_json::array();
        auto p_row = ordered_json::array();
        for (std::size_t j = 0; j < matrix.size(); ++j) {
            const auto& cell = matrix.at(i, j);
            rho_row.push_back(cell.defined ? ordered_json(cell.rho) : ordered_json(nullptr));
            p_row.push_back(cell.defined ? ordered_json(cell.p_value) : ordered_json(nullptr));
        }
        rho.push_back(std::move(rho_row));
        p.push_back(std::move(p_row));
    }
    doc["rho"] = std::move(rho);
    doc["p_value"] = std::move(p);
    doc["top"] = ordered_json::parse(emit_top_pairs(top, OutputFormat::Json));
    return doc.dump(2) + "\n";
}

// -- validation ---------------------------------------------------------------

std::string emit_violations(const std::vector<Violation>& violations) {
    std::string out;
    for (const auto& v : violations) {
        out += std::string(to_string(v.kind));
        if (!v.player.empty()) out += " player='" + v.player + "'";
        if (!v.criterion.empty()) out += " criterion='" + v.criterion + "'";
        out += ": " + v.message + '\n';
    }
    return out;
}

}  // namespace simrank
