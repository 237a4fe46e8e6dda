#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "simrank/simrank.hpp"

namespace simrank::cli {

namespace {

struct DataOptions {
    std::string data_path;
    std::string schema_path;
};

struct Options {
    DataOptions data;
    std::string target;
    std::string metric = "p1";
    std::string format = "table";
    std::size_t k = 0;
    std::size_t top = 4;
    std::string x;
    std::string y;
    bool trend = false;
    std::string svg_path;
};

void add_data_options(CLI::App* cmd, DataOptions& opts) {
    cmd->add_option("--data", opts.data_path, "Player CSV (default: bundled reference table)");
    cmd->add_option("--schema", opts.schema_path, "Criteria schema JSON (default: bundled reference schema)");
}

void add_metric_option(CLI::App* cmd, Options& opts) {
    cmd->add_option("--metric", opts.metric, "Minkowski exponent: p1 (Manhattan) or p2 (Euclidean)")
        ->check(CLI::IsMember({"p1", "p2"}))
        ->capture_default_str();
}

void add_format_option(CLI::App* cmd, std::string& format, std::vector<std::string> allowed) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(std::move(allowed)))->capture_default_str();
}

Dataset load(const DataOptions& opts) {
    CriteriaSchema schema = reference_schema();
    if (!opts.schema_path.empty()) {
        std::ifstream in(opts.schema_path, std::ios::binary);
        if (!in) throw Error("cannot open schema '" + opts.schema_path + "'");
        schema = load_schema(in);
    }
    if (opts.data_path.empty()) return load_dataset(reference_csv(), schema);
    return load_dataset_file(opts.data_path, schema);
}

NormalizedMatrix normalize_with_warnings(const Dataset& dataset, std::ostream& err) {
    auto matrix = normalize(dataset);
    for (const auto& w : matrix.warnings()) {
        err << "warning: criterion '" << w.criterion << "' is constant; all players normalized to 0\n";
    }
    return matrix;
}

MetricChoice metric_of(const Options& opts) {
    return opts.metric == "p2" ? MetricChoice::euclidean() : MetricChoice::manhattan();
}

OutputFormat format_of(const std::string& name) {
    return parse_output_format(name).value_or(OutputFormat::Table);
}

int run_rank(const Options& opts, std::ostream& out, std::ostream& err) {
    const auto dataset = load(opts.data);
    const auto matrix = normalize_with_warnings(dataset, err);
    out << emit_ranking(rank_by_similarity(matrix, opts.target, metric_of(opts)), format_of(opts.format));
    return kExitOk;
}

int run_nearest(const Options& opts, std::ostream& out, std::ostream& err) {
    const auto dataset = load(opts.data);
    const auto matrix = normalize_with_warnings(dataset, err);
    const auto metric = metric_of(opts);
    out << emit_ranking_entries(nearest_k(matrix, opts.target, opts.k, metric), format_of(opts.format), opts.target,
                                metric);
    return kExitOk;
}

int run_corr(const Options& opts, std::ostream& out) {
    const auto dataset = load(opts.data);
    const auto matrix = correlation_matrix(dataset);
    const auto top = top_correlated_pairs(matrix, opts.top);
    switch (format_of(opts.format)) {
        case OutputFormat::Table:
            out << emit_correlation_grid(matrix, OutputFormat::Table) << '\n'
                << emit_top_pairs(top, OutputFormat::Table);
            break;
        case OutputFormat::Csv:
            out << emit_correlation_grid(matrix, OutputFormat::Csv);
            break;
        case OutputFormat::Json:
            out << emit_correlation_json(matrix, top);
            break;
    }
    return kExitOk;
}

int run_scatter(const Options& opts, std::ostream& out) {
    const auto dataset = load(opts.data);
    const auto series = scatter_data(dataset, opts.x, opts.y, opts.trend);
    if (!opts.svg_path.empty()) {
        std::ofstream svg(opts.svg_path, std::ios::binary | std::ios::trunc);
        if (!svg) throw Error("cannot write '" + opts.svg_path + "'");
        emit_scatter_svg(series, svg);
        if (!svg.flush()) throw Error("failed writing '" + opts.svg_path + "'");
    }
    out << emit_scatter(series, format_of(opts.format));
    return kExitOk;
}

int run_dump_normalized(const Options& opts, std::ostream& out, std::ostream& err) {
    const auto dataset = load(opts.data);
    out << emit_normalized_csv(normalize_with_warnings(dataset, err));
    return kExitOk;
}

int run_validate(const Options& opts, std::ostream& out) {
    const auto dataset = load(opts.data);
    const auto violations = validate(dataset);
    if (!violations.empty()) {
        out << emit_violations(violations);
        return kExitData;
    }
    out << "OK: " << dataset.player_count() << " players, " << dataset.criterion_count() << " criteria\n";
    return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rank players by statistical similarity and explore criterion correlations", "simrank"};
    app.require_subcommand(1);
    app.fallthrough(false);

    Options opts;

    auto* rank = app.add_subcommand("rank", "Rank every player by distance to a target");
    rank->add_option("--target", opts.target, "Target player")->required();
    add_metric_option(rank, opts);
    add_format_option(rank, opts.format, {"table", "csv", "json"});
    add_data_options(rank, opts.data);

    auto* nearest = app.add_subcommand("nearest", "The k players closest to a target");
    nearest->add_option("--target", opts.target, "Target player")->required();
    nearest->add_option("-k", opts.k, "Number of neighbours")->required()->check(CLI::PositiveNumber);
    add_metric_option(nearest, opts);
    add_format_option(nearest, opts.format, {"table", "csv", "json"});
    add_data_options(nearest, opts.data);

    auto* corr = app.add_subcommand("corr", "Pearson correlation matrix over the raw criteria");
    corr->add_option("--top", opts.top, "Number of most correlated pairs to list")->capture_default_str();
    add_format_option(corr, opts.format, {"table", "csv", "json"});
    add_data_options(corr, opts.data);

    auto* scatter = app.add_subcommand("scatter", "Raw values of two criteria, one point per player");
    scatter->add_option("-x", opts.x, "Criterion on the horizontal axis")->required();
    scatter->add_option("-y", opts.y, "Criterion on the vertical axis")->required();
    scatter->add_flag("--trend", opts.trend, "Fit a least-squares trend line");
    scatter->add_option("--svg", opts.svg_path, "Also write the plot as SVG to this path");
    add_format_option(scatter, opts.format, {"table", "csv", "json"});
    add_data_options(scatter, opts.data);

    auto* dump = app.add_subcommand("dump-normalized", "Normalized matrix as CSV (6 decimals)");
    std::string dump_format = "csv";
    add_format_option(dump, dump_format, {"csv"});
    add_data_options(dump, opts.data);

    auto* check = app.add_subcommand("validate", "Check a dataset against the schema");
    add_data_options(check, opts.data);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "simrank: " << e.what() << "\n\n";
        const auto subs = app.get_subcommands();
        err << (subs.empty() ? app.help() : subs.front()->help());
        return kExitUsage;
    }

    try {
        if (rank->parsed()) return run_rank(opts, out, err);
        if (nearest->parsed()) return run_nearest(opts, out, err);
        if (corr->parsed()) return run_corr(opts, out);
        if (scatter->parsed()) return run_scatter(opts, out);
        if (dump->parsed()) return run_dump_normalized(opts, out, err);
        if (check->parsed()) return run_validate(opts, out);
    } catch (const Error& e) {
        err << "simrank: error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}

}  // namespace simrank::cli
