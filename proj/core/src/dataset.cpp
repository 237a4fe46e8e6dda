#include "simrank/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>
#include <unordered_set>

#include "simrank/errors.hpp"

namespace simrank {

namespace detail {

std::string_view trim(std::string_view s) noexcept {
    constexpr std::string_view ws = " \t\r\n";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

std::vector<std::vector<std::string>> parse_csv_records(std::string_view text) {
    if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool in_quotes = false;
    bool record_started = false;

    auto end_field = [&] {
        record.push_back(std::move(field));
        field.clear();
    };
    auto end_record = [&] {
        end_field();
        // blank lines carry no record
        if (!(record.size() == 1 && trim(record.front()).empty())) {
            records.push_back(std::move(record));
        }
        record.clear();
        record_started = false;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (in_quotes) {
            if (ch == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(ch);
            }
            continue;
        }
        switch (ch) {
            case '"':
                in_quotes = true;
                record_started = true;
                break;
            case ',':
                end_field();
                record_started = true;
                break;
            case '\r':
                if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
                end_record();
                break;
            case '\n':
                end_record();
                break;
            default:
                field.push_back(ch);
                record_started = true;
        }
    }
    if (in_quotes) {
        throw ParseError(records.size() + 1, record.size() + 1, "unterminated quoted field");
    }
    if (record_started || !field.empty() || !record.empty()) end_record();
    return records;
}

std::string quote_csv_field(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos && trim(field) == field) {
        return std::string(field);
    }
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out.push_back('"');
        out.push_back(ch);
    }
    out.push_back('"');
    return out;
}

std::string format_shortest(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::optional<double> parse_decimal(std::string_view text) noexcept {
    text = trim(text);
    if (text.empty()) return std::nullopt;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

}  // namespace detail

Dataset::Dataset(CriteriaSchema schema, std::vector<PlayerRecord> players)
    : schema_(std::move(schema)), criteria_(schema_.included_names()), players_(std::move(players)) {
    for (const auto& p : players_) {
        if (p.values.size() != criteria_.size()) {
            throw DimensionMismatch(p.values.size(), criteria_.size());
        }
    }
}

std::optional<std::size_t> Dataset::player_index(std::string_view name) const noexcept {
    for (std::size_t i = 0; i < players_.size(); ++i) {
        if (players_[i].name == name) return i;
    }
    return std::nullopt;
}

std::optional<std::size_t> Dataset::criterion_index(std::string_view name) const noexcept {
    for (std::size_t i = 0; i < criteria_.size(); ++i) {
        if (criteria_[i] == name) return i;
    }
    return std::nullopt;
}

std::vector<double> Dataset::column(std::string_view criterion) const {
    const auto idx = criterion_index(criterion);
    if (!idx) throw UnknownCriterion(std::string(criterion));
    return column(*idx);
}

std::vector<double> Dataset::column(std::size_t criterion) const {
    std::vector<double> out;
    out.reserve(players_.size());
    for (const auto& p : players_) out.push_back(p.values.at(criterion));
    return out;
}

std::string_view to_string(Violation::Kind kind) noexcept {
    switch (kind) {
        case Violation::Kind::EmptyPlayerName: return "EmptyPlayerName";
        case Violation::Kind::DuplicatePlayer: return "DuplicatePlayer";
        case Violation::Kind::NonFiniteValue: return "NonFiniteValue";
        case Violation::Kind::NegativeValue: return "NegativeValue";
        case Violation::Kind::TooFewPlayers: return "TooFewPlayers";
    }
    return "Unknown";
}

std::vector<Violation> validate(const Dataset& dataset) {
    std::vector<Violation> out;
    std::unordered_set<std::string_view> seen;
    std::unordered_set<std::string_view> reported;

    for (const auto& p : dataset.players()) {
        if (p.name.empty()) {
            out.push_back({Violation::Kind::EmptyPlayerName, "", "", "player name is empty"});
        } else if (!seen.insert(p.name).second && reported.insert(p.name).second) {
            out.push_back({Violation::Kind::DuplicatePlayer, p.name, "", "player name appears more than once"});
        }
        for (std::size_t c = 0; c < p.values.size(); ++c) {
            const double v = p.values[c];
            const auto& crit = dataset.criteria()[c];
            if (!std::isfinite(v)) {
                out.push_back({Violation::Kind::NonFiniteValue, p.name, crit, "value is not finite"});
            } else if (v < 0.0) {
                out.push_back({Violation::Kind::NegativeValue, p.name, crit, "value is negative"});
            }
        }
    }
    if (dataset.player_count() < 2) {
        out.push_back({Violation::Kind::TooFewPlayers, "", "",
                       "need at least 2 players, have " + std::to_string(dataset.player_count())});
    }
    return out;
}

Dataset load_dataset(std::string_view csv_text, const CriteriaSchema& schema) {
    const auto records = detail::parse_csv_records(csv_text);
    if (records.empty()) throw EmptyDataset();

    const auto& header = records.front();
    if (header.empty() || detail::trim(header.front()) != "Player") {
        throw MissingColumn("Player");
    }

    std::map<std::string, std::size_t, std::less<>> header_pos;
    for (std::size_t i = 1; i < header.size(); ++i) {
        const std::string name(detail::trim(header[i]));
        if (!header_pos.emplace(name, i).second && schema.find(name) && schema.find(name)->included) {
            throw ParseError(1, i + 1, "column '" + name + "' appears more than once");
        }
    }

    const auto included = schema.included_names();
    std::vector<std::size_t> source_col;
    source_col.reserve(included.size());
    for (const auto& name : included) {
        auto it = header_pos.find(name);
        if (it == header_pos.end()) throw MissingColumn(name);
        source_col.push_back(it->second);
    }

    if (records.size() < 2) throw EmptyDataset();

    std::vector<PlayerRecord> players;
    players.reserve(records.size() - 1);
    std::unordered_set<std::string> names;
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        const std::size_t row = r + 1;
        if (rec.size() != header.size()) {
            throw ParseError(row, std::min(rec.size(), header.size()) + 1,
                             "expected " + std::to_string(header.size()) + " fields, found " +
                                 std::to_string(rec.size()));
        }
        PlayerRecord p;
        p.name = std::string(detail::trim(rec.front()));
        if (p.name.empty()) throw ParseError(row, 1, "empty player name");
        if (!names.insert(p.name).second) throw DuplicatePlayer(p.name);

        p.values.reserve(source_col.size());
        for (std::size_t col : source_col) {
            const auto v = detail::parse_decimal(rec[col]);
            if (!v) throw ParseError(row, col + 1, "not a number: '" + rec[col] + "'");
            p.values.push_back(*v);
        }
        players.push_back(std::move(p));
    }
    return Dataset(schema, std::move(players));
}

Dataset load_dataset(std::istream& csv, const CriteriaSchema& schema) {
    std::string text{std::istreambuf_iterator<char>(csv), std::istreambuf_iterator<char>()};
    return load_dataset(std::string_view(text), schema);
}

Dataset load_dataset_file(const std::filesystem::path& path, const CriteriaSchema& schema) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    return load_dataset(in, schema);
}

std::string to_csv(const Dataset& dataset) {
    std::string out = "Player";
    for (const auto& c : dataset.criteria()) {
        out += ',';
        out += detail::quote_csv_field(c);
    }
    out += '\n';
    for (const auto& p : dataset.players()) {
        out += detail::quote_csv_field(p.name);
        for (double v : p.values) {
            out += ',';
            out += detail::format_shortest(v);
        }
        out += '\n';
    }
    return out;
}

const Dataset& reference_dataset() {
    static const Dataset dataset = load_dataset(reference_csv(), reference_schema());
    return dataset;
}

}  // namespace simrank
