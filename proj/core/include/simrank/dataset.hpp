#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simrank/schema.hpp"

namespace simrank {

/// One player's raw values, aligned with the included criteria of the
/// governing schema (same order as CriteriaSchema::included_names()).
struct PlayerRecord {
    std::string name;
    std::vector<double> values;

    friend bool operator==(const PlayerRecord&, const PlayerRecord&) = default;
};

/// Player x criterion table of raw values. Immutable once built.
///
/// The constructor only checks shape (every record has one value per
/// included criterion). Content rules such as unique names, finite values
/// and a minimum of two players are reported by validate() so that a
/// damaged table can still be inspected.
class Dataset {
public:
    Dataset(CriteriaSchema schema, std::vector<PlayerRecord> players);

    const CriteriaSchema& schema() const noexcept { return schema_; }
    const std::vector<PlayerRecord>& players() const noexcept { return players_; }
    const std::vector<std::string>& criteria() const noexcept { return criteria_; }

    std::size_t player_count() const noexcept { return players_.size(); }
    std::size_t criterion_count() const noexcept { return criteria_.size(); }

    std::optional<std::size_t> player_index(std::string_view name) const noexcept;
    std::optional<std::size_t> criterion_index(std::string_view name) const noexcept;

    double value(std::size_t player, std::size_t criterion) const { return players_[player].values[criterion]; }

    /// Raw column by criterion name; throws UnknownCriterion.
    std::vector<double> column(std::string_view criterion) const;
    std::vector<double> column(std::size_t criterion) const;

    friend bool operator==(const Dataset&, const Dataset&) = default;

private:
    CriteriaSchema schema_;
    std::vector<std::string> criteria_;
    std::vector<PlayerRecord> players_;
};

struct Violation {
    enum class Kind {
        EmptyPlayerName,
        DuplicatePlayer,
        NonFiniteValue,
        NegativeValue,
        TooFewPlayers,
    };

    Kind kind;
    std::string player;     // empty for dataset-level violations
    std::string criterion;  // empty unless a single cell is at fault
    std::string message;

    friend bool operator==(const Violation&, const Violation&) = default;
};

std::string_view to_string(Violation::Kind kind) noexcept;

/// Empty iff every dataset invariant holds.
std::vector<Violation> validate(const Dataset& dataset);

/// Reads a header-first CSV whose first column is "Player". Included
/// criteria are matched to headers by exact (trimmed, case-sensitive) name;
/// other columns are ignored.
Dataset load_dataset(std::istream& csv, const CriteriaSchema& schema);
Dataset load_dataset(std::string_view csv_text, const CriteriaSchema& schema);
Dataset load_dataset_file(const std::filesystem::path& path, const CriteriaSchema& schema);

/// Writes the included columns back as CSV using the shortest decimal text
/// that parses back to the identical double.
std::string to_csv(const Dataset& dataset);

/// Bundled 29-player table (all 20 statistical columns) as CSV text.
std::string_view reference_csv() noexcept;

/// reference_csv() loaded under reference_schema().
const Dataset& reference_dataset();

namespace detail {
/// Splits RFC-4180 style CSV text into records of unquoted fields.
std::vector<std::vector<std::string>> parse_csv_records(std::string_view text);
std::string quote_csv_field(std::string_view field);
std::string format_shortest(double value);
std::optional<double> parse_decimal(std::string_view text) noexcept;
std::string_view trim(std::string_view s) noexcept;
}  // namespace detail

}  // namespace simrank
