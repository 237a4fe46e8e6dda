#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace simrank {

/// Which end of a criterion's scale counts as better performance.
enum class Direction { Maximize, Minimize };

std::string_view to_string(Direction d) noexcept;

struct CriterionSpec {
    std::string name;
    Direction direction = Direction::Maximize;
    bool included = true;

    friend bool operator==(const CriterionSpec&, const CriterionSpec&) = default;
};

/// Ordered set of criteria. Construction rejects empty or duplicate names,
/// so every live instance satisfies the uniqueness invariant.
class CriteriaSchema {
public:
    CriteriaSchema() = default;
    explicit CriteriaSchema(std::vector<CriterionSpec> criteria);

    const std::vector<CriterionSpec>& criteria() const noexcept { return criteria_; }

    /// Names of the included criteria, in schema order.
    std::vector<std::string> included_names() const;
    std::vector<CriterionSpec> included() const;
    std::size_t included_count() const noexcept;

    const CriterionSpec* find(std::string_view name) const noexcept;

    friend bool operator==(const CriteriaSchema&, const CriteriaSchema&) = default;

private:
    std::vector<CriterionSpec> criteria_;
};

/// The 17-criterion schema over the bundled player table. The three
/// season totals (Games, Goals, Assists) are listed but not included.
const CriteriaSchema& reference_schema();

/// Schema file: JSON array of {"name", "direction": "max"|"min", "included"}.
CriteriaSchema schema_from_json(std::string_view json_text);
CriteriaSchema load_schema(std::istream& in);
std::string schema_to_json(const CriteriaSchema& schema);

}  // namespace simrank
