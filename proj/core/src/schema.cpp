#include "simrank/schema.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <set>

#include <nlohmann/json.hpp>

#include "simrank/errors.hpp"

namespace simrank {

std::string_view to_string(Direction d) noexcept {
    return d == Direction::Maximize ? "max" : "min";
}

CriteriaSchema::CriteriaSchema(std::vector<CriterionSpec> criteria) : criteria_(std::move(criteria)) {
    std::set<std::string_view> seen;
    for (const auto& c : criteria_) {
        if (c.name.empty()) {
            throw SchemaError("criterion name must not be empty");
        }
        if (!seen.insert(c.name).second) {
            throw SchemaError("duplicate criterion '" + c.name + "'");
        }
    }
}

std::vector<std::string> CriteriaSchema::included_names() const {
    std::vector<std::string> names;
    for (const auto& c : criteria_) {
        if (c.included) names.push_back(c.name);
    }
    return names;
}

std::vector<CriterionSpec> CriteriaSchema::included() const {
    std::vector<CriterionSpec> out;
    std::copy_if(criteria_.begin(), criteria_.end(), std::back_inserter(out),
                 [](const CriterionSpec& c) { return c.included; });
    return out;
}

std::size_t CriteriaSchema::included_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(criteria_.begin(), criteria_.end(), [](const CriterionSpec& c) { return c.included; }));
}

const CriterionSpec* CriteriaSchema::find(std::string_view name) const noexcept {
    auto it = std::find_if(criteria_.begin(), criteria_.end(),
                           [name](const CriterionSpec& c) { return c.name == name; });
    return it == criteria_.end() ? nullptr : &*it;
}

const CriteriaSchema& reference_schema() {
    static const CriteriaSchema schema{{
        {"Games", Direction::Maximize, false},
        {"Goals", Direction::Maximize, false},
        {"Assists", Direction::Maximize, false},
        {"SpG", Direction::Maximize, true},
        {"PS%", Direction::Maximize, true},
        {"AerW", Direction::Maximize, true},
        {"Dribbling", Direction::Maximize, true},
        {"Fouled", Direction::Maximize, true},
        {"Offside", Direction::Minimize, true},
        {"Disp", Direction::Minimize, true},
        {"UnschTch", Direction::Minimize, true},
        {"KeyP", Direction::Maximize, true},
        {"AvPasses", Direction::Maximize, true},
        {"Crosses", Direction::Maximize, true},
        {"LongB", Direction::Maximize, true},
        {"ThruB", Direction::Maximize, true},
        {"Tackles", Direction::Maximize, true},
        {"Fouls", Direction::Minimize, true},
        {"Goals pg", Direction::Maximize, true},
        {"As pg", Direction::Maximize, true},
    }};
    return schema;
}

CriteriaSchema schema_from_json(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("schema is not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) {
        throw SchemaError("schema must be a JSON array");
    }

    std::vector<CriterionSpec> criteria;
    criteria.reserve(doc.size());
    for (const auto& item : doc) {
        if (!item.is_object() || !item.contains("name") || !item["name"].is_string()) {
            throw SchemaError("schema entry needs a string 'name'");
        }
        CriterionSpec spec;
        spec.name = item["name"].get<std::string>();

        const auto dir = item.value("direction", std::string("max"));
        if (dir == "max") {
            spec.direction = Direction::Maximize;
        } else if (dir == "min") {
            spec.direction = Direction::Minimize;
        } else {
            throw SchemaError("criterion '" + spec.name + "': direction must be \"max\" or \"min\"");
        }

        if (item.contains("included")) {
            if (!item["included"].is_boolean()) {
                throw SchemaError("criterion '" + spec.name + "': 'included' must be a boolean");
            }
            spec.included = item["included"].get<bool>();
        }
        criteria.push_back(std::move(spec));
    }
    return CriteriaSchema(std::move(criteria));
}

CriteriaSchema load_schema(std::istream& in) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return schema_from_json(text);
}

std::string schema_to_json(const CriteriaSchema& schema) {
    auto doc = nlohmann::ordered_json::array();
    for (const auto& c : schema.criteria()) {
        doc.push_back({{"name", c.name}, {"direction", to_string(c.direction)}, {"included", c.included}});
    }
    return doc.dump(2) + "\n";
}

}  // namespace simrank
