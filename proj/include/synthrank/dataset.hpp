#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace synthrank {

/// Whether larger raw values of an indicator signal better (stimulant) or
/// worse (de-stimulant) performance.
enum class Direction { stimulant, destimulant };

std::string_view to_string(Direction d);
Direction direction_from_string(std::string_view s);

struct VariableSpec {
    std::string id;
    std::string label;
    std::string unit;
    Direction direction = Direction::stimulant;

    bool operator==(const VariableSpec&) const = default;
};

using Cell = std::optional<double>;

/// Entity x variable grid with possibly missing cells. Immutable after
/// construction.
class IndicatorDataset {
public:
    /// Validates shape, entity-code uniqueness, variable-id uniqueness,
    /// and the minimum 2x1 size. `values` is row-major.
    IndicatorDataset(std::vector<std::string> entities,
                     std::vector<VariableSpec> variables,
                     std::vector<Cell> values);

    std::size_t entity_count() const { return entities_.size(); }
    std::size_t variable_count() const { return variables_.size(); }
    const std::vector<std::string>& entities() const { return entities_; }
    const std::vector<VariableSpec>& variables() const { return variables_; }
    const std::vector<Cell>& values() const { return values_; }

    Cell value(std::size_t entity, std::size_t variable) const;
    Cell value(std::string_view entity_code, std::string_view variable_id) const;

    /// Index of a variable id; throws ConfigError for unknown ids.
    std::size_t variable_index(std::string_view id) const;
    std::size_t entity_index(std::string_view code) const;

    std::size_t missing_count() const;

    /// Restriction to the listed variables, in the listed order.
    IndicatorDataset select_variables(std::span<const std::string> ids) const;

    /// Copy with the listed directions replaced; unknown ids are rejected.
    IndicatorDataset with_directions(const std::map<std::string, Direction>& overrides) const;

    bool operator==(const IndicatorDataset&) const = default;

private:
    std::vector<std::string> entities_;
    std::vector<VariableSpec> variables_;
    std::vector<Cell> values_;
};

enum class MissingPolicy { listwise_deletion, mean_imputation };

struct ImputedCell {
    std::string entity;
    std::string variable;
    double value = 0.0;

    bool operator==(const ImputedCell&) const = default;
};

/// Record of what a missing-data policy changed.
struct Provenance {
    std::vector<std::string> removed_entities;
    std::vector<ImputedCell> imputed_cells;
};

/// Gap-free dataset produced by apply_missing_policy.
class CompleteDataset {
public:
    CompleteDataset(std::vector<std::string> entities,
                    std::vector<VariableSpec> variables,
                    std::vector<double> values,
                    Provenance provenance);

    std::size_t entity_count() const { return entities_.size(); }
    std::size_t variable_count() const { return variables_.size(); }
    const std::vector<std::string>& entities() const { return entities_; }
    const std::vector<VariableSpec>& variables() const { return variables_; }
    const std::vector<double>& values() const { return values_; }
    const Provenance& provenance() const { return provenance_; }

    double value(std::size_t entity, std::size_t variable) const;
    std::span<const double> row(std::size_t entity) const;
    std::vector<double> column(std::size_t variable) const;

private:
    std::vector<std::string> entities_;
    std::vector<VariableSpec> variables_;
    std::vector<double> values_;
    Provenance provenance_;
};

/// Resolves missing cells. Listwise deletion drops any entity with a gap;
/// mean imputation substitutes the column mean of the available values.
/// Fails if fewer than 2 entities survive or a column has no values at all.
CompleteDataset apply_missing_policy(const IndicatorDataset& d, MissingPolicy policy);

enum class DecimalSeparator { dot, comma, auto_detect };

struct CsvOptions {
    DecimalSeparator decimal = DecimalSeparator::auto_detect;
};

/// Parses a CSV with a header row (entity-code column name, then variable
/// ids). ":" and empty cells are missing. The field delimiter is ';' when
/// the header contains one, ',' otherwise.
IndicatorDataset parse_csv(std::string_view text, const CsvOptions& options = {});

/// Serializes with '.' decimals and ":" for missing cells; round-trips
/// through parse_csv bit-exactly.
std::string to_csv(const IndicatorDataset& d);

/// JSON exchange form: {"entities", "variables", "values"} with values as a
/// row-major array of number|null.
std::string to_json(const IndicatorDataset& d);
IndicatorDataset dataset_from_json(std::string_view text);

}  // namespace synthrank
