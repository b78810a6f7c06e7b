#pragma once

#include <span>
#include <string>
#include <vector>

#include "synthrank/dataset.hpp"

namespace synthrank {

/// Unit-interval matrix after min-max rescaling of every column.
struct NormalizedMatrix {
    std::vector<std::string> entities;
    std::vector<VariableSpec> variables;
    std::vector<double> values;  // row-major, each cell in [0, 1]
    std::vector<std::string> degenerate_columns;  // constant raw columns, pinned to 0.5

    std::size_t entity_count() const { return entities.size(); }
    std::size_t variable_count() const { return variables.size(); }
    double value(std::size_t entity, std::size_t variable) const {
        return values[entity * variables.size() + variable];
    }
    std::span<const double> row(std::size_t entity) const {
        return {values.data() + entity * variables.size(), variables.size()};
    }
};

struct NormalizedColumn {
    std::vector<double> values;
    bool degenerate = false;
};

/// Min-max rescaling of one column relative to its observed range.
/// Stimulant: (x - min) / (max - min); de-stimulant: (max - x) / (max - min).
/// A constant column maps to 0.5 everywhere and is flagged degenerate.
NormalizedColumn normalize_column(std::span<const double> values, Direction direction);

/// Column-wise normalization of a gap-free dataset per each variable's
/// direction. The ranges are taken over the entities present in `d`, so the
/// missing-data policy applied upstream changes them.
NormalizedMatrix normalize_matrix(const CompleteDataset& d);

}  // namespace synthrank
