#include "synthrank/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "synthrank/error.hpp"
#include "synthrank/format.hpp"

namespace synthrank {

std::string_view to_string(Direction d) {
    return d == Direction::stimulant ? "stimulant" : "destimulant";
}

Direction direction_from_string(std::string_view s) {
    if (s == "stimulant") return Direction::stimulant;
    if (s == "destimulant" || s == "de-stimulant") return Direction::destimulant;
    throw ConfigError("unknown direction \"" + std::string(s)
                      + "\" (expected stimulant or destimulant)");
}

IndicatorDataset::IndicatorDataset(std::vector<std::string> entities,
                                   std::vector<VariableSpec> variables,
                                   std::vector<Cell> values)
    : entities_(std::move(entities)),
      variables_(std::move(variables)),
      values_(std::move(values)) {
    if (entities_.size() < 2) {
        throw ParseError("dataset needs at least 2 entities, got "
                         + std::to_string(entities_.size()));
    }
    if (variables_.empty()) {
        throw ParseError("dataset needs at least 1 variable");
    }
    if (values_.size() != entities_.size() * variables_.size()) {
        throw ParseError("value grid size does not match entities x variables");
    }
    std::unordered_set<std::string> seen;
    for (const auto& e : entities_) {
        if (!seen.insert(e).second) {
            throw ParseError("duplicate entity code \"" + e + "\"");
        }
    }
    seen.clear();
    for (const auto& v : variables_) {
        if (!seen.insert(v.id).second) {
            throw ParseError("duplicate variable id \"" + v.id + "\"");
        }
    }
}

Cell IndicatorDataset::value(std::size_t entity, std::size_t variable) const {
    return values_.at(entity * variables_.size() + variable);
}

Cell IndicatorDataset::value(std::string_view entity_code, std::string_view variable_id) const {
    return value(entity_index(entity_code), variable_index(variable_id));
}

std::size_t IndicatorDataset::variable_index(std::string_view id) const {
    for (std::size_t j = 0; j < variables_.size(); ++j) {
        if (variables_[j].id == id) return j;
    }
    throw ConfigError("unknown variable \"" + std::string(id) + "\"");
}

std::size_t IndicatorDataset::entity_index(std::string_view code) const {
    for (std::size_t i = 0; i < entities_.size(); ++i) {
        if (entities_[i] == code) return i;
    }
    throw ConfigError("unknown entity \"" + std::string(code) + "\"");
}

std::size_t IndicatorDataset::missing_count() const {
    return static_cast<std::size_t>(
        std::count_if(values_.begin(), values_.end(),
                      [](const Cell& c) { return !c.has_value(); }));
}

IndicatorDataset IndicatorDataset::select_variables(std::span<const std::string> ids) const {
    std::vector<std::size_t> idx;
    idx.reserve(ids.size());
    for (const auto& id : ids) idx.push_back(variable_index(id));

    std::vector<VariableSpec> vars;
    vars.reserve(idx.size());
    for (auto j : idx) vars.push_back(variables_[j]);

    std::vector<Cell> vals;
    vals.reserve(entities_.size() * idx.size());
    for (std::size_t i = 0; i < entities_.size(); ++i) {
        for (auto j : idx) vals.push_back(value(i, j));
    }
    return IndicatorDataset(entities_, std::move(vars), std::move(vals));
}

IndicatorDataset IndicatorDataset::with_directions(
    const std::map<std::string, Direction>& overrides) const {
    auto vars = variables_;
    for (const auto& [id, dir] : overrides) {
        vars[variable_index(id)].direction = dir;
    }
    return IndicatorDataset(entities_, std::move(vars), values_);
}

CompleteDataset::CompleteDataset(std::vector<std::string> entities,
                                 std::vector<VariableSpec> variables,
                                 std::vector<double> values,
                                 Provenance provenance)
    : entities_(std::move(entities)),
      variables_(std::move(variables)),
      values_(std::move(values)),
      provenance_(std::move(provenance)) {
    if (values_.size() != entities_.size() * variables_.size()) {
        throw ParseError("value grid size does not match entities x variables");
    }
}

double CompleteDataset::value(std::size_t entity, std::size_t variable) const {
    return values_.at(entity * variables_.size() + variable);
}

std::span<const double> CompleteDataset::row(std::size_t entity) const {
    return {values_.data() + entity * variables_.size(), variables_.size()};
}

std::vector<double> CompleteDataset::column(std::size_t variable) const {
    std::vector<double> out;
    out.reserve(entities_.size());
    for (std::size_t i = 0; i < entities_.size(); ++i) out.push_back(value(i, variable));
    return out;
}

CompleteDataset apply_missing_policy(const IndicatorDataset& d, MissingPolicy policy) {
    const std::size_t n = d.entity_count();
    const std::size_t m = d.variable_count();

    std::vector<double> column_mean(m, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        double sum = 0.0;
        std::size_t available = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (auto c = d.value(i, j)) {
                sum += *c;
                ++available;
            }
        }
        if (available == 0) {
            throw ComputeError("column \"" + d.variables()[j].id
                               + "\" has no values; cannot resolve missing cells");
        }
        column_mean[j] = sum / static_cast<double>(available);
    }

    Provenance prov;
    std::vector<std::string> entities;
    std::vector<double> values;

    if (policy == MissingPolicy::listwise_deletion) {
        for (std::size_t i = 0; i < n; ++i) {
            bool complete = true;
            for (std::size_t j = 0; j < m; ++j) {
                if (!d.value(i, j)) {
                    complete = false;
                    break;
                }
            }
            if (complete) {
                entities.push_back(d.entities()[i]);
                for (std::size_t j = 0; j < m; ++j) values.push_back(*d.value(i, j));
            } else {
                prov.removed_entities.push_back(d.entities()[i]);
            }
        }
        if (entities.size() < 2) {
            throw ComputeError("listwise deletion leaves " + std::to_string(entities.size())
                               + " entity(ies); at least 2 are required");
        }
    } else {
        entities = d.entities();
        values.reserve(n * m);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                if (auto c = d.value(i, j)) {
                    values.push_back(*c);
                } else {
                    values.push_back(column_mean[j]);
                    prov.imputed_cells.push_back(
                        {d.entities()[i], d.variables()[j].id, column_mean[j]});
                }
            }
        }
    }

    return CompleteDataset(std::move(entities), d.variables(), std::move(values),
                           std::move(prov));
}

namespace {

std::vector<std::string> split_line(std::string_view line, char delim) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(delim, start);
        if (pos == std::string_view::npos) {
            fields.emplace_back(line.substr(start));
            break;
        }
        fields.emplace_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

std::string trim(std::string s) {
    auto issp = [](unsigned char c) { return std::isspace(c); };
    while (!s.empty() && issp(s.front())) s.erase(s.begin());
    while (!s.empty() && issp(s.back())) s.pop_back();
    return s;
}

bool is_missing_token(const std::string& s) {
    return s.empty() || s == ":";
}

double parse_number(const std::string& raw, DecimalSeparator decimal,
                    std::size_t line_no, const std::string& column) {
    std::string s = raw;
    const auto commas = std::count(s.begin(), s.end(), ',');
    if (decimal == DecimalSeparator::comma
        || (decimal == DecimalSeparator::auto_detect && commas == 1
            && s.find('.') == std::string::npos)) {
        std::replace(s.begin(), s.end(), ',', '.');
    }
    double out = 0.0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc() || ptr != end || !std::isfinite(out)) {
        throw ParseError("line " + std::to_string(line_no) + ", column \"" + column
                         + "\": cannot parse \"" + raw + "\" as a number");
    }
    return out;
}

}  // namespace

IndicatorDataset parse_csv(std::string_view text, const CsvOptions& options) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t pos = text.find('\n', start);
        if (pos == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        std::string_view line = text.substr(start, pos - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = pos + 1;
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.size() < 2) {
        throw ParseError("CSV needs a header row and at least one data row");
    }

    const char delim = lines[0].find(';') != std::string_view::npos ? ';' : ',';
    auto header = split_line(lines[0], delim);
    if (header.size() < 2) {
        throw ParseError("header must name the entity column and at least one variable");
    }

    std::vector<VariableSpec> variables;
    for (std::size_t j = 1; j < header.size(); ++j) {
        variables.push_back({trim(header[j]), "", "", Direction::stimulant});
    }

    std::vector<std::string> entities;
    std::vector<Cell> values;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        if (lines[li].empty()) continue;
        auto fields = split_line(lines[li], delim);
        if (fields.size() != header.size()) {
            throw ParseError("line " + std::to_string(li + 1) + " has "
                             + std::to_string(fields.size()) + " fields, expected "
                             + std::to_string(header.size()));
        }
        entities.push_back(trim(fields[0]));
        for (std::size_t j = 1; j < fields.size(); ++j) {
            std::string cell = trim(fields[j]);
            if (is_missing_token(cell)) {
                values.push_back(std::nullopt);
            } else {
                values.push_back(parse_number(cell, options.decimal, li + 1,
                                              variables[j - 1].id));
            }
        }
    }
    return IndicatorDataset(std::move(entities), std::move(variables), std::move(values));
}

std::string to_csv(const IndicatorDataset& d) {
    std::string out = "entity";
    for (const auto& v : d.variables()) {
        out += ',';
        out += v.id;
    }
    out += '\n';
    for (std::size_t i = 0; i < d.entity_count(); ++i) {
        out += d.entities()[i];
        for (std::size_t j = 0; j < d.variable_count(); ++j) {
            out += ',';
            if (auto c = d.value(i, j)) {
                out += format_shortest(*c);
            } else {
                out += ':';
            }
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const IndicatorDataset& d) {
    nlohmann::json doc;
    doc["entities"] = d.entities();
    doc["variables"] = nlohmann::json::array();
    for (const auto& v : d.variables()) {
        doc["variables"].push_back({{"id", v.id},
                                    {"label", v.label},
                                    {"unit", v.unit},
                                    {"direction", std::string(to_string(v.direction))}});
    }
    auto values = nlohmann::json::array();
    for (const auto& c : d.values()) {
        if (c) {
            values.push_back(*c);
        } else {
            values.push_back(nullptr);
        }
    }
    doc["values"] = std::move(values);
    return doc.dump(2) + "\n";
}

IndicatorDataset dataset_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid dataset JSON: ") + e.what());
    }
    try {
        std::vector<std::string> entities = doc.at("entities").get<std::vector<std::string>>();
        std::vector<VariableSpec> variables;
        for (const auto& v : doc.at("variables")) {
            variables.push_back({v.at("id").get<std::string>(),
                                 v.value("label", std::string{}),
                                 v.value("unit", std::string{}),
                                 direction_from_string(v.value("direction", "stimulant"))});
        }
        std::vector<Cell> values;
        for (const auto& c : doc.at("values")) {
            if (c.is_null()) {
                values.push_back(std::nullopt);
            } else {
                values.push_back(c.get<double>());
            }
        }
        return IndicatorDataset(std::move(entities), std::move(variables), std::move(values));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("dataset JSON is missing fields: ") + e.what());
    }
}

}  // namespace synthrank
