#include "synthrank/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "synthrank/error.hpp"
#include "synthrank/fixture.hpp"
#include "synthrank/format.hpp"
#include "synthrank/normalize.hpp"
#include "synthrank/statfn.hpp"

namespace synthrank {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

// Statistics printed by the source study for the embedded dataset.
constexpr double kPublishedR2 = 0.776817095;
constexpr double kPublishedF = 4.35078738;
constexpr double kPublishedPF = 0.00044596;
constexpr double kPublishedResidualStdError = 0.18548170;
constexpr double kPublishedDurbinWatson = 1.642365;
constexpr double kPublishedSerialCorrelation = 0.176710;
constexpr double kPublishedSimpleSlope = 0.553;
constexpr double kPublishedSimpleIntercept = -0.065;
constexpr double kPublishedSimpleStdError = 0.66349;
constexpr int kPublishedFDf1 = 12;
constexpr int kPublishedFDf2 = 15;

// Within 10% of the published value counts as agreement.
constexpr double kAgreeThreshold = 0.10;

const char* const kPublishedGroupI[] = {
    "FI", "DK", "SE", "DE", "AT", "EE", "LV", "UK", "LU", "NL", "LT", "BE",
    "FR", "CZ", "SK", "SI", "IE",
};
const char* const kPublishedGroupIII[] = {"PL", "HU", "MT", "CY", "IT", "ES", "PT", "GR"};
const char* const kPublishedGroupIV[] = {"RO", "BG", "HR"};

std::string bold(const std::string& s, bool color) {
    return color ? "\x1b[1m" + s + "\x1b[0m" : s;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open input file \"" + path + "\"");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool ends_with(const std::string& s, std::string_view suffix) {
    return s.size() >= suffix.size()
        && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

json fit_to_json(const RegressResult& r, double alpha) {
    const auto& fit = r.fit;
    json coefficients = json::array();
    if (fit.has_intercept) {
        coefficients.push_back({{"term", "intercept"},
                                {"b", fit.intercept},
                                {"se_b", fit.se_intercept},
                                {"t", fit.t_intercept},
                                {"p", fit.p_intercept}});
    }
    for (std::size_t j = 0; j < fit.predictors.size(); ++j) {
        coefficients.push_back({{"term", fit.predictors[j]},
                                {"b_star", fit.standardized[j]},
                                {"se_b_star", fit.std_errors_standardized[j]},
                                {"b", fit.coefficients[j]},
                                {"se_b", fit.std_errors[j]},
                                {"t", fit.t_stats[j]},
                                {"p", fit.p_values[j]},
                                {"significant", fit.p_values[j] < alpha}});
    }
    json plot = json::array();
    for (const auto& [q, e] : r.normality_plot) plot.push_back({q, e});
    return {
        {"model",
         {{"dependent", fit.dependent},
          {"predictors", fit.predictors},
          {"n_used", fit.n_used},
          {"intercept_included", fit.has_intercept}}},
        {"coefficients", coefficients},
        {"fit",
         {{"r", fit.r},
          {"r2", fit.r2},
          {"adjusted_r2", fit.adjusted_r2},
          {"f", fit.f},
          {"df1", fit.df_model()},
          {"df2", fit.df_resid()},
          {"p_f", fit.p_f},
          {"residual_std_error", fit.std_error_estimate}}},
        {"diagnostics",
         {{"durbin_watson", r.durbin_watson},
          {"serial_correlation", r.serial_correlation}}},
        {"normality_plot", plot},
        {"significant_predictors", significant_predictors(fit, alpha)},
        {"alpha", alpha},
        {"fitted", fit.fitted},
        {"residuals", fit.residuals},
    };
}

json rank_to_json(const RankResult& r) {
    json entries = json::array();
    std::map<std::string, const SyntheticScore*> by_entity;
    for (const auto& s : r.scores) by_entity[s.entity] = &s;
    for (const auto& e : r.ranking) {
        const auto* s = by_entity.at(e.entity);
        entries.push_back({{"rank", e.rank},
                           {"entity", e.entity},
                           {"w", e.w},
                           {"median", s->median},
                           {"std", s->std_dev},
                           {"group", std::string(to_string(r.classification.assignments.at(e.entity)))}});
    }
    json unit_bound = json::array();
    for (const auto& s : r.scores) {
        if (s.at_unit_bound) unit_bound.push_back(s.entity);
    }
    return {
        {"summary",
         {{"mean_w", r.classification.mean_w}, {"std_w", r.classification.std_w}}},
        {"entries", entries},
        {"degenerate_columns", r.degenerate_columns},
        {"unit_bound_entities", unit_bound},
    };
}

json config_to_json(const RunConfig& c) {
    json directions = json::object();
    for (const auto& [id, dir] : c.direction_overrides) {
        directions[id] = std::string(to_string(dir));
    }
    return {
        {"input", c.input},
        {"missing_policy",
         c.missing == MissingPolicy::mean_imputation ? "mean_imputation" : "listwise_deletion"},
        {"std_convention",
         c.std_convention == StdConvention::population ? "population" : "sample"},
        {"direction_overrides", directions},
    };
}

std::string render_rank_table(const RankResult& r, bool color) {
    std::map<std::string, const SyntheticScore*> by_entity;
    for (const auto& s : r.scores) by_entity[s.entity] = &s;
    std::string out = bold("Ranking (synthetic measure w = median x (1 - std))", color) + "\n";
    char line[128];
    std::snprintf(line, sizeof(line), "%4s  %-8s %9s %9s %9s  %s\n",
                  "rank", "entity", "w", "median", "std", "group");
    out += line;
    for (const auto& e : r.ranking) {
        const auto* s = by_entity.at(e.entity);
        std::snprintf(line, sizeof(line), "%4zu  %-8s %9.6f %9.6f %9.6f  %s\n",
                      e.rank, e.entity.c_str(), e.w, s->median, s->std_dev,
                      std::string(to_string(r.classification.assignments.at(e.entity))).c_str());
        out += line;
    }
    std::snprintf(line, sizeof(line), "mean w = %.6f   std w = %.6f\n",
                  r.classification.mean_w, r.classification.std_w);
    out += line;
    if (!r.degenerate_columns.empty()) {
        out += "constant columns pinned to 0.5:";
        for (const auto& id : r.degenerate_columns) out += " " + id;
        out += "\n";
    }
    for (const auto& s : r.scores) {
        if (s.at_unit_bound) {
            out += "note: " + s.entity + " reaches w = 1 (nominally w < 1)\n";
        }
    }
    return out;
}

std::string render_rank_csv(const RankResult& r) {
    std::map<std::string, const SyntheticScore*> by_entity;
    for (const auto& s : r.scores) by_entity[s.entity] = &s;
    std::string out = "rank,entity,w,median,std,group\n";
    for (const auto& e : r.ranking) {
        const auto* s = by_entity.at(e.entity);
        out += std::to_string(e.rank) + "," + e.entity + "," + format_shortest(e.w) + ","
            + format_shortest(s->median) + "," + format_shortest(s->std_dev) + ","
            + std::string(to_string(r.classification.assignments.at(e.entity))) + "\n";
    }
    out += "\nstatistic,value\n";
    out += "mean_w," + format_shortest(r.classification.mean_w) + "\n";
    out += "std_w," + format_shortest(r.classification.std_w) + "\n";
    return out;
}

std::string csv_cell(double v) {
    if (std::isnan(v)) return "";
    return format_shortest(v);
}

std::string render_regress_table(const RegressResult& r, double alpha, bool color) {
    const auto& fit = r.fit;
    std::string out;
    std::string model = fit.dependent + " ~ ";
    for (std::size_t j = 0; j < fit.predictors.size(); ++j) {
        if (j) model += " + ";
        model += fit.predictors[j];
    }
    out += bold("Regression: " + model, color) + "\n";
    out += "n = " + std::to_string(fit.n_used) + ", df = " + std::to_string(fit.df_resid())
        + "\n";
    char line[192];
    std::snprintf(line, sizeof(line), "%-10s %10s %10s %12s %12s %10s %10s\n",
                  "term", "b*", "se(b*)", "b", "se(b)",
                  ("t(" + std::to_string(fit.df_resid()) + ")").c_str(), "p");
    out += line;
    auto cell = [](double v, int width, int prec) {
        char buf[48];
        if (std::isnan(v)) {
            std::snprintf(buf, sizeof(buf), "%*s", width, "");
        } else {
            std::snprintf(buf, sizeof(buf), "%*.*f", width, prec, v);
        }
        return std::string(buf);
    };
    if (fit.has_intercept) {
        out += "intercept  " + std::string(21, ' ') + cell(fit.intercept, 12, 5)
            + cell(fit.se_intercept, 13, 5) + cell(fit.t_intercept, 11, 5)
            + cell(fit.p_intercept, 11, 6) + "\n";
    }
    for (std::size_t j = 0; j < fit.predictors.size(); ++j) {
        const bool significant = fit.p_values[j] < alpha;
        std::snprintf(line, sizeof(line), "%-10s", fit.predictors[j].c_str());
        std::string row = line;
        row += cell(fit.standardized[j], 11, 5) + cell(fit.std_errors_standardized[j], 11, 5)
            + cell(fit.coefficients[j], 13, 5) + cell(fit.std_errors[j], 13, 5)
            + cell(fit.t_stats[j], 11, 5) + cell(fit.p_values[j], 11, 6);
        if (significant) row += " *";
        out += (significant ? bold(row, color) : row) + "\n";
    }
    out += "* p < " + format_shortest(alpha) + "\n\n";

    std::snprintf(line, sizeof(line), "R = %.9f   R2 = %.9f   adjusted R2 = %.9f\n",
                  fit.r, fit.r2, fit.adjusted_r2);
    out += line;
    out += "F(" + std::to_string(fit.df_model()) + ", " + std::to_string(fit.df_resid())
        + ") = " + format_fixed(fit.f, 8) + "   p = " + format_fixed(fit.p_f, 8) + "\n";
    out += "residual std error = " + format_fixed(fit.std_error_estimate, 8) + "\n";
    out += "Durbin-Watson = " + format_fixed(r.durbin_watson, 6)
        + "   serial correlation = " + format_fixed(r.serial_correlation, 6) + "\n\n";
    out += "Normality plot (Blom positions):\n";
    out += "  quantile    residual\n";
    for (const auto& [q, e] : r.normality_plot) {
        std::snprintf(line, sizeof(line), "%10.5f  %10.5f\n", q, e);
        out += line;
    }
    return out;
}

std::string render_regress_csv(const RegressResult& r, double alpha) {
    const auto& fit = r.fit;
    std::string out = "term,b_star,se_b_star,b,se_b,t,p,significant\n";
    if (fit.has_intercept) {
        out += "intercept,,," + csv_cell(fit.intercept) + "," + csv_cell(fit.se_intercept)
            + "," + csv_cell(fit.t_intercept) + "," + csv_cell(fit.p_intercept) + ",\n";
    }
    for (std::size_t j = 0; j < fit.predictors.size(); ++j) {
        out += fit.predictors[j] + "," + csv_cell(fit.standardized[j]) + ","
            + csv_cell(fit.std_errors_standardized[j]) + "," + csv_cell(fit.coefficients[j])
            + "," + csv_cell(fit.std_errors[j]) + "," + csv_cell(fit.t_stats[j]) + ","
            + csv_cell(fit.p_values[j]) + ","
            + (fit.p_values[j] < alpha ? "true" : "false") + "\n";
    }
    out += "\nstatistic,value\n";
    out += "r," + csv_cell(fit.r) + "\n";
    out += "r2," + csv_cell(fit.r2) + "\n";
    out += "adjusted_r2," + csv_cell(fit.adjusted_r2) + "\n";
    out += "f," + (std::isinf(fit.f) ? "inf" : csv_cell(fit.f)) + "\n";
    out += "df1," + std::to_string(fit.df_model()) + "\n";
    out += "df2," + std::to_string(fit.df_resid()) + "\n";
    out += "p_f," + csv_cell(fit.p_f) + "\n";
    out += "residual_std_error," + csv_cell(fit.std_error_estimate) + "\n";
    out += "durbin_watson," + csv_cell(r.durbin_watson) + "\n";
    out += "serial_correlation," + csv_cell(r.serial_correlation) + "\n";
    out += "\nquantile,residual\n";
    for (const auto& [q, e] : r.normality_plot) {
        out += format_shortest(q) + "," + format_shortest(e) + "\n";
    }
    return out;
}

}  // namespace

void RunConfig::validate() const {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw ConfigError("alpha must lie strictly in (0, 1), got "
                          + format_shortest(alpha));
    }
    if (std::find(predictors.begin(), predictors.end(), dependent) != predictors.end()) {
        throw ConfigError("dependent variable \"" + dependent
                          + "\" is also listed as a predictor");
    }
}

IndicatorDataset load_input(const RunConfig& config) {
    config.validate();
    IndicatorDataset d = [&] {
        if (config.input == kFixtureName) return load_fixture();
        const std::string text = read_file(config.input);
        if (ends_with(config.input, ".json")) return dataset_from_json(text);
        return parse_csv(text, {config.decimal});
    }();
    if (config.direction_overrides.empty()) return d;
    return d.with_directions(config.direction_overrides);
}

RankResult run_rank(const RunConfig& config) {
    const auto dataset = load_input(config);
    auto complete = apply_missing_policy(dataset, config.missing);
    auto normalized = normalize_matrix(complete);
    auto scores = score_all(normalized);
    auto classification = classify(scores, config.std_convention);
    auto ranking = rank(scores);
    return {std::move(complete), std::move(scores), std::move(classification),
            std::move(ranking), std::move(normalized.degenerate_columns)};
}

RegressResult run_regress(const RunConfig& config) {
    const auto dataset = load_input(config);

    std::vector<std::string> predictors = config.predictors;
    if (predictors.empty()) {
        for (const auto& v : dataset.variables()) {
            if (v.id != config.dependent) predictors.push_back(v.id);
        }
    }
    // The missing policy sees only the model's variables, so listwise
    // deletion keeps entities whose gaps are elsewhere.
    std::vector<std::string> selected = predictors;
    selected.push_back(config.dependent);
    auto complete = apply_missing_policy(dataset.select_variables(selected), config.missing);

    std::vector<std::vector<double>> columns;
    columns.reserve(predictors.size());
    for (std::size_t j = 0; j < predictors.size(); ++j) columns.push_back(complete.column(j));
    const std::vector<double> y = complete.column(predictors.size());

    RegressResult out{std::move(complete),
                      fit_ols(columns, y, true, predictors, config.dependent),
                      0.0, 0.0, {}};
    out.durbin_watson = durbin_watson(out.fit.residuals);
    out.serial_correlation = serial_correlation(out.fit.residuals);
    out.normality_plot = normal_probability_plot(out.fit.residuals);
    return out;
}

std::string cmd_fixture() {
    return to_csv(load_fixture());
}

std::string cmd_rank(const RunConfig& config) {
    const auto result = run_rank(config);
    switch (config.format) {
        case OutputFormat::table:
            return render_rank_table(result, config.color);
        case OutputFormat::csv:
            return render_rank_csv(result);
        case OutputFormat::json: {
            json doc = rank_to_json(result);
            doc["schema_version"] = kSchemaVersion;
            doc["command"] = "rank";
            doc["config"] = config_to_json(config);
            return doc.dump(2) + "\n";
        }
    }
    throw ConfigError("unknown output format");
}

std::string cmd_regress(const RunConfig& config) {
    const auto result = run_regress(config);
    switch (config.format) {
        case OutputFormat::table:
            return render_regress_table(result, config.alpha, config.color);
        case OutputFormat::csv:
            return render_regress_csv(result, config.alpha);
        case OutputFormat::json: {
            json doc = fit_to_json(result, config.alpha);
            doc["schema_version"] = kSchemaVersion;
            doc["command"] = "regress";
            doc["config"] = config_to_json(config);
            return doc.dump(2) + "\n";
        }
    }
    throw ConfigError("unknown output format");
}

const PublishedStudy& published_study() {
    static const PublishedStudy study = [] {
        PublishedStudy s{kPublishedR2,
                         kPublishedF,
                         kPublishedPF,
                         kPublishedResidualStdError,
                         kPublishedDurbinWatson,
                         kPublishedSerialCorrelation,
                         kPublishedSimpleSlope,
                         kPublishedSimpleIntercept,
                         kPublishedSimpleStdError,
                         {}};
        for (const char* c : kPublishedGroupI) s.groups.emplace(c, Group::I);
        for (const char* c : kPublishedGroupIII) s.groups.emplace(c, Group::III);
        for (const char* c : kPublishedGroupIV) s.groups.emplace(c, Group::IV);
        return s;
    }();
    return study;
}

GroupComparison compare_groups(const GroupClassification& computed) {
    const auto& study = published_study();
    GroupComparison out;
    for (const auto& [entity, group] : study.groups) {
        if (group == Group::IV) out.published_group_iv.push_back(entity);
    }
    for (const auto& [entity, group] : computed.assignments) {
        if (group == Group::IV) out.computed_group_iv.push_back(entity);
        auto it = study.groups.find(entity);
        if (it == study.groups.end()) continue;
        ++out.total;
        const Group published = it->second;
        // The study reports no group II; its group I absorbs computed II.
        const bool match = published == Group::I
            ? (group == Group::I || group == Group::II)
            : published == group;
        if (match) {
            ++out.matches;
        } else {
            out.mismatches.emplace_back(entity, published, group);
        }
    }
    return out;
}

std::vector<ComparisonRow> compare_regression(const RegressResult& main_fit,
                                              const RegressResult& simple_fit) {
    const auto& study = published_study();
    auto row = [](std::string item, double published, double computed) {
        const double rel = std::fabs(computed - published) / std::fabs(published);
        return ComparisonRow{std::move(item), published, computed, rel,
                             rel <= kAgreeThreshold};
    };
    std::vector<ComparisonRow> rows;
    rows.push_back(row("r2", study.r2, main_fit.fit.r2));
    rows.push_back(row("f", study.f, main_fit.fit.f));
    rows.push_back(row("residual_std_error", study.residual_std_error,
                       main_fit.fit.std_error_estimate));
    rows.push_back(row("durbin_watson", study.durbin_watson, main_fit.durbin_watson));
    rows.push_back(row("serial_correlation", study.serial_correlation,
                       main_fit.serial_correlation));
    rows.push_back(row("simple_slope", study.simple_slope, simple_fit.fit.coefficients[0]));
    rows.push_back(row("simple_intercept", study.simple_intercept, simple_fit.fit.intercept));
    rows.push_back(row("simple_residual_std_error", study.simple_residual_std_error,
                       simple_fit.fit.std_error_estimate));
    // The study's own F statistic re-evaluated: upper tail of F(12,15).
    rows.push_back(row("p_of_published_f", study.p_f,
                       1.0 - statfn::f_cdf(kPublishedF, kPublishedFDf1, kPublishedFDf2)));
    return rows;
}

namespace {

json comparison_to_json(const std::vector<ComparisonRow>& rows,
                        const GroupComparison& groups) {
    json jrows = json::array();
    for (const auto& r : rows) {
        jrows.push_back({{"item", r.item},
                         {"published", r.published},
                         {"computed", r.computed},
                         {"relative_difference", r.relative_difference},
                         {"agree", r.agree}});
    }
    json mismatches = json::array();
    for (const auto& [entity, published, computed] : groups.mismatches) {
        mismatches.push_back({{"entity", entity},
                              {"published", std::string(to_string(published))},
                              {"computed", std::string(to_string(computed))}});
    }
    return {
        {"rows", jrows},
        {"grouping",
         {{"published_group_iv", groups.published_group_iv},
          {"computed_group_iv", groups.computed_group_iv},
          {"matches", groups.matches},
          {"total", groups.total},
          {"mismatches", mismatches}}},
        {"notes", json::array({
             "published degrees of freedom t(15)/F(12,15) imply 12 predictor terms; "
             "this model regresses x12 on the 11 predictors x1..x11 (df 16)",
             "the study reports N=28 despite 12 missing source cells; its "
             "missing-data handling and directions are not stated",
         })},
    };
}

std::string render_comparison_table(const std::vector<ComparisonRow>& rows,
                                    const GroupComparison& groups, bool color) {
    std::string out = bold("Published-value comparison", color) + "\n";
    char line[160];
    std::snprintf(line, sizeof(line), "%-26s %14s %14s %10s  %s\n", "item", "published",
                  "computed", "rel diff", "verdict");
    out += line;
    for (const auto& r : rows) {
        std::snprintf(line, sizeof(line), "%-26s %14s %14.9g %9.2f%%  %s\n",
                      r.item.c_str(), format_shortest(r.published).c_str(), r.computed,
                      100.0 * r.relative_difference, r.agree ? "agree" : "differ");
        out += line;
    }
    out += "\nGrouping: " + std::to_string(groups.matches) + "/" + std::to_string(groups.total)
        + " entities match the study (study group I counted as computed I or II)\n";
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (const auto& e : v) {
            if (!s.empty()) s += ", ";
            s += e;
        }
        return s;
    };
    out += "published group IV: " + join(groups.published_group_iv) + "\n";
    out += "computed group IV:  " + join(groups.computed_group_iv) + "\n";
    if (!groups.mismatches.empty()) {
        out += "mismatches (entity: published -> computed):\n";
        for (const auto& [entity, published, computed] : groups.mismatches) {
            out += "  " + entity + ": " + std::string(to_string(published)) + " -> "
                + std::string(to_string(computed)) + "\n";
        }
    }
    out += "notes:\n";
    out += "  - published degrees of freedom t(15)/F(12,15) imply 12 predictor terms; "
           "this model regresses x12 on the 11 predictors x1..x11 (df 16)\n";
    out += "  - the study reports N=28 despite 12 missing source cells; its "
           "missing-data handling and directions are not stated\n";
    return out;
}

std::string render_comparison_csv(const std::vector<ComparisonRow>& rows,
                                  const GroupComparison& groups) {
    std::string out = "item,published,computed,relative_difference,agree\n";
    for (const auto& r : rows) {
        out += r.item + "," + format_shortest(r.published) + "," + format_shortest(r.computed)
            + "," + format_shortest(r.relative_difference) + ","
            + (r.agree ? "true" : "false") + "\n";
    }
    out += "\ngrouping,value\n";
    out += "matches," + std::to_string(groups.matches) + "\n";
    out += "total," + std::to_string(groups.total) + "\n";
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (const auto& e : v) {
            if (!s.empty()) s += " ";
            s += e;
        }
        return s;
    };
    out += "published_group_iv," + join(groups.published_group_iv) + "\n";
    out += "computed_group_iv," + join(groups.computed_group_iv) + "\n";
    return out;
}

}  // namespace

std::string cmd_report(const RunConfig& config) {
    const auto rank_result = run_rank(config);
    const auto regress_result = run_regress(config);

    const bool fixture_input = config.input == kFixtureName;
    std::optional<RegressResult> simple;
    std::vector<ComparisonRow> rows;
    GroupComparison groups;
    if (fixture_input) {
        RunConfig simple_config = config;
        simple_config.dependent = "x12";
        simple_config.predictors = {"x10"};
        simple = run_regress(simple_config);
        rows = compare_regression(regress_result, *simple);
        groups = compare_groups(rank_result.classification);
    }

    switch (config.format) {
        case OutputFormat::table: {
            std::string out = render_rank_table(rank_result, config.color) + "\n"
                + render_regress_table(regress_result, config.alpha, config.color);
            if (fixture_input) {
                const auto& data = simple->data;
                auto column_by_id = [&data](std::string_view id) {
                    for (std::size_t j = 0; j < data.variables().size(); ++j) {
                        if (data.variables()[j].id == id) return data.column(j);
                    }
                    throw ConfigError("unknown variable \"" + std::string(id) + "\"");
                };
                const auto equation = simple_regression_report(
                    column_by_id("x10"), column_by_id("x12"), "x12", "x10");
                out += "\nSimple regression: " + equation.equation + "\n\n";
                out += render_comparison_table(rows, groups, config.color);
            }
            return out;
        }
        case OutputFormat::csv: {
            std::string out = render_rank_csv(rank_result) + "\n"
                + render_regress_csv(regress_result, config.alpha);
            if (fixture_input) {
                out += "\n" + render_comparison_csv(rows, groups);
            }
            return out;
        }
        case OutputFormat::json: {
            json doc;
            doc["schema_version"] = kSchemaVersion;
            doc["command"] = "report";
            doc["config"] = config_to_json(config);
            doc["ranking"] = rank_to_json(rank_result);
            doc["regression"] = fit_to_json(regress_result, config.alpha);
            if (fixture_input) {
                doc["published_comparison"] = comparison_to_json(rows, groups);
                doc["simple_regression"] = {
                    {"dependent", simple->fit.dependent},
                    {"predictor", simple->fit.predictors[0]},
                    {"slope", simple->fit.coefficients[0]},
                    {"intercept", simple->fit.intercept},
                    {"residual_std_error", simple->fit.std_error_estimate},
                };
            }
            return doc.dump(2) + "\n";
        }
    }
    throw ConfigError("unknown output format");
}

}  // namespace synthrank
