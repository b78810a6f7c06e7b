#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "synthrank/dataset.hpp"
#include "synthrank/regress.hpp"
#include "synthrank/synthesis.hpp"

namespace synthrank {

enum class OutputFormat { table, csv, json };

/// Everything a command run needs. Validated by validate().
struct RunConfig {
    std::string input = "fixture";  // path to a CSV/JSON file, or "fixture"
    std::map<std::string, Direction> direction_overrides;
    MissingPolicy missing = MissingPolicy::mean_imputation;
    std::string dependent = "x12";
    std::vector<std::string> predictors;  // empty: every other variable
    double alpha = 0.05;
    OutputFormat format = OutputFormat::table;
    DecimalSeparator decimal = DecimalSeparator::auto_detect;
    StdConvention std_convention = StdConvention::population;
    bool color = false;  // ANSI styling in table output

    /// Throws ConfigError for alpha outside (0,1) or a dependent that is
    /// also listed as a predictor.
    void validate() const;
};

/// Loads the configured input (embedded dataset or file) and applies the
/// direction overrides.
IndicatorDataset load_input(const RunConfig& config);

/// Intermediate results of the ranking pipeline, exposed for tests.
struct RankResult {
    CompleteDataset data;
    std::vector<SyntheticScore> scores;
    GroupClassification classification;
    std::vector<RankEntry> ranking;
    std::vector<std::string> degenerate_columns;
};

RankResult run_rank(const RunConfig& config);

struct RegressResult {
    CompleteDataset data;
    RegressionFit fit;
    double durbin_watson = 0.0;
    double serial_correlation = 0.0;
    std::vector<std::pair<double, double>> normality_plot;
};

RegressResult run_regress(const RunConfig& config);

/// CSV dump of the embedded dataset; bit-stable, ":" for missing cells.
std::string cmd_fixture();

/// Ranking + classification report in the configured format.
std::string cmd_rank(const RunConfig& config);

/// Regression report (coefficients, fit statistics, diagnostics, plot data).
std::string cmd_regress(const RunConfig& config);

/// Combined document: ranking, regression, and the published-value
/// comparison for the embedded dataset.
std::string cmd_report(const RunConfig& config);

/// One row of the published-value comparison.
struct ComparisonRow {
    std::string item;
    double published = 0.0;
    double computed = 0.0;
    double relative_difference = 0.0;
    bool agree = false;  // within 10% of the published value
};

/// Values reported by the source study for the embedded dataset.
struct PublishedStudy {
    double r2;
    double f;
    double p_f;
    double residual_std_error;
    double durbin_watson;
    double serial_correlation;
    double simple_slope;
    double simple_intercept;
    double simple_residual_std_error;
    std::map<std::string, Group> groups;  // study group per entity; no group II
};

const PublishedStudy& published_study();

struct GroupComparison {
    std::vector<std::string> published_group_iv;
    std::vector<std::string> computed_group_iv;
    std::size_t matches = 0;
    std::size_t total = 0;
    /// entity -> (published, computed) for entities that do not match.
    std::vector<std::tuple<std::string, Group, Group>> mismatches;
};

/// Compares a computed classification with the study grouping; the study's
/// group I is matched against computed I or II since the study reports no
/// group II.
GroupComparison compare_groups(const GroupClassification& computed);

std::vector<ComparisonRow> compare_regression(const RegressResult& main_fit,
                                              const RegressResult& simple_fit);

}  // namespace synthrank
