#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "synthrank/normalize.hpp"

namespace synthrank {

/// Per-entity aggregate of its normalized indicator row.
struct SyntheticScore {
    std::string entity;
    double median = 0.0;   // row median of normalized values
    double std_dev = 0.0;  // population standard deviation of the row
    double w = 0.0;        // median * (1 - std_dev)
    /// The measure is nominally < 1; an all-ones row reaches exactly 1 and
    /// gets flagged instead of clamped.
    bool at_unit_bound = false;
};

/// Median of a row, by order statistics: even length averages the two
/// middle values, odd length takes the middle one.
double row_median(std::span<const double> values);

/// Population (divide-by-m) standard deviation of a row.
double row_std(std::span<const double> values);

/// The aggregate measure: median * (1 - std_dev).
double synthetic_measure(double median, double std_dev);

/// Scores every entity of a normalized matrix.
std::vector<SyntheticScore> score_all(const NormalizedMatrix& nm);

/// Performance bands relative to the score distribution; I is best.
enum class Group { I = 1, II = 2, III = 3, IV = 4 };

std::string_view to_string(Group g);

enum class StdConvention { population, sample };

struct GroupClassification {
    double mean_w = 0.0;
    double std_w = 0.0;
    std::map<std::string, Group> assignments;
};

/// Four-level split at mean +/- one standard deviation of the scores:
///   I:   w >= mean + std
///   II:  mean <= w < mean + std
///   III: mean - std <= w < mean
///   IV:  w < mean - std
/// A score exactly equal to the mean goes to group II, also when std == 0.
/// Needs at least 2 scores. The sample convention is available for
/// sensitivity checks; population is the default.
GroupClassification classify(std::span<const SyntheticScore> scores,
                             StdConvention convention = StdConvention::population);

struct RankEntry {
    std::size_t rank = 0;  // competition ranking: 1, 2, 2, 4
    std::string entity;
    double w = 0.0;
};

/// Descending by w; ties share a rank and are listed alphabetically.
std::vector<RankEntry> rank(std::span<const SyntheticScore> scores);

}  // namespace synthrank
