#include "synthrank/synthesis.hpp"

#include <algorithm>
#include <cmath>

#include "synthrank/error.hpp"
#include "synthrank/parallel.hpp"

namespace synthrank {

double row_median(std::span<const double> values) {
    if (values.empty()) {
        throw ComputeError("row_median: empty row");
    }
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t m = sorted.size();
    if (m % 2 == 0) {
        return (sorted[m / 2 - 1] + sorted[m / 2]) / 2.0;
    }
    return sorted[m / 2];
}

double row_std(std::span<const double> values) {
    if (values.empty()) {
        throw ComputeError("row_std: empty row");
    }
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return std::sqrt(ss / static_cast<double>(values.size()));
}

double synthetic_measure(double median, double std_dev) {
    return median * (1.0 - std_dev);
}

std::vector<SyntheticScore> score_all(const NormalizedMatrix& nm) {
    if (nm.variable_count() == 0) {
        throw ComputeError("score_all: matrix has no variables");
    }
    const std::size_t n = nm.entity_count();
    std::vector<SyntheticScore> scores(n);
    const bool big = n * nm.variable_count() >= kParallelGrain;

#pragma omp parallel for schedule(static) if (big)
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = nm.row(i);
        const double me = row_median(row);
        const double sd = row_std(row);
        const double w = synthetic_measure(me, sd);
        scores[i] = {nm.entities[i], me, sd, w, w >= 1.0};
    }
    return scores;
}

std::string_view to_string(Group g) {
    switch (g) {
        case Group::I: return "I";
        case Group::II: return "II";
        case Group::III: return "III";
        case Group::IV: return "IV";
    }
    return "?";
}

GroupClassification classify(std::span<const SyntheticScore> scores,
                             StdConvention convention) {
    if (scores.size() < 2) {
        throw ComputeError("classify: needs at least 2 scores, got "
                           + std::to_string(scores.size()));
    }
    double mean = 0.0;
    double lo = scores[0].w;
    double hi = scores[0].w;
    for (const auto& s : scores) {
        mean += s.w;
        lo = std::min(lo, s.w);
        hi = std::max(hi, s.w);
    }
    mean /= static_cast<double>(scores.size());
    if (lo == hi) mean = lo;  // identical scores: the mean is that value, exactly
    double ss = 0.0;
    for (const auto& s : scores) ss += (s.w - mean) * (s.w - mean);
    const double denom = convention == StdConvention::population
        ? static_cast<double>(scores.size())
        : static_cast<double>(scores.size() - 1);
    const double std_w = std::sqrt(ss / denom);

    GroupClassification out;
    out.mean_w = mean;
    out.std_w = std_w;
    for (const auto& s : scores) {
        Group g;
        if (s.w < mean - std_w) {
            g = Group::IV;
        } else if (s.w < mean) {
            g = Group::III;
        } else if (s.w == mean) {
            g = Group::II;  // boundary: the mean itself belongs to the better middle band
        } else if (s.w < mean + std_w) {
            g = Group::II;
        } else {
            g = Group::I;
        }
        out.assignments.emplace(s.entity, g);
    }
    return out;
}

std::vector<RankEntry> rank(std::span<const SyntheticScore> scores) {
    std::vector<RankEntry> out;
    out.reserve(scores.size());
    for (const auto& s : scores) out.push_back({0, s.entity, s.w});
    std::sort(out.begin(), out.end(), [](const RankEntry& a, const RankEntry& b) {
        if (a.w != b.w) return a.w > b.w;
        return a.entity < b.entity;
    });
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i > 0 && out[i].w == out[i - 1].w) {
            out[i].rank = out[i - 1].rank;
        } else {
            out[i].rank = i + 1;
        }
    }
    return out;
}

}  // namespace synthrank
