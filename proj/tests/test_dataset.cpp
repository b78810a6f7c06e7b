#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include <doctest.h>

#include "pipeline_fixtures.hpp"
#include "synthrank/dataset.hpp"
#include "synthrank/error.hpp"
#include "synthrank/fixture.hpp"

using namespace synthrank;

namespace {

IndicatorDataset random_dataset(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> n_dist(2, 15);
    std::uniform_int_distribution<std::size_t> m_dist(1, 8);
    std::uniform_real_distribution<double> value(-1e4, 1e4);
    std::bernoulli_distribution missing(0.15);
    const std::size_t n = n_dist(rng);
    const std::size_t m = m_dist(rng);
    std::vector<std::string> entities;
    for (std::size_t i = 0; i < n; ++i) entities.push_back("E" + std::to_string(i));
    std::vector<VariableSpec> variables;
    for (std::size_t j = 0; j < m; ++j) {
        variables.push_back({"v" + std::to_string(j), "", "", Direction::stimulant});
    }
    std::vector<Cell> values;
    for (std::size_t i = 0; i < n * m; ++i) {
        values.push_back(missing(rng) ? Cell{} : Cell{value(rng)});
    }
    return IndicatorDataset(std::move(entities), std::move(variables), std::move(values));
}

}  // namespace

TEST_SUITE("dataset") {

TEST_CASE("fixture shape and spot values") {
    const auto d = load_fixture();
    CHECK(d.entity_count() == 28);
    CHECK(d.variable_count() == 12);
    CHECK(d.value("DK", "x1") == 781.0);
    CHECK(d.value("MT", "x8") == 0.0);
    CHECK(d.value("BE", "x3") == 26.1);
    CHECK(d.value("RO", "x1") == 247.0);
    CHECK(d.variables()[0].direction == Direction::destimulant);
    CHECK(d.variables()[2].direction == Direction::destimulant);
    CHECK(d.variables()[3].direction == Direction::stimulant);
    CHECK(d.variables()[11].direction == Direction::stimulant);
}

TEST_CASE("fixture missing cells, enumerated") {
    const auto d = load_fixture();
    const std::set<std::pair<std::string, std::string>> expected = {
        {"CZ", "x12"}, {"DE", "x5"}, {"DE", "x9"}, {"EE", "x12"},
        {"IE", "x1"},  {"IE", "x4"}, {"IE", "x8"}, {"IE", "x12"},
        {"GR", "x5"},  {"LV", "x5"}, {"LU", "x12"}, {"MT", "x12"},
    };
    std::set<std::pair<std::string, std::string>> found;
    for (std::size_t i = 0; i < d.entity_count(); ++i) {
        for (std::size_t j = 0; j < d.variable_count(); ++j) {
            if (!d.value(i, j)) found.insert({d.entities()[i], d.variables()[j].id});
        }
    }
    CHECK(found == expected);
    CHECK(d.missing_count() == 12);
}

TEST_CASE("fixture is deterministic") {
    CHECK(load_fixture() == load_fixture());
}

TEST_CASE("parse_csv reads rows, missing markers, decimal commas") {
    const auto d = parse_csv("country,x1,x2,x3\nBE,412,97,26.1\nCZ,316,74,:\n");
    CHECK(d.entity_count() == 2);
    CHECK(d.value("BE", "x1") == 412.0);
    CHECK(d.value("BE", "x3") == 26.1);
    CHECK_FALSE(d.value("CZ", "x3").has_value());

    // ';'-separated input with decimal commas
    const auto dc = parse_csv("country;x1;x2\nBE;26,1;97\nCZ;7,8;74\n");
    CHECK(dc.value("BE", "x1") == 26.1);
    CHECK(dc.value("CZ", "x1") == 7.8);

    // forced dot mode rejects a decimal comma
    CHECK_THROWS_AS(parse_csv("country;x1\nBE;26,1\nCZ;7\n", {DecimalSeparator::dot}),
                    ParseError);
}

TEST_CASE("parse_csv structural errors") {
    CHECK_THROWS_WITH_AS(parse_csv("country,x1\nBE,412,999\nCZ,3\n"),
                         doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_csv("country,x1\nBE,412\nBE,3\n"),
                         doctest::Contains("duplicate entity"), ParseError);
    CHECK_THROWS_WITH_AS(parse_csv("country,x1\nBE,412\nCZ,abc\n"),
                         doctest::Contains("x1"), ParseError);
    CHECK_THROWS_AS(parse_csv("country,x1\nBE,412\n"), ParseError);  // single entity
    CHECK_THROWS_AS(parse_csv(""), ParseError);
}

TEST_CASE("csv round-trip is exact") {
    const auto d = load_fixture();
    const auto reparsed = parse_csv(to_csv(d));
    CHECK(reparsed.entities() == d.entities());
    CHECK(reparsed.values() == d.values());

    std::mt19937_64 rng(42);
    for (int i = 0; i < 50; ++i) {
        const auto r = random_dataset(rng);
        const auto rt = parse_csv(to_csv(r));
        CAPTURE(i);
        CHECK(rt.entities() == r.entities());
        CHECK(rt.values() == r.values());
    }
}

TEST_CASE("json round-trip keeps directions and missing cells") {
    const auto d = load_fixture();
    const auto reparsed = dataset_from_json(to_json(d));
    CHECK(reparsed == d);
}

TEST_CASE("listwise deletion drops exactly the gapped entities, in order") {
    const auto complete = apply_missing_policy(load_fixture(),
                                               MissingPolicy::listwise_deletion);
    CHECK(complete.entity_count() == 20);
    const std::vector<std::string> removed = {"CZ", "DE", "EE", "IE", "GR", "LV", "LU", "MT"};
    CHECK(complete.provenance().removed_entities == removed);

    // surviving entities form a subsequence of the original order
    const auto original = load_fixture().entities();
    auto it = original.begin();
    for (const auto& e : complete.entities()) {
        it = std::find(it, original.end(), e);
        CHECK(it != original.end());
        ++it;
    }
}

TEST_CASE("mean imputation fills every gap with the column mean") {
    const auto complete = apply_missing_policy(load_fixture(), MissingPolicy::mean_imputation);
    CHECK(complete.entity_count() == 28);
    CHECK(complete.provenance().imputed_cells.size() == 12);
    for (const auto& expected : pipeline_fixtures::imputed_means) {
        for (const auto& cell : complete.provenance().imputed_cells) {
            if (cell.variable == expected.variable) {
                CHECK(cell.value == doctest::Approx(expected.mean).epsilon(1e-14));
            }
        }
    }
    // non-missing cells are untouched, bit for bit
    const auto d = load_fixture();
    for (std::size_t i = 0; i < d.entity_count(); ++i) {
        for (std::size_t j = 0; j < d.variable_count(); ++j) {
            if (auto c = d.value(i, j)) {
                CHECK(complete.value(i, j) == *c);
            }
        }
    }
}

TEST_CASE("mean imputation preserves the column mean over original cells") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const auto d = random_dataset(rng);
        // skip datasets with an all-missing column
        bool degenerate = false;
        for (std::size_t j = 0; j < d.variable_count() && !degenerate; ++j) {
            bool any = false;
            for (std::size_t i = 0; i < d.entity_count(); ++i) {
                if (d.value(i, j)) any = true;
            }
            degenerate = !any;
        }
        if (degenerate) continue;
        const auto complete = apply_missing_policy(d, MissingPolicy::mean_imputation);
        for (std::size_t j = 0; j < d.variable_count(); ++j) {
            double before = 0.0;
            std::size_t count = 0;
            for (std::size_t i = 0; i < d.entity_count(); ++i) {
                if (auto c = d.value(i, j)) {
                    before += *c;
                    ++count;
                }
            }
            before /= static_cast<double>(count);
            double after = 0.0;
            for (std::size_t i = 0; i < d.entity_count(); ++i) {
                if (d.value(i, j)) after += complete.value(i, j);
            }
            after /= static_cast<double>(count);
            CHECK(after == before);
        }
    }
}

TEST_CASE("missing-policy error paths") {
    // a column with no values at all
    IndicatorDataset all_missing({"A", "B"}, {{"v", "", "", Direction::stimulant}},
                                 {Cell{}, Cell{}});
    CHECK_THROWS_WITH_AS(apply_missing_policy(all_missing, MissingPolicy::mean_imputation),
                         doctest::Contains("v"), ComputeError);

    // every entity has a gap: listwise deletion leaves nothing
    IndicatorDataset gaps({"A", "B"},
                          {{"u", "", "", Direction::stimulant},
                           {"v", "", "", Direction::stimulant}},
                          {Cell{1.0}, Cell{}, Cell{}, Cell{2.0}});
    CHECK_THROWS_AS(apply_missing_policy(gaps, MissingPolicy::listwise_deletion),
                    ComputeError);
}

TEST_CASE("select_variables projects and validates") {
    const auto d = load_fixture();
    const std::vector<std::string> pick = {"x10", "x12"};
    const auto sub = d.select_variables(pick);
    CHECK(sub.entity_count() == 28);
    CHECK(sub.variable_count() == 2);
    CHECK(sub.value("NL", "x10") == 25.8);

    std::vector<std::string> all;
    for (const auto& v : d.variables()) all.push_back(v.id);
    CHECK(d.select_variables(all) == d);

    const std::vector<std::string> bogus = {"x99"};
    CHECK_THROWS_WITH_AS(d.select_variables(bogus), doctest::Contains("x99"), ConfigError);
}

TEST_CASE("direction overrides validate ids") {
    const auto d = load_fixture();
    const auto flipped = d.with_directions({{"x1", Direction::stimulant}});
    CHECK(flipped.variables()[0].direction == Direction::stimulant);
    CHECK_THROWS_AS(d.with_directions({{"nope", Direction::stimulant}}), ConfigError);
}

}  // TEST_SUITE
