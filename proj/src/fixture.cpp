#include "synthrank/fixture.hpp"

#include <cmath>
#include <limits>

namespace synthrank {

namespace {

constexpr double NA = std::numeric_limits<double>::quiet_NaN();

struct FixtureRow {
    const char* code;
    double x[12];
};

// EU-28 circular-economy indicators, 2019. ":" cells in the source are NA.
constexpr FixtureRow kRows[] = {
    {"BE", {412, 97, 26.1, 53.5, 78, 81.5, 33.8, 80, 95, 18.3, 289.5, 2.8}},
    {"BG", {419, 418, 13.3, 29.4, 27, 64.1, 96.5, 43, 90, 3.1, 88.1, 0.5}},
    {"CZ", {316, 74, 7.8, 29.7, 60, 74.3, 37.9, 13, 92, 6.9, 3.3, NA}},
    {"DK", {781, 35, 7.2, 45.6, 61, 73.9, 43, 138, 90, 8.4, 116.3, 2.3}},
    {"DE", {632, 55, 12, 66.7, NA, 69.3, 33.9, 114, NA, 11.4, 1621.2, 28.6}},
    {"EE", {359, 657, 35.1, 28.3, 10, 59, 33.3, 13, 7, 11.4, 4.1, NA}},
    {"IE", {NA, 35, 8, NA, 41, 67.5, 46.1, NA, 96, 1.9, 40.2, NA}},
    {"GR", {488, 78, 11.5, 15.8, NA, 60.3, 32.7, 12, 88, 2, 222.0, 0.6}},
    {"ES", {456, 62, 17.2, 30, 46, 68.4, 35.6, 53, 79, 7.5, 2319.9, 11.0}},
    {"FR", {516, 46, 13.4, 40.7, 54, 65.5, 32.2, 93, 71, 18.7, 643.5, 21.3}},
    {"HR", {393, 75, 8.2, 18, 52, 60.1, 58.3, 7, 76, 4.3, 70.7, 0.6}},
    {"IT", {486, 69, 22.5, 44.3, 68, 66.8, 32.1, 86, 98, 16.6, 683.9, 17.8}},
    {"CY", {638, 38, 5.4, 17.9, 31, 59.8, 27, 30, 57, 2.4, 0.2, 0.1}},
    {"LV", {404, 97, 9.1, 28.7, NA, 53.9, 23.1, 24, 98, 5.4, 29.2, 0.2}},
    {"LT", {448, 102, 7.8, 33.1, 68, 59.8, 45.9, 46, 97, 4.1, 35.2, 0.4}},
    {"LU", {607, 32, 11.4, 47.4, 64, 67.9, 42.5, 111, 100, 9.6, 23.5, NA}},
    {"HU", {377, 98, 9.2, 32.2, 43, 50.1, 50.7, 23, 99, 5.8, 41.3, 0.9}},
    {"MT", {606, 63, 9.3, 6.7, 43, 37.1, 13.1, 0, 100, 7, 0.1, NA}},
    {"NL", {523, 64, 25.6, 51.8, 72, 71.7, 39.3, 143, 100, 25.8, 1049.9, 5.2}},
    {"AT", {560, 52, 10, 56.9, 66, 67.1, 40.7, 175, 88, 10.9, 224.8, 3.5}},
    {"PL", {286, 183, 11.8, 32.5, 56, 57.6, 33.1, 17, 91, 11.6, 236.0, 4.7}},
    {"PT", {460, 67, 7.7, 29.8, 52, 57.1, 42.7, 72, 97, 2.1, 653.7, 1.4}},
    {"RO", {247, 140, 4.7, 13.2, 30, 55.9, 22.5, 18, 85, 1.7, 27.1, 1.1}},
    {"SI", {449, 79, 11.4, 54.1, 80, 67, 47.7, 34, 98, 8.4, 110.3, 0.5}},
    {"SK", {329, 100, 11.8, 14.9, 44, 64.3, 40.3, 24, 54, 5, 9.0, 0.6}},
    {"FI", {500, 74, 8.2, 40.6, 37, 60.9, 43.2, 62, 87, 6.5, 17.4, 2.0}},
    {"SE", {451, 50, 9.2, 47.5, 49, 71.8, 51.6, 70, 61, 6.8, 674.3, 4.1}},
    {"UK", {483, 57, 21.3, 43.3, 58, 60.6, 36.6, 78, 96, 16.2, 83.1, 31.0}},
};

const VariableSpec kVariables[] = {
    {"x1", "Generation of municipal waste per capita", "kg/person",
     Direction::destimulant},
    {"x2", "Generation of waste excluding major mineral wastes per GDP unit",
     "kg/thousand euro", Direction::destimulant},
    {"x3", "Generation of waste excluding major mineral wastes per domestic material consumption",
     "%", Direction::destimulant},
    {"x4", "Recycling rate of municipal waste", "%", Direction::stimulant},
    {"x5", "Recycling rate of all waste excluding major mineral waste", "%",
     Direction::stimulant},
    {"x6", "Recycling rate of e-waste", "%", Direction::stimulant},
    {"x7", "Recycling of biowaste", "kg/person", Direction::stimulant},
    {"x8", "Recovery rate of construction and demolition waste", "%",
     Direction::stimulant},
    {"x9", "Circular material use rate", "%", Direction::stimulant},
    {"x10", "Trade in recyclable raw materials", "thousand tonnes",
     Direction::stimulant},
    {"x11", "Private investments, jobs and gross value added in circular economy sectors",
     "million euro", Direction::stimulant},
    {"x12", "Patents related to recycling and secondary raw materials", "count",
     Direction::stimulant},
};

}  // namespace

IndicatorDataset load_fixture() {
    std::vector<std::string> entities;
    std::vector<Cell> values;
    entities.reserve(std::size(kRows));
    values.reserve(std::size(kRows) * 12);
    for (const auto& row : kRows) {
        entities.emplace_back(row.code);
        for (double v : row.x) {
            if (std::isnan(v)) {
                values.emplace_back(std::nullopt);
            } else {
                values.emplace_back(v);
            }
        }
    }
    return IndicatorDataset(std::move(entities),
                            {std::begin(kVariables), std::end(kVariables)},
                            std::move(values));
}

}  // namespace synthrank
