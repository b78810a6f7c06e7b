#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "synthrank/error.hpp"
#include "synthrank/fixture.hpp"
#include "synthrank/report.hpp"

namespace {

using namespace synthrank;

MissingPolicy parse_missing(const std::string& s) {
    if (s == "listwise") return MissingPolicy::listwise_deletion;
    if (s == "mean") return MissingPolicy::mean_imputation;
    throw ConfigError("--missing must be listwise or mean, got \"" + s + "\"");
}

OutputFormat parse_format(const std::string& s) {
    if (s == "table") return OutputFormat::table;
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    throw ConfigError("--format must be table, csv or json, got \"" + s + "\"");
}

DecimalSeparator parse_decimal(const std::string& s) {
    if (s == "dot") return DecimalSeparator::dot;
    if (s == "comma") return DecimalSeparator::comma;
    if (s == "auto") return DecimalSeparator::auto_detect;
    throw ConfigError("--decimal must be dot, comma or auto, got \"" + s + "\"");
}

StdConvention parse_std_convention(const std::string& s) {
    if (s == "population") return StdConvention::population;
    if (s == "sample") return StdConvention::sample;
    throw ConfigError("--group-std must be population or sample, got \"" + s + "\"");
}

std::map<std::string, Direction> parse_directions_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open directions file \"" + path + "\"");
    }
    std::map<std::string, Direction> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw ConfigError("directions file line " + std::to_string(line_no)
                              + ": expected \"id,direction\"");
        }
        const std::string id = line.substr(0, comma);
        const std::string dir = line.substr(comma + 1);
        if (line_no == 1 && (dir == "direction" || id == "id")) continue;  // header
        out[id] = direction_from_string(dir);
    }
    return out;
}

struct CliOptions {
    std::string input;
    bool use_fixture = false;
    std::string directions_path;
    std::string missing = "mean";
    std::string dependent = "x12";
    std::string predictors;
    double alpha = 0.05;
    std::string format = "table";
    std::string decimal = "auto";
    std::string group_std = "population";
};

RunConfig build_config(const CliOptions& opt) {
    RunConfig config;
    if (opt.use_fixture || opt.input.empty()) {
        config.input = kFixtureName;
    } else {
        config.input = opt.input;
    }
    if (!opt.directions_path.empty()) {
        config.direction_overrides = parse_directions_file(opt.directions_path);
    }
    config.missing = parse_missing(opt.missing);
    config.dependent = opt.dependent;
    if (!opt.predictors.empty()) {
        std::stringstream ss(opt.predictors);
        std::string id;
        while (std::getline(ss, id, ',')) {
            if (!id.empty()) config.predictors.push_back(id);
        }
    }
    config.alpha = opt.alpha;
    config.format = parse_format(opt.format);
    config.decimal = parse_decimal(opt.decimal);
    config.std_convention = parse_std_convention(opt.group_std);
    config.color = isatty(STDOUT_FILENO) && std::getenv("SYNTHRANK_NO_COLOR") == nullptr
        && config.format == OutputFormat::table;
    config.validate();
    return config;
}

void add_common_flags(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--input", opt.input, "Path to a CSV or JSON dataset");
    cmd->add_flag("--fixture", opt.use_fixture, "Use the bundled EU-28 dataset (default)");
    cmd->add_option("--directions", opt.directions_path,
                    "CSV file of id,direction overrides (stimulant|destimulant)");
    cmd->add_option("--missing", opt.missing, "Missing-data policy: listwise|mean");
    cmd->add_option("--alpha", opt.alpha, "Significance level in (0,1)");
    cmd->add_option("--format", opt.format, "Output format: table|csv|json");
    cmd->add_option("--decimal", opt.decimal, "Decimal separator of the input: dot|comma|auto");
    cmd->add_option("--group-std", opt.group_std,
                    "Std convention for group thresholds: population|sample");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Synthetic-measure ranking and OLS regression for indicator datasets"};
    app.require_subcommand(1);

    CliOptions opt;

    CLI::App* cmd_fixture_app = app.add_subcommand(
        "fixture", "Print the bundled EU-28 dataset as CSV");

    CLI::App* cmd_rank_app = app.add_subcommand(
        "rank", "Rank entities by the synthetic measure and classify into groups I-IV");
    add_common_flags(cmd_rank_app, opt);

    CLI::App* cmd_regress_app = app.add_subcommand(
        "regress", "OLS regression with inference and residual diagnostics");
    add_common_flags(cmd_regress_app, opt);
    cmd_regress_app->add_option("--dependent", opt.dependent, "Dependent variable id");
    cmd_regress_app->add_option("--predictors", opt.predictors,
                                "Comma-separated predictor ids (default: all others)");

    CLI::App* cmd_report_app = app.add_subcommand(
        "report", "Combined ranking + regression report with the published-value comparison");
    add_common_flags(cmd_report_app, opt);
    cmd_report_app->add_option("--dependent", opt.dependent, "Dependent variable id");
    cmd_report_app->add_option("--predictors", opt.predictors,
                               "Comma-separated predictor ids (default: all others)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(cmd_fixture_app)) {
            std::cout << synthrank::cmd_fixture();
        } else if (app.got_subcommand(cmd_rank_app)) {
            std::cout << synthrank::cmd_rank(build_config(opt));
        } else if (app.got_subcommand(cmd_regress_app)) {
            std::cout << synthrank::cmd_regress(build_config(opt));
        } else if (app.got_subcommand(cmd_report_app)) {
            std::cout << synthrank::cmd_report(build_config(opt));
        }
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
