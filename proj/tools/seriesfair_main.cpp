// seriesfair: exact win-probability analysis of best-of-N playoff series
// under a home/road split model, with morale extensions and a Monte Carlo
// cross-check.  Exit codes: 0 success, 1 data/domain error, 2 usage error,
// 3 self-check failure.

#include "CLI11.hpp"

#include "reference_checks.hpp"
#include "seriesfair/analysis.hpp"
#include "seriesfair/morale.hpp"
#include "seriesfair/records.hpp"
#include "seriesfair/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace seriesfair;

constexpr int kExitOk = 0;
constexpr int kExitDataError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSelfCheck = 3;

std::string fmt(double v, int digits) {
    if (v == 0.0) {
        v = 0.0; // avoid "-0.000000000"
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

std::optional<SeriesFormat> parse_format_arg(const std::string& text) {
    try {
        return SeriesFormat::parse(text);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return std::nullopt;
    }
}

bool valid_r(double r) {
    if (!std::isfinite(r) || r <= 0.0) {
        std::fprintf(stderr, "error: r must be finite and positive\n");
        return false;
    }
    return true;
}

const char* mode_name(MoraleMode mode) {
    switch (mode) {
    case MoraleMode::None: return "none";
    case MoraleMode::Fixed: return "fixed";
    case MoraleMode::Cumulative: return "cumulative";
    }
    return "?";
}

int run_derive(const std::string& format_text) {
    const auto format = parse_format_arg(format_text);
    if (!format) {
        return kExitUsage;
    }
    const auto scenarios = enumerate_victory_scenarios(*format, Side::Advantaged);
    std::printf("format: %s\n", format->str().c_str());
    std::printf("scenarios (advantaged team, %zu):\n", scenarios.size());
    for (const Scenario& s : scenarios) {
        std::printf("  %s  %s\n", s.games.c_str(), scenario_probability_factored(s).c_str());
    }
    std::printf("win probability: %s\n",
                series_win_polynomial(*format, Side::Advantaged).str().c_str());
    return kExitOk;
}

int run_compare(const std::string& longer_text, const std::string& shorter_text, double r,
                double threshold) {
    const auto longer = parse_format_arg(longer_text);
    const auto shorter = parse_format_arg(shorter_text);
    if (!longer || !shorter) {
        return kExitUsage;
    }
    if (!valid_r(r)) {
        return kExitUsage;
    }
    if (!std::isfinite(threshold)) {
        std::fprintf(stderr, "error: threshold must be finite\n");
        return kExitUsage;
    }
    try {
        const ComparisonReport report = fairness_verdict(*longer, *shorter, r, threshold);
        std::printf("comparison: %s (longer) vs %s (shorter)\n", longer->str().c_str(),
                    shorter->str().c_str());
        std::fputs(to_text(report).c_str(), stdout);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitDataError;
    }
    return kExitOk;
}

int run_multiplier(const std::string& path, const std::string& team_filter) {
    try {
        const std::vector<TeamRecord> records = load_records(path);
        if (!team_filter.empty()) {
            bool found = false;
            for (const TeamRecord& rec : records) {
                if (rec.team == team_filter) {
                    std::printf("%s  %s\n", display_name(rec).c_str(),
                                fmt(road_multiplier(rec), 9).c_str());
                    found = true;
                }
            }
            if (!found) {
                std::fprintf(stderr, "error: no record for team '%s' in %s\n",
                             team_filter.c_str(), path.c_str());
                return kExitDataError;
            }
            return kExitOk;
        }
        for (const TeamRecord& rec : records) {
            std::printf("%s  %s\n", display_name(rec).c_str(),
                        fmt(road_multiplier(rec), 9).c_str());
        }
        std::printf("average  %s\n", fmt(average_road_multiplier(records), 9).c_str());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitDataError;
    }
    return kExitOk;
}

int run_sweep(const std::vector<std::string>& format_texts, double lo, double hi, double step,
              double r, MoraleMode mode, double a, bool clamp) {
    std::vector<SeriesFormat> formats;
    for (const std::string& text : format_texts) {
        const auto format = parse_format_arg(text);
        if (!format) {
            return kExitUsage;
        }
        formats.push_back(*format);
    }
    if (!valid_r(r)) {
        return kExitUsage;
    }
    if (!(lo >= 0.0 && lo < hi && hi <= 1.0) || !(step > 0.0) || (hi - lo) / step > 1e6) {
        std::fprintf(stderr,
                     "error: grid must satisfy 0 <= from < to <= 1, step > 0, and at most 1e6 points\n");
        return kExitUsage;
    }
    const bool use_dp = mode != MoraleMode::None;
    BivariatePolynomial poly;
    if (!use_dp) {
        poly = series_win_polynomial(formats[0], Side::Advantaged);
        if (formats.size() == 2) {
            poly -= series_win_polynomial(formats[1], Side::Advantaged);
        }
    }
    const int rows = static_cast<int>(std::floor((hi - lo) / step + 1e-6));
    try {
        std::printf("p,value\n");
        for (int i = 0; i <= rows; ++i) {
            const double p = std::min(lo + i * step, hi);
            double value = 0.0;
            if (use_dp) {
                MoraleModel model{p, r, a, mode, !clamp};
                value = series_win_probability_dp(formats[0], model);
                if (formats.size() == 2) {
                    value -= series_win_probability_dp(formats[1], model);
                }
            } else {
                value = poly.evaluate(p, r);
            }
            std::printf("%s,%s\n", fmt(p, 9).c_str(), fmt(value, 9).c_str());
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitDataError;
    }
    return kExitOk;
}

int run_simulate(const std::string& format_text, double p, double r, double a, MoraleMode mode,
                 bool clamp, std::uint64_t trials, std::uint64_t seed) {
    const auto format = parse_format_arg(format_text);
    if (!format) {
        return kExitUsage;
    }
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
        std::fprintf(stderr, "error: p must lie in [0,1]\n");
        return kExitUsage;
    }
    if (!valid_r(r)) {
        return kExitUsage;
    }
    if (!std::isfinite(a)) {
        std::fprintf(stderr, "error: a must be finite\n");
        return kExitUsage;
    }
    if (trials == 0) {
        std::fprintf(stderr, "error: trials must be at least 1\n");
        return kExitUsage;
    }
    const MoraleModel model{p, r, a, mode, !clamp};
    try {
        const SeriesWinDp dp = series_win_probability_dp_detail(*format, model);
        const SimulationResult sim = simulate_series(*format, model, trials, seed);
        const double exact = dp.advantaged;
        const double se = std::sqrt(exact * (1.0 - exact) / static_cast<double>(trials));
        const double deviation = std::fabs(sim.frequency - exact);
        const double bound = 6.0 * se;
        std::printf("format: %s\n", format->str().c_str());
        std::printf("p: %s\n", fmt(p, 9).c_str());
        std::printf("r: %s\n", fmt(r, 9).c_str());
        std::printf("a: %s\n", fmt(a, 9).c_str());
        std::printf("mode: %s\n", mode_name(mode));
        std::printf("trials: %llu\n", static_cast<unsigned long long>(trials));
        std::printf("seed: %llu\n", static_cast<unsigned long long>(seed));
        if (dp.clamped) {
            std::printf("note: some reachable game probabilities were clamped to [0,1]\n");
        }
        std::printf("frequency: %s\n", fmt(sim.frequency, 9).c_str());
        std::printf("exact (dp): %s\n", fmt(exact, 9).c_str());
        std::printf("deviation: %s\n", fmt(deviation, 9).c_str());
        std::printf("standard error: %s\n", fmt(se, 9).c_str());
        std::printf("bound (6 se): %s\n", fmt(bound, 9).c_str());
        if (deviation > bound) {
            std::printf("self-check: FAILED (deviation exceeds 6 standard errors)\n");
            return kExitSelfCheck;
        }
        std::printf("self-check: OK\n");
    } catch (const MoraleRangeError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitDataError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitDataError;
    }
    return kExitOk;
}

int run_reproduce(const std::string& data_dir) {
    const auto results = seriesfair::checks::run_reference_checks(data_dir);
    int passed = 0;
    for (const auto& check : results) {
        std::printf("[%s] %s\n", check.passed ? " ok " : "FAIL", check.name.c_str());
        if (!check.passed && !check.detail.empty()) {
            std::printf("       -> %s\n", check.detail.c_str());
        }
        passed += check.passed ? 1 : 0;
    }
    std::printf("%d/%zu checks passed\n", passed, results.size());
    return passed == static_cast<int>(results.size()) ? kExitOk : kExitSelfCheck;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Best-of-N playoff series win probabilities under a home/road split model"};
    app.require_subcommand(1);

    const std::map<std::string, MoraleMode> mode_names{
        {"none", MoraleMode::None},
        {"fixed", MoraleMode::Fixed},
        {"cumulative", MoraleMode::Cumulative},
    };

    int rc = kExitOk;

    std::string derive_format;
    auto* derive = app.add_subcommand(
        "derive", "List victory scenarios and the exact win-probability polynomial");
    derive->add_option("format", derive_format, "Series format, e.g. 2-3-2 or HHAAAHH")->required();
    derive->callback([&] { rc = run_derive(derive_format); });

    std::string cmp_longer, cmp_shorter;
    double cmp_r = kDefaultRoadMultiplier;
    double cmp_threshold = kDefaultSignificanceThreshold;
    auto* compare = app.add_subcommand(
        "compare", "Extreme-value comparison of two formats (longer minus shorter)");
    compare->add_option("longer", cmp_longer, "Longer series format")->required();
    compare->add_option("shorter", cmp_shorter, "Shorter series format")->required();
    compare->add_option("--r", cmp_r, "Road multiplier");
    compare->add_option("--threshold", cmp_threshold, "Significance threshold");
    compare->callback([&] { rc = run_compare(cmp_longer, cmp_shorter, cmp_r, cmp_threshold); });

    std::string mult_path, mult_team;
    auto* multiplier =
        app.add_subcommand("multiplier", "Road multipliers (and their mean) from a records CSV");
    multiplier->add_option("csv", mult_path, "Records CSV file")->required();
    multiplier->add_option("--team", mult_team, "Only rows for this team");
    multiplier->callback([&] { rc = run_multiplier(mult_path, mult_team); });

    std::vector<std::string> sweep_formats;
    double sweep_from = 0.0, sweep_to = 1.0, sweep_step = 0.01;
    double sweep_r = kDefaultRoadMultiplier, sweep_a = 0.0;
    MoraleMode sweep_mode = MoraleMode::None;
    bool sweep_clamp = false;
    auto* sweep = app.add_subcommand(
        "sweep", "CSV sweep over p: win probability (one format) or difference (two formats)");
    sweep->add_option("formats", sweep_formats, "One or two series formats")
        ->required()
        ->expected(1, 2);
    sweep->add_option("--from", sweep_from, "Grid start");
    sweep->add_option("--to", sweep_to, "Grid end");
    sweep->add_option("--step", sweep_step, "Grid step");
    sweep->add_option("--r", sweep_r, "Road multiplier");
    sweep->add_option("--mode", sweep_mode, "Morale mode")
        ->transform(CLI::CheckedTransformer(mode_names, CLI::ignore_case));
    sweep->add_option("--a", sweep_a, "Morale adjustment per game");
    sweep->add_flag("--clamp", sweep_clamp, "Clamp out-of-range game probabilities instead of failing");
    sweep->callback([&] {
        rc = run_sweep(sweep_formats, sweep_from, sweep_to, sweep_step, sweep_r, sweep_mode,
                       sweep_a, sweep_clamp);
    });

    std::string sim_format;
    double sim_p = 0.5, sim_r = kDefaultRoadMultiplier, sim_a = 0.0;
    MoraleMode sim_mode = MoraleMode::None;
    bool sim_clamp = false;
    std::uint64_t sim_trials = 100000, sim_seed = 1;
    auto* simulate = app.add_subcommand(
        "simulate", "Monte Carlo estimate cross-checked against the exact dynamic program");
    simulate->add_option("format", sim_format, "Series format")->required();
    simulate->add_option("--p", sim_p, "Home-game win probability")->required();
    simulate->add_option("--r", sim_r, "Road multiplier");
    simulate->add_option("--a", sim_a, "Morale adjustment per game");
    simulate->add_option("--mode", sim_mode, "Morale mode")
        ->transform(CLI::CheckedTransformer(mode_names, CLI::ignore_case));
    simulate->add_flag("--clamp", sim_clamp, "Clamp out-of-range game probabilities instead of failing");
    simulate->add_option("--trials", sim_trials, "Number of simulated series");
    simulate->add_option("--seed", sim_seed, "Master seed");
    simulate->callback([&] {
        rc = run_simulate(sim_format, sim_p, sim_r, sim_a, sim_mode, sim_clamp, sim_trials,
                          sim_seed);
    });

    std::string repro_data_dir = "data";
    auto* reproduce = app.add_subcommand(
        "reproduce-paper", "Run every built-in reference check and print a pass/fail table");
    reproduce->add_option("--data-dir", repro_data_dir, "Directory holding the fixture CSVs");
    reproduce->callback([&] { rc = run_reproduce(repro_data_dir); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitDataError;
    }
    return rc;
}
