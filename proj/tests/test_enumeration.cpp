#include "doctest.h"

#include "seriesfair/scenario.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace seriesfair;

namespace {

BivariatePolynomial mono(long long c, int dp, int dr) {
    return BivariatePolynomial::monomial(Rational(c), dp, dr);
}

std::set<std::string> scenario_set(const SeriesFormat& format, Side side) {
    std::set<std::string> out;
    for (const Scenario& s : enumerate_victory_scenarios(format, side)) {
        out.insert(s.games);
    }
    return out;
}

std::vector<SeriesFormat> canonical_formats() {
    return {SeriesFormat::one_one_one(), SeriesFormat::one_two(), SeriesFormat::two_three(),
            SeriesFormat::two_two_one(), SeriesFormat::two_three_two()};
}

long long binomial(int n, int k) {
    long long out = 1;
    for (int i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
    }
    return out;
}

} // namespace

TEST_CASE("scenario counts match the closed form") {
    // For a best-of-(2k+1): sum over series lengths of C(k+j, j).
    auto expected = [](int k) {
        long long total = 0;
        for (int j = 0; j <= k; ++j) {
            total += binomial(k + j, j);
        }
        return total;
    };
    CHECK(expected(1) == 3);
    CHECK(expected(2) == 10);
    CHECK(expected(3) == 35);

    CHECK(enumerate_victory_scenarios(SeriesFormat::one_one_one(), Side::Advantaged).size() == 3);
    CHECK(enumerate_victory_scenarios(SeriesFormat::two_three(), Side::Advantaged).size() == 10);
    CHECK(enumerate_victory_scenarios(SeriesFormat::two_three_two(), Side::Advantaged).size() == 35);
    CHECK(enumerate_victory_scenarios(SeriesFormat::two_three_two(), Side::Opponent).size() == 35);
    CHECK(enumerate_victory_scenarios(SeriesFormat::parse("HHHHHAAAA"), Side::Advantaged).size() ==
          static_cast<std::size_t>(expected(4)));
}

TEST_CASE("three-game scenario lists") {
    const auto adv = enumerate_victory_scenarios(SeriesFormat::one_one_one(), Side::Advantaged);
    REQUIRE(adv.size() == 3);
    CHECK(adv[0].games == "Ww");
    CHECK(adv[1].games == "WlW");
    CHECK(adv[2].games == "LwW");
    for (const Scenario& s : adv) {
        CHECK(s.winner == Side::Advantaged);
    }

    CHECK(scenario_set(SeriesFormat::one_one_one(), Side::Opponent) ==
          std::set<std::string>{"Ll", "WlL", "LwL"});

    const auto alt = enumerate_victory_scenarios(SeriesFormat::one_two(), Side::Advantaged);
    REQUIRE(alt.size() == 3);
    CHECK(alt[0].games == "wW");
    CHECK(alt[1].games == "wLW");
    CHECK(alt[2].games == "lWW");
}

TEST_CASE("five-game scenario sets") {
    CHECK(scenario_set(SeriesFormat::two_three(), Side::Advantaged) ==
          std::set<std::string>{"wwW", "lwWW", "wlWW", "wwLW", "llWWW", "lwLWW", "lwWLW", "wlLWW",
                                "wlWLW", "wwLLW"});
    CHECK(scenario_set(SeriesFormat::two_two_one(), Side::Advantaged) ==
          std::set<std::string>{"WWw", "LWww", "WLww", "WWlw", "LLwwW", "LWlwW", "LWwlW", "WLlwW",
                                "WLwlW", "WWllW"});

    // Deterministic order: depth-first with the win branch explored first.
    const auto adv = enumerate_victory_scenarios(SeriesFormat::two_three(), Side::Advantaged);
    const std::vector<std::string> expected = {"wwW",   "wwLW",  "wwLLW", "wlWW",  "wlWLW",
                                               "wlLWW", "lwWW",  "lwWLW", "lwLWW", "llWWW"};
    REQUIRE(adv.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(adv[i].games == expected[i]);
    }
}

TEST_CASE("seven-game scenarios: short list and length-seven classes") {
    const auto adv = enumerate_victory_scenarios(SeriesFormat::two_three_two(), Side::Advantaged);
    REQUIRE(adv.size() == 35);

    std::set<std::string> shorter;
    std::map<std::array<int, 4>, int> classes; // (#W, #w, #L, #l) -> count
    for (const Scenario& s : adv) {
        if (s.games.size() < 7) {
            shorter.insert(s.games);
        } else {
            std::array<int, 4> key{0, 0, 0, 0};
            for (char c : s.games) {
                key[c == 'W' ? 0 : (c == 'w' ? 1 : (c == 'L' ? 2 : 3))] += 1;
            }
            classes[key] += 1;
        }
    }
    CHECK(shorter == std::set<std::string>{"WWww", "LWwww", "WLwww", "WWlww", "WWwlw", "LLwwwW",
                                           "LWlwwW", "LWwlwW", "LWwwlW", "WLlwwW", "WLwlwW",
                                           "WLwwlW", "WWllwW", "WWlwlW", "WWwllW"});
    REQUIRE(classes.size() == 4);
    CHECK(classes[{2, 2, 2, 1}] == 9);
    CHECK(classes[{3, 1, 1, 2}] == 9);
    CHECK(classes[{1, 3, 3, 0}] == 1);
    CHECK(classes[{4, 0, 0, 3}] == 1);
}

TEST_CASE("scenario structural invariants") {
    for (const SeriesFormat& format : canonical_formats()) {
        for (Side side : {Side::Advantaged, Side::Opponent}) {
            const auto scenarios = enumerate_victory_scenarios(format, side);
            std::set<std::string> unique;
            for (const Scenario& s : scenarios) {
                unique.insert(s.games);
                REQUIRE(!s.games.empty());
                REQUIRE(s.games.size() <= static_cast<std::size_t>(format.length()));
                int wa = 0;
                int wo = 0;
                for (std::size_t g = 0; g < s.games.size(); ++g) {
                    const char c = s.games[g];
                    // Case encodes the venue of that game.
                    const bool is_home = c == 'W' || c == 'L';
                    CHECK(is_home == (format.venue(static_cast<int>(g)) == Venue::Home));
                    const bool adv_won = c == 'W' || c == 'w';
                    (adv_won ? wa : wo) += 1;
                    if (g + 1 < s.games.size()) {
                        // Nobody clinches before the final game.
                        CHECK(wa < format.wins_needed());
                        CHECK(wo < format.wins_needed());
                    }
                }
                if (side == Side::Advantaged) {
                    CHECK(wa == format.wins_needed());
                    CHECK(wo < format.wins_needed());
                } else {
                    CHECK(wo == format.wins_needed());
                    CHECK(wa < format.wins_needed());
                }
            }
            // Duplicate-free, and prefix-free (a terminated series cannot
            // continue into another scenario).
            CHECK(unique.size() == scenarios.size());
            for (const std::string& a : unique) {
                for (const std::string& b : unique) {
                    if (a != b && a.size() < b.size()) {
                        CHECK(b.compare(0, a.size(), a) != 0);
                    }
                }
            }
        }
    }
}

TEST_CASE("scenario probability polynomials") {
    CHECK(scenario_probability({"Ww", Side::Advantaged}) == mono(1, 2, 1));
    CHECK(scenario_probability({"W", Side::Advantaged}) == mono(1, 1, 0));

    // Numeric cross-check against plain double products, which never touch
    // the rational pipeline.
    for (const std::string& games :
         {std::string("LLwwwW"), std::string("wwLLW"), std::string("WlW"), std::string("llWWW")}) {
        for (double p : {0.2, 0.55, 0.8}) {
            for (double r : {0.6, 0.894762228, 1.0}) {
                const double expect = oracles::letters_probability(games, p, r);
                const double got = scenario_probability({games, Side::Advantaged}).evaluate(p, r);
                CHECK(std::fabs(got - expect) <= 1e-14);
            }
        }
    }

    CHECK_THROWS_AS(scenario_probability({"", Side::Advantaged}), std::invalid_argument);
    CHECK_THROWS_AS(scenario_probability({"WX", Side::Advantaged}), std::invalid_argument);
}

TEST_CASE("factored display of scenario probabilities") {
    CHECK(scenario_probability_factored({"Ww", Side::Advantaged}) == "p(rp)");
    CHECK(scenario_probability_factored({"WlW", Side::Advantaged}) == "p^2(1-rp)");
    CHECK(scenario_probability_factored({"LwW", Side::Advantaged}) == "p(rp)(1-p)");
    CHECK(scenario_probability_factored({"wwLLW", Side::Advantaged}) == "p(rp)^2(1-p)^2");
    CHECK(scenario_probability_factored({"LLwwwW", Side::Advantaged}) == "p(rp)^3(1-p)^2");
    CHECK(scenario_probability_factored({"llWWW", Side::Advantaged}) == "p^3(1-rp)^2");
    CHECK(scenario_probability_factored({"W", Side::Advantaged}) == "p");
    CHECK(scenario_probability_factored({"Ll", Side::Opponent}) == "(1-p)(1-rp)");
    CHECK_THROWS_AS(scenario_probability_factored({"", Side::Advantaged}), std::invalid_argument);
}

TEST_CASE("series win polynomials match the reference displays") {
    const auto three = mono(2, 2, 1) + mono(1, 2, 0) + mono(-2, 3, 1);
    const auto five = mono(3, 3, 2) + mono(6, 3, 1) + mono(1, 3, 0) + mono(-9, 4, 2) +
                      mono(-6, 4, 1) + mono(6, 5, 2);
    const auto seven = mono(4, 4, 3) + mono(18, 4, 2) + mono(12, 4, 1) + mono(1, 4, 0) +
                       mono(-24, 5, 3) + mono(-48, 5, 2) + mono(-12, 5, 1) + mono(40, 6, 3) +
                       mono(30, 6, 2) + mono(-20, 7, 3);

    CHECK(series_win_polynomial(SeriesFormat::one_one_one(), Side::Advantaged) == three);
    CHECK(series_win_polynomial(SeriesFormat::one_two(), Side::Advantaged) == three);
    CHECK(series_win_polynomial(SeriesFormat::two_three(), Side::Advantaged) == five);
    CHECK(series_win_polynomial(SeriesFormat::two_two_one(), Side::Advantaged) == five);
    CHECK(series_win_polynomial(SeriesFormat::two_three_two(), Side::Advantaged) == seven);
}

TEST_CASE("advantaged and opponent polynomials sum to one") {
    auto formats = canonical_formats();
    formats.push_back(SeriesFormat::parse("H"));
    formats.push_back(SeriesFormat::parse("HHHHHAAAA"));
    const auto one = BivariatePolynomial::constant(Rational(1));
    for (const SeriesFormat& format : formats) {
        CHECK(series_win_polynomial(format, Side::Advantaged) +
                  series_win_polynomial(format, Side::Opponent) ==
              one);
    }
}

TEST_CASE("independence model is venue-permutation invariant") {
    std::mt19937 rng(99);
    for (const SeriesFormat& format : canonical_formats()) {
        const auto reference = series_win_polynomial(format, Side::Advantaged);
        std::vector<Venue> venues = format.venues();
        for (int i = 0; i < 20; ++i) {
            std::shuffle(venues.begin(), venues.end(), rng);
            CHECK(series_win_polynomial(SeriesFormat(venues), Side::Advantaged) == reference);
        }
    }
}

TEST_CASE("evaluated win probabilities are probabilities") {
    for (const SeriesFormat& format : canonical_formats()) {
        const auto poly = series_win_polynomial(format, Side::Advantaged);
        for (double p = 0.0; p <= 1.0 + 1e-12; p += 0.1) {
            for (double r : {0.2, 0.5, 0.894762228, 1.0}) {
                if (r * p > 1.0) {
                    continue;
                }
                const double v = poly.evaluate(p, r);
                CHECK(v >= -1e-12);
                CHECK(v <= 1.0 + 1e-12);
            }
        }
    }
}

TEST_CASE("win probability is nondecreasing in p at the default multiplier") {
    const double r = 0.894762228;
    for (const SeriesFormat& format : canonical_formats()) {
        const auto poly = series_win_polynomial(format, Side::Advantaged);
        double prev = 0.0;
        for (int i = 0; i <= 100; ++i) {
            const double v = poly.evaluate(i / 100.0, r);
            CHECK(v >= prev - 1e-12);
            prev = v;
        }
    }
}

TEST_CASE("polynomials agree with both brute-force oracles") {
    const std::vector<double> ps = {0.15, 0.4, 0.65, 0.9};
    const std::vector<double> rs = {0.3, 0.894762228, 1.05};
    for (const SeriesFormat& format : canonical_formats()) {
        const auto adv = series_win_polynomial(format, Side::Advantaged);
        const auto opp = series_win_polynomial(format, Side::Opponent);
        for (double p : ps) {
            for (double r : rs) {
                if (r * p > 1.0) {
                    continue;
                }
                const double value = adv.evaluate(p, r);
                CHECK(std::fabs(value - oracles::terminated_scenario_sum(format, true, p, r)) <=
                      1e-12);
                CHECK(std::fabs(value - oracles::play_all_games_sum(format, true, p, r)) <= 1e-12);
                CHECK(std::fabs(opp.evaluate(p, r) -
                                oracles::play_all_games_sum(format, false, p, r)) <= 1e-12);
            }
        }
    }
}
