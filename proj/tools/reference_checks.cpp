#include "reference_checks.hpp"

#include "seriesfair/analysis.hpp"
#include "seriesfair/records.hpp"
#include "seriesfair/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <exception>

namespace seriesfair::checks {

namespace {

std::string fmt(double v, int digits = 9) {
    if (v == 0.0) {
        v = 0.0;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

std::string sci(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2e", v);
    return buf;
}

struct Term {
    long long coeff;
    int deg_p;
    int deg_r;
};

BivariatePolynomial build(std::initializer_list<Term> terms) {
    BivariatePolynomial poly;
    for (const Term& t : terms) {
        poly += BivariatePolynomial::monomial(Rational(t.coeff), t.deg_p, t.deg_r);
    }
    return poly;
}

class Checker {
public:
    void equal_poly(const std::string& name, const BivariatePolynomial& got,
                    const BivariatePolynomial& want) {
        if (got == want) {
            pass(name);
        } else {
            fail(name, "computed " + got.str() + ", reference " + want.str());
        }
    }

    void approx(const std::string& name, double got, double want, double tol) {
        const double diff = std::fabs(got - want);
        if (diff <= tol) {
            pass(name);
        } else {
            fail(name, "computed " + fmt(got) + ", reference " + fmt(want) + ", |diff| " +
                           sci(diff) + " exceeds " + sci(tol));
        }
    }

    void approx_list(const std::string& name, const std::vector<double>& got,
                     const std::vector<double>& want, double tol) {
        if (got.size() != want.size()) {
            fail(name, "expected " + std::to_string(want.size()) + " values, got " +
                           std::to_string(got.size()));
            return;
        }
        for (std::size_t i = 0; i < got.size(); ++i) {
            const double diff = std::fabs(got[i] - want[i]);
            if (diff > tol) {
                fail(name, "value " + std::to_string(i + 1) + ": computed " + fmt(got[i]) +
                               ", reference " + fmt(want[i]) + ", |diff| " + sci(diff) +
                               " exceeds " + sci(tol));
                return;
            }
        }
        pass(name);
    }

    void truth(const std::string& name, bool ok, const std::string& detail_on_fail) {
        if (ok) {
            pass(name);
        } else {
            fail(name, detail_on_fail);
        }
    }

    void pass(const std::string& name) { results.push_back({name, true, ""}); }
    void fail(const std::string& name, const std::string& detail) {
        results.push_back({name, false, detail});
    }

    std::vector<CheckResult> results;
};

struct ReferenceRow {
    const char* name;
    double multiplier;
};

// The two fixture tables' published multipliers, in row order.
const std::vector<ReferenceRow> kExtremesReference = {
    {"2001 Braves", 1.2},
    {"1997 Orioles", 1.130434783},
    {"2001 Astros", 1.113636364},
    {"2005 White Sox", 1.106382979},
    {"2006 Tigers", 1.065217391},
    {"2000 White Sox", 1.065217391},
    {"2000 Mets", 0.709090909},
    {"2005 Braves", 0.698113208},
    {"2006 Cardinals", 0.685311162},
    {"2003 Athletics", 0.684210526},
    {"2005 Astros", 0.679245283},
};

const std::vector<ReferenceRow> kChampionsReference = {
    {"2005 White Sox", 1.106382979},
    {"1995 Braves", 1.045454545},
    {"1999 Yankees", 1.041666667},
    {"2000 Yankees", 0.941518847},
    {"2001 Diamondbacks", 0.916666667},
    {"1996 Yankees", 0.856147337},
    {"1998 Yankees", 0.838709677},
    {"2002 Angels", 0.833333333},
    {"2004 Red Sox", 0.781818182},
    {"1997 Marlins", 0.769230769},
    {"2003 Marlins", 0.716981131},
    {"2006 Cardinals", 0.685311162},
};

void check_table(Checker& c, const std::string& name, const std::string& path,
                 const std::vector<ReferenceRow>& reference, double tol) {
    std::vector<TeamRecord> records;
    try {
        records = load_records(path);
    } catch (const std::exception& e) {
        c.fail(name, e.what());
        return;
    }
    if (records.size() != reference.size()) {
        c.fail(name, "expected " + std::to_string(reference.size()) + " rows, got " +
                         std::to_string(records.size()));
        return;
    }
    for (std::size_t i = 0; i < records.size(); ++i) {
        const std::string label = display_name(records[i]);
        if (label != reference[i].name) {
            c.fail(name, "row " + std::to_string(i + 1) + ": expected '" + reference[i].name +
                             "', got '" + label + "'");
            return;
        }
        const double got = road_multiplier(records[i]);
        const double diff = std::fabs(got - reference[i].multiplier);
        if (diff > tol) {
            c.fail(name, "row " + std::to_string(i + 1) + " (" + label + "): computed " +
                             fmt(got) + ", reference " + fmt(reference[i].multiplier) +
                             ", |diff| " + sci(diff) + " exceeds " + sci(tol));
            return;
        }
    }
    c.pass(name);
}

std::vector<double> interior_critical_points(const ComparisonReport& report) {
    std::vector<double> out;
    for (double c : report.critical_points) {
        if (c > 0.0 && c < 1.0) {
            out.push_back(c);
        }
    }
    return out;
}

} // namespace

std::vector<CheckResult> run_reference_checks(const std::string& data_dir) {
    Checker c;
    const double r = kDefaultRoadMultiplier;

    const auto three = series_win_polynomial(SeriesFormat::one_one_one(), Side::Advantaged);
    const auto three_alt = series_win_polynomial(SeriesFormat::one_two(), Side::Advantaged);
    const auto five = series_win_polynomial(SeriesFormat::two_three(), Side::Advantaged);
    const auto five_alt = series_win_polynomial(SeriesFormat::two_two_one(), Side::Advantaged);
    const auto seven = series_win_polynomial(SeriesFormat::two_three_two(), Side::Advantaged);

    c.equal_poly("three-game win polynomial (1-1-1) matches reference",
                 three, build({{2, 2, 1}, {1, 2, 0}, {-2, 3, 1}}));
    c.equal_poly("1-2 format yields the same polynomial as 1-1-1", three_alt, three);
    c.equal_poly("five-game win polynomial (2-3) matches reference",
                 five, build({{3, 3, 2}, {6, 3, 1}, {1, 3, 0}, {-9, 4, 2}, {-6, 4, 1}, {6, 5, 2}}));
    c.equal_poly("2-2-1 format yields the same polynomial as 2-3", five_alt, five);
    c.equal_poly("seven-game win polynomial (2-3-2) matches reference",
                 seven, build({{4, 4, 3}, {18, 4, 2}, {12, 4, 1}, {1, 4, 0},
                               {-24, 5, 3}, {-48, 5, 2}, {-12, 5, 1},
                               {40, 6, 3}, {30, 6, 2}, {-20, 7, 3}}));

    const auto f = difference_function(SeriesFormat::two_three(), SeriesFormat::one_one_one());
    const auto s = difference_function(SeriesFormat::two_three_two(), SeriesFormat::two_three());
    c.equal_poly("five-vs-three difference matches reference",
                 f, build({{6, 5, 2}, {-9, 4, 2}, {-6, 4, 1}, {3, 3, 2}, {8, 3, 1}, {1, 3, 0},
                           {-2, 2, 1}, {-1, 2, 0}}));
    c.equal_poly("seven-vs-five difference matches reference",
                 s, build({{-20, 7, 3}, {40, 6, 3}, {30, 6, 2}, {-24, 5, 3}, {-54, 5, 2},
                           {-12, 5, 1}, {4, 4, 3}, {27, 4, 2}, {18, 4, 1}, {1, 4, 0},
                           {-3, 3, 2}, {-6, 3, 1}, {-1, 3, 0}}));
    c.equal_poly("derivative of five-vs-three difference matches reference",
                 f.derivative_p(), build({{30, 4, 2}, {-36, 3, 2}, {-24, 3, 1},
                                          {9, 2, 2}, {24, 2, 1}, {3, 2, 0}, {-4, 1, 1}, {-2, 1, 0}}));
    c.equal_poly("derivative of seven-vs-five difference matches reference",
                 s.derivative_p(), build({{-140, 6, 3}, {240, 5, 3}, {180, 5, 2},
                                          {-120, 4, 3}, {-270, 4, 2}, {-60, 4, 1},
                                          {16, 3, 3}, {108, 3, 2}, {72, 3, 1}, {4, 3, 0},
                                          {-9, 2, 2}, {-18, 2, 1}, {-3, 2, 0}}));

    const ComparisonReport rep_f =
        fairness_verdict(SeriesFormat::two_three(), SeriesFormat::one_one_one(), r);
    const ComparisonReport rep_s =
        fairness_verdict(SeriesFormat::two_three_two(), SeriesFormat::two_three(), r);

    c.approx_list("five-vs-three critical points match reference (1e-8)",
                  interior_critical_points(rep_f), {0.294269665, 0.756820873}, 1e-8);
    c.approx_list("seven-vs-five critical points match reference (1e-8)",
                  interior_critical_points(rep_s), {0.329786090, 0.723663130}, 1e-8);
    c.approx_list("five-vs-three extreme values match reference (1e-8)",
                  {rep_f.min_advantage, rep_f.max_advantage}, {-0.056156576, 0.047338476}, 1e-8);
    c.approx_list("seven-vs-five extreme values match reference (1e-8)",
                  {rep_s.min_advantage, rep_s.max_advantage}, {-0.038565024, 0.034221072}, 1e-8);

    c.approx("five-vs-three difference at p=0.4 matches reference (1e-9)",
             f.evaluate(0.4, r), -0.0431953192, 1e-9);

    const Rational r_exact = Rational(894762228, 1000000000);
    c.truth("difference functions vanish exactly at p=1",
            f.evaluate_exact(Rational(1), r_exact).is_zero() &&
                s.evaluate_exact(Rational(1), r_exact).is_zero(),
            "nonzero exact value at p=1");

    if (rep_f.crossover) {
        c.approx("five-vs-three crossover matches reference (5e-7)", *rep_f.crossover, 0.537783, 5e-7);
    } else {
        c.fail("five-vs-three crossover matches reference (5e-7)", "no crossover found");
    }
    if (rep_s.crossover) {
        c.approx("seven-vs-five crossover matches reference (5e-7)", *rep_s.crossover, 0.533711, 5e-7);
    } else {
        c.fail("seven-vs-five crossover matches reference (5e-7)", "no crossover found");
    }

    c.truth("five-vs-three verdict: significant", rep_f.significant,
            "max advantage " + fmt(rep_f.max_advantage) + " below threshold");
    c.truth("seven-vs-five verdict: NOT significant", !rep_s.significant,
            "max advantage " + fmt(rep_s.max_advantage) + " reached threshold");

    bool f_bracket_in_1_2 = false;
    for (const auto& [lo, hi] : rep_f.external_root_brackets) {
        if (lo >= 1.0 && hi <= 2.0) {
            f_bracket_in_1_2 = true;
        }
    }
    c.truth("five-vs-three derivative changes sign in (1,2)", f_bracket_in_1_2,
            "no sign-change bracket found in (1,2)");
    bool s_brackets_ok = rep_s.external_root_brackets.size() == 2 &&
                         std::fabs(rep_s.external_root_brackets[0].first - 1.00) < 1e-9 &&
                         std::fabs(rep_s.external_root_brackets[0].second - 1.05) < 1e-9 &&
                         std::fabs(rep_s.external_root_brackets[1].first - 1.05) < 1e-9 &&
                         std::fabs(rep_s.external_root_brackets[1].second - 1.10) < 1e-9;
    c.truth("seven-vs-five derivative changes sign in (1,1.05) and (1.05,1.1)", s_brackets_ok,
            "expected brackets (1,1.05) and (1.05,1.1)");

    check_table(c, "extreme-multiplier table reproduced (5e-10)", data_dir + "/extremes.csv",
                kExtremesReference, 5e-10);
    check_table(c, "champions table reproduced (5e-10)", data_dir + "/champions.csv",
                kChampionsReference, 5e-10);

    try {
        const auto champions = load_records(data_dir + "/champions.csv");
        double reference_mean = 0.0;
        for (const ReferenceRow& row : kChampionsReference) {
            reference_mean += row.multiplier;
        }
        reference_mean /= static_cast<double>(kChampionsReference.size());
        c.approx("champions average multiplier matches (5e-10)",
                 average_road_multiplier(champions), reference_mean, 5e-10);
    } catch (const std::exception& e) {
        c.fail("champions average multiplier matches (5e-10)", e.what());
    }

    return c.results;
}

} // namespace seriesfair::checks
