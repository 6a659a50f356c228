#pragma once

#include "seriesfair/format.hpp"
#include "seriesfair/polynomial.hpp"
#include "seriesfair/scenario.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace seriesfair {

/// A longer format is called significantly fairer when it raises the
/// advantaged team's series-win probability by at least this much.
inline constexpr double kDefaultSignificanceThreshold = 0.04;

/// Result of comparing two series formats at a fixed road multiplier.
///
/// Orientation: the difference is (longer format) minus (shorter format), so
/// positive values mean the longer series favors the advantaged team more.
struct ComparisonReport {
    BivariatePolynomial difference; // exact, in p and r
    double r_value = 0.0;
    double threshold = kDefaultSignificanceThreshold;

    /// Roots of the derivative (after substituting r_value) inside [0,1].
    std::vector<double> critical_points;

    /// (p, difference value) at p = 0, each interior critical point, p = 1.
    std::vector<std::pair<double, double>> values;

    double max_advantage = 0.0;
    double min_advantage = 0.0;

    /// Unique sign change of the difference in (0,1), when one exists.
    std::optional<double> crossover;

    bool significant = false;

    /// Sign-change brackets of the derivative scanned on [1,2] at step 0.05;
    /// mathematically meaningless for probabilities but recorded because the
    /// derivative's remaining roots live out there.
    std::vector<std::pair<double, double>> external_root_brackets;
};

/// All real roots of poly in [lo, hi], each accurate to within tol and
/// deduplicated (roots closer than tol are merged).  Strategy: uniform grid
/// scan (step about 1e-3) for exact zeros and sign-change brackets, bisection
/// per bracket, then a guarded Newton polish.  Degree < 1 yields an empty
/// list; non-finite coefficients or an invalid interval raise
/// std::domain_error.
std::vector<double> isolate_roots(const RealPolynomial& poly, double lo, double hi,
                                  double tol = 1e-9);

/// Exact win-probability difference: P(win longer) - P(win shorter) for the
/// advantaged team.
BivariatePolynomial difference_function(const SeriesFormat& longer, const SeriesFormat& shorter);

/// Extreme-value workflow at fixed r: locate interior critical points,
/// evaluate the difference at them and at the endpoints, and take max/min
/// over that candidate list.  The crossover field is left empty; see
/// fairness_verdict for the full composition.  Throws std::domain_error for
/// non-positive r_value.
ComparisonReport extreme_value_analysis(const BivariatePolynomial& difference, double r_value,
                                        double threshold = kDefaultSignificanceThreshold);

/// All sign-change roots of the difference inside (0,1) after deflating the
/// structural roots at p = 0 and p = 1.
std::vector<double> interior_crossings(const BivariatePolynomial& difference, double r_value);

/// The unique interior crossing, if any.  Returns std::nullopt when none
/// exists; throws std::runtime_error when several do (the single-crossover
/// assumption is violated and callers must look at interior_crossings).
std::optional<double> crossover_point(const BivariatePolynomial& difference, double r_value);

/// End-to-end comparison: difference_function, extreme_value_analysis, and
/// crossover_point composed into one report.
ComparisonReport fairness_verdict(const SeriesFormat& longer, const SeriesFormat& shorter,
                                  double r_value,
                                  double threshold = kDefaultSignificanceThreshold);

/// Key-value serialization with a fixed field order:
/// difference, r, orientation, critical points, values, max advantage,
/// min advantage, crossover, external brackets, threshold, verdict.
/// Probabilities print with 9 decimals, the crossover with 6.
std::string to_text(const ComparisonReport& report);

} // namespace seriesfair
