#pragma once

#include "seriesfair/format.hpp"
#include "seriesfair/polynomial.hpp"

#include <string>
#include <vector>

namespace seriesfair {

/// Which team a scenario or polynomial refers to.
enum class Side { Advantaged, Opponent };

/// A terminated series outcome: one letter per game actually played.
/// Uppercase letters are the advantaged team's home games, lowercase its road
/// games; W/w mean the advantaged team won that game, L/l that it lost.
/// The sequence stops at the game on which `winner` clinches.
struct Scenario {
    std::string games;
    Side winner = Side::Advantaged;
};

/// All victory scenarios for `side`, complete and duplicate-free.  Order is
/// deterministic: lexicographic by game index with the advantaged team's win
/// explored before its loss (depth-first, win branch first).
std::vector<Scenario> enumerate_victory_scenarios(const SeriesFormat& format, Side side);

/// Probability of one scenario as an exact polynomial in p and r, using the
/// per-game factors W -> p, L -> 1-p, w -> rp, l -> 1-rp.
/// Throws std::invalid_argument for an empty scenario or unexpected letters.
BivariatePolynomial scenario_probability(const Scenario& s);

/// Display form of the scenario probability before expansion, e.g.
/// "p^2(rp)(1-p)(1-rp)".  Factors appear in the fixed order p, (rp), (1-p),
/// (1-rp); zero-count factors are omitted.
std::string scenario_probability_factored(const Scenario& s);

/// Exact probability that `side` wins the series: the sum of
/// scenario_probability over enumerate_victory_scenarios(format, side).
BivariatePolynomial series_win_polynomial(const SeriesFormat& format, Side side);

} // namespace seriesfair
