#pragma once

#include "seriesfair/format.hpp"
#include "seriesfair/records.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace seriesfair {

/// How the series score adjusts the advantaged team's per-game probability.
enum class MoraleMode {
    None,       ///< independent games: p at home, rp on the road
    Fixed,      ///< leading: p+a, trailing: p-a, tied: p (road values scaled by r)
    Cumulative, ///< p + (lead)*a with the signed series lead (road scaled by r)
};

/// Parameters of the per-game model.  strict controls what happens when a
/// reachable state produces a raw probability outside [0,1]: fail loudly
/// (default) or clamp and flag the result.
struct MoraleModel {
    double p = 0.5;
    double r = kDefaultRoadMultiplier;
    double a = 0.0;
    MoraleMode mode = MoraleMode::None;
    bool strict = true;
};

/// Score state before a game: wins so far on each side plus the 0-based index
/// of the game about to be played (equal to the games already played).
struct SeriesState {
    int wins_advantaged = 0;
    int wins_opponent = 0;
    int game_index = 0;
};

/// Raised in strict mode when a reachable state's raw game probability falls
/// outside [0,1]; carries the offending state.
class MoraleRangeError : public std::domain_error {
public:
    MoraleRangeError(double raw, const SeriesState& state, Venue venue);

    double raw_probability;
    SeriesState state;
    Venue venue;
};

/// Probability that the advantaged team wins the game described by (state,
/// venue) under the model.  In strict mode an out-of-range raw value raises
/// MoraleRangeError; otherwise it is clamped to [0,1] and *clamped (when
/// given) is set.
double game_win_probability(const MoraleModel& model, const SeriesState& state, Venue venue,
                            bool* clamped = nullptr);

/// Series outcome distribution from the forward dynamic program.
struct SeriesWinDp {
    double advantaged = 0.0;
    double opponent = 0.0;
    bool clamped = false; ///< some reachable state was clamped (strict=false only)
};

SeriesWinDp series_win_probability_dp_detail(const SeriesFormat& format, const MoraleModel& model);

/// Advantaged team's series-win probability from the dynamic program.
double series_win_probability_dp(const SeriesFormat& format, const MoraleModel& model);

struct SimulationResult {
    std::uint64_t wins = 0;
    std::uint64_t trials = 0;
    double frequency = 0.0;
};

/// Monte Carlo estimate of the advantaged team's series-win probability.
///
/// Reproducibility contract: the generator is splitmix64.  Trial i draws from
/// its own stream whose initial state is the splitmix64 finalizer applied to
/// seed + (i+1) * 0x9E3779B97F4A7C15; each game consumes one 64-bit output,
/// mapped to [0,1) with 53 bits.  Because a trial's stream depends only on
/// (seed, i), partitioning trials across workers cannot change the counts.
/// Throws std::invalid_argument when trials is zero.
SimulationResult simulate_series(const SeriesFormat& format, const MoraleModel& model,
                                 std::uint64_t trials, std::uint64_t seed);

} // namespace seriesfair
