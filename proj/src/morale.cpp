#include "seriesfair/morale.hpp"

#include <cmath>
#include <vector>

namespace seriesfair {

namespace {

std::string describe(double raw, const SeriesState& state, Venue venue) {
    return "game probability " + std::to_string(raw) + " outside [0,1] at state (wins " +
           std::to_string(state.wins_advantaged) + "-" + std::to_string(state.wins_opponent) +
           ", game " + std::to_string(state.game_index + 1) + ", " +
           (venue == Venue::Home ? "home" : "road") + ")";
}

void check_model(const MoraleModel& model) {
    if (!std::isfinite(model.p) || model.p < 0.0 || model.p > 1.0) {
        throw std::invalid_argument("MoraleModel: p must lie in [0,1]");
    }
    if (!std::isfinite(model.r) || model.r <= 0.0) {
        throw std::domain_error("MoraleModel: r must be finite and positive");
    }
    if (!std::isfinite(model.a)) {
        throw std::invalid_argument("MoraleModel: a must be finite");
    }
}

void check_state(const SeriesState& state) {
    if (state.wins_advantaged < 0 || state.wins_opponent < 0 ||
        state.wins_advantaged + state.wins_opponent != state.game_index) {
        throw std::invalid_argument("SeriesState: inconsistent win counts for game index " +
                                    std::to_string(state.game_index));
    }
}

} // namespace

MoraleRangeError::MoraleRangeError(double raw, const SeriesState& s, Venue v)
    : std::domain_error(describe(raw, s, v)), raw_probability(raw), state(s), venue(v) {}

double game_win_probability(const MoraleModel& model, const SeriesState& state, Venue venue,
                            bool* clamped) {
    check_model(model);
    check_state(state);

    const int lead = state.wins_advantaged - state.wins_opponent;
    double adjustment = 0.0;
    switch (model.mode) {
    case MoraleMode::None:
        break;
    case MoraleMode::Fixed:
        adjustment = lead > 0 ? model.a : (lead < 0 ? -model.a : 0.0);
        break;
    case MoraleMode::Cumulative:
        adjustment = model.a * lead;
        break;
    }
    double prob = model.p + adjustment;
    if (venue == Venue::Away) {
        prob *= model.r;
    }
    if (prob < 0.0 || prob > 1.0) {
        if (model.strict) {
            throw MoraleRangeError(prob, state, venue);
        }
        prob = prob < 0.0 ? 0.0 : 1.0;
        if (clamped != nullptr) {
            *clamped = true;
        }
    }
    return prob;
}

SeriesWinDp series_win_probability_dp_detail(const SeriesFormat& format, const MoraleModel& model) {
    check_model(model);
    const int need = format.wins_needed();
    const int len = format.length();

    // mass[wa][wo]: probability of being at score (wa, wo) with the series
    // still alive.  One sweep per game moves all live mass forward.
    std::vector<std::vector<double>> mass(static_cast<std::size_t>(need) + 1,
                                          std::vector<double>(static_cast<std::size_t>(need) + 1, 0.0));
    mass[0][0] = 1.0;

    SeriesWinDp result;
    for (int game = 0; game < len; ++game) {
        std::vector<std::vector<double>> next(static_cast<std::size_t>(need) + 1,
                                              std::vector<double>(static_cast<std::size_t>(need) + 1, 0.0));
        const Venue venue = format.venue(game);
        for (int wa = 0; wa < need; ++wa) {
            for (int wo = 0; wo < need; ++wo) {
                if (wa + wo != game) {
                    continue;
                }
                const double m = mass[static_cast<std::size_t>(wa)][static_cast<std::size_t>(wo)];
                if (m == 0.0) {
                    continue;
                }
                const SeriesState state{wa, wo, game};
                const double p_win = game_win_probability(model, state, venue, &result.clamped);
                if (wa + 1 == need) {
                    result.advantaged += m * p_win;
                } else {
                    next[static_cast<std::size_t>(wa) + 1][static_cast<std::size_t>(wo)] += m * p_win;
                }
                if (wo + 1 == need) {
                    result.opponent += m * (1.0 - p_win);
                } else {
                    next[static_cast<std::size_t>(wa)][static_cast<std::size_t>(wo) + 1] += m * (1.0 - p_win);
                }
            }
        }
        mass = std::move(next);
    }
    return result;
}

double series_win_probability_dp(const SeriesFormat& format, const MoraleModel& model) {
    return series_win_probability_dp_detail(format, model).advantaged;
}

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix64_finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += kGolden;
    return splitmix64_finalize(state);
}

double to_unit_interval(std::uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

} // namespace

SimulationResult simulate_series(const SeriesFormat& format, const MoraleModel& model,
                                 std::uint64_t trials, std::uint64_t seed) {
    if (trials == 0) {
        throw std::invalid_argument("simulate_series: trials must be at least 1");
    }
    check_model(model);
    const int need = format.wins_needed();
    const int len = format.length();

    SimulationResult result;
    result.trials = trials;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        std::uint64_t stream = splitmix64_finalize(seed + (trial + 1) * kGolden);
        int wa = 0;
        int wo = 0;
        for (int game = 0; game < len && wa < need && wo < need; ++game) {
            const SeriesState state{wa, wo, game};
            const double p_win = game_win_probability(model, state, format.venue(game));
            if (to_unit_interval(splitmix64_next(stream)) < p_win) {
                ++wa;
            } else {
                ++wo;
            }
        }
        if (wa == need) {
            ++result.wins;
        }
    }
    result.frequency = static_cast<double>(result.wins) / static_cast<double>(trials);
    return result;
}

} // namespace seriesfair
