#include "seriesfair/scenario.hpp"

#include <stdexcept>

namespace seriesfair {

namespace {

char game_letter(Venue venue, bool advantaged_won) {
    if (venue == Venue::Home) {
        return advantaged_won ? 'W' : 'L';
    }
    return advantaged_won ? 'w' : 'l';
}

void enumerate_from(const SeriesFormat& format, Side side, std::string& prefix,
                    int wins_adv, int wins_opp, std::vector<Scenario>& out) {
    const int need = format.wins_needed();
    if (wins_adv == need || wins_opp == need) {
        if ((wins_adv == need) == (side == Side::Advantaged)) {
            out.push_back(Scenario{prefix, side});
        }
        return;
    }
    const int game = static_cast<int>(prefix.size());
    const Venue venue = format.venue(game);
    // Win branch first keeps the list in lexicographic win-before-loss order.
    prefix.push_back(game_letter(venue, true));
    enumerate_from(format, side, prefix, wins_adv + 1, wins_opp, out);
    prefix.back() = game_letter(venue, false);
    enumerate_from(format, side, prefix, wins_adv, wins_opp + 1, out);
    prefix.pop_back();
}

} // namespace

std::vector<Scenario> enumerate_victory_scenarios(const SeriesFormat& format, Side side) {
    std::vector<Scenario> out;
    std::string prefix;
    enumerate_from(format, side, prefix, 0, 0, out);
    return out;
}

BivariatePolynomial scenario_probability(const Scenario& s) {
    if (s.games.empty()) {
        throw std::invalid_argument("scenario_probability: empty scenario");
    }
    const BivariatePolynomial one = BivariatePolynomial::constant(Rational(1));
    const BivariatePolynomial p = BivariatePolynomial::var_p();
    const BivariatePolynomial rp = BivariatePolynomial::var_r() * p;

    BivariatePolynomial prob = one;
    for (char c : s.games) {
        switch (c) {
        case 'W': prob *= p; break;
        case 'L': prob *= one - p; break;
        case 'w': prob *= rp; break;
        case 'l': prob *= one - rp; break;
        default:
            throw std::invalid_argument(std::string("scenario_probability: unexpected letter '") +
                                        c + "' (expected W, L, w, or l)");
        }
    }
    return prob;
}

std::string scenario_probability_factored(const Scenario& s) {
    if (s.games.empty()) {
        throw std::invalid_argument("scenario_probability_factored: empty scenario");
    }
    int home_wins = 0, road_wins = 0, home_losses = 0, road_losses = 0;
    for (char c : s.games) {
        switch (c) {
        case 'W': ++home_wins; break;
        case 'w': ++road_wins; break;
        case 'L': ++home_losses; break;
        case 'l': ++road_losses; break;
        default:
            throw std::invalid_argument(std::string("scenario_probability_factored: unexpected letter '") +
                                        c + "' (expected W, L, w, or l)");
        }
    }
    auto factor = [](const std::string& base, int count, bool parens_always) {
        if (count == 0) {
            return std::string();
        }
        std::string text = parens_always ? "(" + base + ")" : base;
        if (count > 1) {
            text += "^" + std::to_string(count);
        }
        return text;
    };
    return factor("p", home_wins, false) + factor("rp", road_wins, true) +
           factor("1-p", home_losses, true) + factor("1-rp", road_losses, true);
}

BivariatePolynomial series_win_polynomial(const SeriesFormat& format, Side side) {
    BivariatePolynomial total;
    for (const Scenario& s : enumerate_victory_scenarios(format, side)) {
        total += scenario_probability(s);
    }
    return total;
}

} // namespace seriesfair
