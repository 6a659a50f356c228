#include "seriesfair/format.hpp"

#include <stdexcept>

namespace seriesfair {

SeriesFormat::SeriesFormat(std::vector<Venue> venues) : venues_(std::move(venues)) {
    if (venues_.empty()) {
        throw std::invalid_argument("SeriesFormat: venue list is empty");
    }
    if (venues_.size() % 2 == 0) {
        throw std::invalid_argument("SeriesFormat: series length must be odd, got " +
                                    std::to_string(venues_.size()));
    }
}

namespace {

SeriesFormat from_letters(const std::string& letters) {
    std::vector<Venue> v;
    v.reserve(letters.size());
    for (char c : letters) {
        switch (c) {
        case 'H': v.push_back(Venue::Home); break;
        case 'A': v.push_back(Venue::Away); break;
        default:
            throw std::invalid_argument(std::string("SeriesFormat: unexpected character '") + c +
                                        "' (expected H or A)");
        }
    }
    return SeriesFormat(std::move(v));
}

} // namespace

SeriesFormat SeriesFormat::parse(const std::string& text) {
    if (text == "1-1-1") return one_one_one();
    if (text == "1-2") return one_two();
    if (text == "2-3") return two_three();
    if (text == "2-2-1") return two_two_one();
    if (text == "2-3-2") return two_three_two();
    if (text.empty()) {
        throw std::invalid_argument("SeriesFormat: empty format string");
    }
    return from_letters(text);
}

SeriesFormat SeriesFormat::one_one_one() { return from_letters("HAH"); }
SeriesFormat SeriesFormat::one_two() { return from_letters("AHH"); }
SeriesFormat SeriesFormat::two_three() { return from_letters("AAHHH"); }
SeriesFormat SeriesFormat::two_two_one() { return from_letters("HHAAH"); }
SeriesFormat SeriesFormat::two_three_two() { return from_letters("HHAAAHH"); }

Venue SeriesFormat::venue(int game_index) const {
    if (game_index < 0 || game_index >= length()) {
        throw std::out_of_range("SeriesFormat: game index " + std::to_string(game_index) +
                                " outside series of length " + std::to_string(length()));
    }
    return venues_[static_cast<std::size_t>(game_index)];
}

std::string SeriesFormat::str() const {
    std::string s;
    s.reserve(venues_.size());
    for (Venue v : venues_) {
        s.push_back(v == Venue::Home ? 'H' : 'A');
    }
    return s;
}

} // namespace seriesfair
