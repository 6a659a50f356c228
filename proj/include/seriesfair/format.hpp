#pragma once

#include <string>
#include <vector>

namespace seriesfair {

/// Venue of a single game from the advantaged team's point of view.
enum class Venue { Home, Away };

/// Ordered home/away venue pattern of a best-of-N series, N odd.
///
/// The five traditional formats have named constructors and parseable
/// aliases: "1-1-1" = HAH, "1-2" = AHH, "2-3" = AAHHH, "2-2-1" = HHAAH,
/// "2-3-2" = HHAAAHH.  Arbitrary odd-length strings over {H, A} are also
/// accepted, e.g. "H" for a single-game series.
class SeriesFormat {
public:
    /// Throws std::invalid_argument if venues is empty or of even length.
    explicit SeriesFormat(std::vector<Venue> venues);

    /// Accepts either a venue string ("HAH", "HHAAAHH", ...) or one of the
    /// five named aliases above.  Throws std::invalid_argument otherwise.
    static SeriesFormat parse(const std::string& text);

    static SeriesFormat one_one_one();   // HAH
    static SeriesFormat one_two();       // AHH
    static SeriesFormat two_three();     // AAHHH
    static SeriesFormat two_two_one();   // HHAAH
    static SeriesFormat two_three_two(); // HHAAAHH

    int length() const { return static_cast<int>(venues_.size()); }
    int wins_needed() const { return (length() + 1) / 2; }

    /// Venue of game game_index (0-based).  Throws std::out_of_range.
    Venue venue(int game_index) const;

    const std::vector<Venue>& venues() const { return venues_; }

    /// Venue letters, e.g. "HHAAAHH".
    std::string str() const;

    friend bool operator==(const SeriesFormat& a, const SeriesFormat& b) {
        return a.venues_ == b.venues_;
    }
    friend bool operator!=(const SeriesFormat& a, const SeriesFormat& b) { return !(a == b); }

private:
    std::vector<Venue> venues_;
};

} // namespace seriesfair
