#pragma once

#include "seriesfair/rational.hpp"

#include <string>
#include <vector>

namespace seriesfair {

/// Default road multiplier: the league-wide average ratio of road to home
/// winning percentage used throughout the analysis when no dataset is given.
inline constexpr double kDefaultRoadMultiplier = 0.894762228;

/// One team-season's home/road win-loss record.
struct TeamRecord {
    std::string team;
    int season = 0;
    int home_wins = 0;
    int home_losses = 0;
    int road_wins = 0;
    int road_losses = 0;
};

/// Throws std::invalid_argument unless all counts are nonnegative and both
/// home and road games were actually played (HW+HL > 0, RW+RL > 0).
void validate(const TeamRecord& rec);

/// Road winning percentage divided by home winning percentage, exactly:
/// RW(HW+HL) / ((RW+RL)HW).  A winless home record has no finite multiplier
/// and raises std::domain_error; a winless road record is fine (ratio 0).
Rational road_multiplier_exact(const TeamRecord& rec);

/// road_multiplier_exact rounded once to double.
double road_multiplier(const TeamRecord& rec);

/// Arithmetic mean of the individual multipliers, accumulated as exact
/// rationals and rounded once, so the result is independent of list order.
/// Throws std::domain_error on an empty list.
double average_road_multiplier(const std::vector<TeamRecord>& records);

/// "{season} {team}", e.g. "2001 Braves".
std::string display_name(const TeamRecord& rec);

/// Load and validate records from a CSV file with the exact header
/// `team,season,home_wins,home_losses,road_wins,road_losses`.
/// Any failure throws std::runtime_error naming the line (and field, for
/// parse errors).
std::vector<TeamRecord> load_records(const std::string& path);

} // namespace seriesfair
