#include "seriesfair/records.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace seriesfair {

void validate(const TeamRecord& rec) {
    if (rec.home_wins < 0 || rec.home_losses < 0 || rec.road_wins < 0 || rec.road_losses < 0) {
        throw std::invalid_argument("TeamRecord: negative game count for " + rec.team);
    }
    if (rec.home_wins + rec.home_losses == 0) {
        throw std::invalid_argument("TeamRecord: no home games played for " + rec.team);
    }
    if (rec.road_wins + rec.road_losses == 0) {
        throw std::invalid_argument("TeamRecord: no road games played for " + rec.team);
    }
}

Rational road_multiplier_exact(const TeamRecord& rec) {
    validate(rec);
    if (rec.home_wins == 0) {
        throw std::domain_error("road_multiplier: home winning percentage is zero for " +
                                rec.team + "; multiplier undefined");
    }
    // (RW/(RW+RL)) / (HW/(HW+HL)) without intermediate rounding.
    const long long rw = rec.road_wins;
    const long long rl = rec.road_losses;
    const long long hw = rec.home_wins;
    const long long hl = rec.home_losses;
    return Rational(rw * (hw + hl), (rw + rl) * hw);
}

double road_multiplier(const TeamRecord& rec) {
    return road_multiplier_exact(rec).to_double();
}

double average_road_multiplier(const std::vector<TeamRecord>& records) {
    if (records.empty()) {
        throw std::domain_error("average_road_multiplier: empty record list");
    }
    Rational sum(0);
    for (const TeamRecord& rec : records) {
        sum += road_multiplier_exact(rec);
    }
    return (sum / Rational(static_cast<long long>(records.size()))).to_double();
}

std::string display_name(const TeamRecord& rec) {
    return std::to_string(rec.season) + " " + rec.team;
}

namespace {

const char* kHeader = "team,season,home_wins,home_losses,road_wins,road_losses";

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

int parse_count(const std::string& text, int line_no, const char* field) {
    int value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || text.empty()) {
        throw std::runtime_error("line " + std::to_string(line_no) + ", field '" + field +
                                 "': expected an integer, got '" + text + "'");
    }
    return value;
}

} // namespace

std::vector<TeamRecord> load_records(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open records file: " + path);
    }
    std::string line;
    int line_no = 0;
    std::vector<TeamRecord> records;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line_no == 1) {
            if (line != kHeader) {
                throw std::runtime_error("line 1: expected header '" + std::string(kHeader) +
                                         "', got '" + line + "'");
            }
            continue;
        }
        if (line.empty()) {
            continue;
        }
        const std::vector<std::string> fields = split_fields(line);
        if (fields.size() != 6) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": expected 6 fields, got " +
                                     std::to_string(fields.size()));
        }
        TeamRecord rec;
        rec.team = fields[0];
        rec.season = parse_count(fields[1], line_no, "season");
        rec.home_wins = parse_count(fields[2], line_no, "home_wins");
        rec.home_losses = parse_count(fields[3], line_no, "home_losses");
        rec.road_wins = parse_count(fields[4], line_no, "road_wins");
        rec.road_losses = parse_count(fields[5], line_no, "road_losses");
        try {
            validate(rec);
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": " + e.what());
        }
        records.push_back(std::move(rec));
    }
    if (line_no == 0) {
        throw std::runtime_error("line 1: expected header '" + std::string(kHeader) +
                                 "', got empty file");
    }
    return records;
}

} // namespace seriesfair
