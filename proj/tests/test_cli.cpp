#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

std::string env_or_fail(const char* name) {
    const char* value = std::getenv(name);
    REQUIRE_MESSAGE(value != nullptr, name);
    return value;
}

std::string binary() { return env_or_fail("SERIESFAIR_BIN"); }
std::string data_dir() { return env_or_fail("SERIESFAIR_DATA"); }
std::string golden_dir() { return env_or_fail("SERIESFAIR_GOLDEN"); }

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout and stderr merged
};

RunResult run_cli(const std::string& args) {
    const std::string command = binary() + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    std::size_t n = 0;
    while ((n = std::fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.output.append(buffer, n);
    }
    const int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    result.exit_code = WEXITSTATUS(status);
    return result;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    return lines;
}

int count_occurrences(const std::string& text, const std::string& needle) {
    int count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size())) {
        ++count;
    }
    return count;
}

bool contains(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("derive output matches the golden files") {
    for (const char* alias : {"1-1-1", "1-2", "2-3", "2-2-1", "2-3-2"}) {
        const auto result = run_cli(std::string("derive ") + alias);
        CHECK(result.exit_code == 0);
        const std::string expected =
            read_file(golden_dir() + "/derive_" + alias + ".txt");
        CHECK_MESSAGE(result.output == expected, alias);
    }
}

TEST_CASE("derive accepts aliases and raw venue strings alike") {
    CHECK(run_cli("derive 2-3-2").output == run_cli("derive HHAAAHH").output);
    CHECK(run_cli("derive 1-2").output == run_cli("derive AHH").output);

    const auto single = run_cli("derive H");
    CHECK(single.exit_code == 0);
    CHECK(contains(single.output, "scenarios (advantaged team, 1):"));
    CHECK(contains(single.output, "  W  p\n"));
    CHECK(contains(single.output, "win probability: p\n"));
}

TEST_CASE("derive rejects malformed formats") {
    CHECK(run_cli("derive HA").exit_code == 2);   // even length
    CHECK(run_cli("derive 3-4").exit_code == 2);  // unknown alias
    CHECK(run_cli("derive HAX").exit_code == 2);  // bad letter
    CHECK(run_cli("derive").exit_code == 2);      // missing argument
}

TEST_CASE("compare reports both canonical verdicts") {
    const auto five_three = run_cli("compare 2-3 1-1-1");
    CHECK(five_three.exit_code == 0);
    CHECK(contains(five_three.output, "comparison: AAHHH (longer) vs HAH (shorter)\n"));
    CHECK(contains(five_three.output, "max advantage: 0.047338476\n"));
    CHECK(contains(five_three.output, "crossover in (0,1): 0.537784\n"));
    CHECK(contains(five_three.output, "verdict: significant\n"));

    const auto seven_five = run_cli("compare 2-3-2 2-3");
    CHECK(seven_five.exit_code == 0);
    CHECK(contains(seven_five.output, "max advantage: 0.034221072\n"));
    CHECK(contains(seven_five.output, "crossover in (0,1): 0.533711\n"));
    CHECK(contains(seven_five.output, "verdict: NOT significant\n"));

    // The threshold option flips the seven-versus-five verdict.
    const auto loose = run_cli("compare 2-3-2 2-3 --threshold 0.03");
    CHECK(contains(loose.output, "verdict: significant\n"));
}

TEST_CASE("comparing a format with itself is a zero report") {
    const auto self = run_cli("compare 2-3 2-2-1");
    CHECK(self.exit_code == 0);
    CHECK(contains(self.output, "difference: 0\n"));
    CHECK(contains(self.output, "critical points in [0,1]: none\n"));
    CHECK(contains(self.output, "crossover in (0,1): none\n"));
    CHECK(contains(self.output, "verdict: NOT significant\n"));
}

TEST_CASE("compare validates its inputs") {
    CHECK(run_cli("compare 2-3").exit_code == 2);        // missing operand
    CHECK(run_cli("compare 2-3 XYZ").exit_code == 2);    // bad format
    CHECK(run_cli("compare 2-3 1-1-1 --r 0").exit_code == 2);
    CHECK(run_cli("compare 2-3 1-1-1 --r -1").exit_code == 2);
}

TEST_CASE("multiplier lists every row plus the average") {
    const auto champions = run_cli("multiplier " + data_dir() + "/champions.csv");
    CHECK(champions.exit_code == 0);
    const auto rows = lines_of(champions.output);
    REQUIRE(rows.size() == 13);
    CHECK(rows[0] == "2005 White Sox  1.106382979");
    CHECK(rows[10] == "2003 Marlins  0.716981132");
    CHECK(rows[12] == "average  0.877768441");

    const auto extremes = run_cli("multiplier " + data_dir() + "/extremes.csv");
    CHECK(extremes.exit_code == 0);
    CHECK(lines_of(extremes.output)[0] == "2001 Braves  1.200000000");
}

TEST_CASE("multiplier team filter") {
    const auto sox = run_cli("multiplier " + data_dir() + "/champions.csv --team 'White Sox'");
    CHECK(sox.exit_code == 0);
    const auto rows = lines_of(sox.output);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0] == "2005 White Sox  1.106382979");

    // The Yankees appear four times; no average line in filtered mode.
    const auto yankees = run_cli("multiplier " + data_dir() + "/champions.csv --team Yankees");
    CHECK(lines_of(yankees.output).size() == 4);
    CHECK(!contains(yankees.output, "average"));

    const auto missing = run_cli("multiplier " + data_dir() + "/champions.csv --team Cubgers");
    CHECK(missing.exit_code == 1);
    CHECK(contains(missing.output, "no record for team"));
}

TEST_CASE("multiplier surfaces file errors as data errors") {
    const auto result = run_cli("multiplier /nonexistent.csv");
    CHECK(result.exit_code == 1);
    CHECK(contains(result.output, "cannot open"));
}

TEST_CASE("sweep emits a difference grid in CSV form") {
    const auto result = run_cli("sweep 2-3 1-1-1");
    CHECK(result.exit_code == 0);
    const auto rows = lines_of(result.output);
    REQUIRE(rows.size() == 102); // header + 101 grid points
    CHECK(rows[0] == "p,value");
    CHECK(rows[1] == "0.000000000,0.000000000");
    CHECK(rows[41] == "0.400000000,-0.043195319");
    CHECK(rows[101] == "1.000000000,0.000000000");
}

TEST_CASE("sweep of a single format prints win probabilities") {
    const auto result = run_cli("sweep 2-3-2 --from 0.5 --to 0.7 --step 0.1");
    CHECK(result.exit_code == 0);
    const auto rows = lines_of(result.output);
    REQUIRE(rows.size() == 4);
    CHECK(rows[2] == "0.600000000,0.656505380");
}

TEST_CASE("sweep with a zero adjustment matches the plain model") {
    const auto plain = run_cli("sweep 2-3-2 --from 0 --to 1 --step 0.05");
    const auto morale = run_cli("sweep 2-3-2 --from 0 --to 1 --step 0.05 --mode fixed --a 0");
    CHECK(plain.exit_code == 0);
    CHECK(morale.exit_code == 0);
    const auto a = lines_of(plain.output);
    const auto b = lines_of(morale.output);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 1; i < a.size(); ++i) {
        const double va = std::stod(a[i].substr(a[i].find(',') + 1));
        const double vb = std::stod(b[i].substr(b[i].find(',') + 1));
        CHECK(std::fabs(va - vb) <= 1e-9);
    }
}

TEST_CASE("sweep validates the grid and surfaces morale range errors") {
    CHECK(run_cli("sweep 2-3 --from 0.5 --to 0.2").exit_code == 2);
    CHECK(run_cli("sweep 2-3 --step 0").exit_code == 2);
    CHECK(run_cli("sweep 2-3 --from 0 --to 2").exit_code == 2);
    CHECK(run_cli("sweep 2-3 2-2-1 1-1-1").exit_code == 2); // at most two formats

    const auto strict = run_cli("sweep 2-3-2 --mode cumulative --a 0.2");
    CHECK(strict.exit_code == 1);
    CHECK(contains(strict.output, "outside [0,1]"));
    CHECK(run_cli("sweep 2-3-2 --mode cumulative --a 0.2 --clamp").exit_code == 0);
}

TEST_CASE("simulate is deterministic and self-checks against the dp") {
    const std::string args =
        "simulate 1-1-1 --p 0.6 --r 0.9 --a 0.05 --mode fixed --trials 10000 --seed 7";
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
    CHECK(contains(first.output, "exact (dp): 0.619200000\n"));
    CHECK(contains(first.output, "trials: 10000\n"));
    CHECK(contains(first.output, "seed: 7\n"));
    CHECK(contains(first.output, "mode: fixed\n"));
    CHECK(contains(first.output, "self-check: OK\n"));
}

TEST_CASE("simulate handles sure wins exactly") {
    const auto result = run_cli("simulate 2-3 --p 1 --r 1 --trials 500 --seed 4");
    CHECK(result.exit_code == 0);
    CHECK(contains(result.output, "frequency: 1.000000000\n"));
    CHECK(contains(result.output, "exact (dp): 1.000000000\n"));
    CHECK(contains(result.output, "deviation: 0.000000000\n"));
}

TEST_CASE("an unlucky tiny sample fails the simulate self-check") {
    // 50 trials at p=0.01 with this seed produce a frequency far outside the
    // six-standard-error band; the command must say so and exit 3.
    const auto result = run_cli("simulate 1-1-1 --p 0.01 --trials 50 --seed 28");
    CHECK(result.exit_code == 3);
    CHECK(contains(result.output, "self-check: FAILED (deviation exceeds 6 standard errors)\n"));
}

TEST_CASE("simulate validates inputs and surfaces morale range errors") {
    CHECK(run_cli("simulate 2-3 --p 1.5").exit_code == 2);
    CHECK(run_cli("simulate 2-3 --p -0.1").exit_code == 2);
    CHECK(run_cli("simulate 2-3 --p 0.5 --r 0").exit_code == 2);
    CHECK(run_cli("simulate 2-3 --p 0.5 --trials 0").exit_code == 2);
    CHECK(run_cli("simulate XYZ --p 0.5").exit_code == 2);

    const auto strict =
        run_cli("simulate 2-3-2 --p 0.9 --mode cumulative --a 0.2 --trials 100 --seed 1");
    CHECK(strict.exit_code == 1);
    CHECK(contains(strict.output, "outside [0,1]"));

    const auto clamped =
        run_cli("simulate 2-3-2 --p 0.9 --mode cumulative --a 0.2 --trials 1000 --seed 1 --clamp");
    CHECK(clamped.exit_code == 0);
    CHECK(contains(clamped.output,
                   "note: some reachable game probabilities were clamped to [0,1]\n"));
}

TEST_CASE("the reference check suite reports its two known failures") {
    const auto result = run_cli("reproduce-paper --data-dir " + data_dir());
    CHECK(result.exit_code == 3);
    CHECK(contains(result.output, "22/24 checks passed\n"));
    CHECK(count_occurrences(result.output, "[FAIL]") == 2);
    CHECK(count_occurrences(result.output, "[ ok ]") == 22);
    // The two documented discrepancies: the six-decimal crossover of the
    // five-versus-three difference, and one champions-table multiplier.
    CHECK(contains(result.output, "crossover"));
    CHECK(contains(result.output, "Marlins"));
}

TEST_CASE("usage errors and help") {
    CHECK(run_cli("nosuchcommand").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    const auto help = run_cli("--help");
    CHECK(help.exit_code == 0);
    CHECK(contains(help.output, "derive"));
    CHECK(contains(help.output, "simulate"));
}
