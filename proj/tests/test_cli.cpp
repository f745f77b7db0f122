#include "clt_lab/cli_harness.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace clt;
namespace fs = std::filesystem;

namespace {

class TempDir {
public:
    TempDir()
    {
        path_ = fs::temp_directory_path() / ("clt_lab_cli_" + std::to_string(::getpid()));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }

    [[nodiscard]] std::string file(const std::string& name) const { return (path_ / name).string(); }

    std::string write(const std::string& name, const std::string& text) const
    {
        std::ofstream(file(name)) << text;
        return file(name);
    }

private:
    fs::path path_;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<std::vector<double>> parse_rows(const std::string& csv)
{
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            row.push_back(std::stod(cell));
        }
        rows.push_back(row);
    }
    return rows;
}

const char* const kRademacher = R"({"atoms":[{"x":"-1","p":"1/2"},{"x":"1","p":"1/2"}]})";

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome execute(const RunConfig& config)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(config, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("format_decimal15")
{
    CHECK(format_decimal15(0.1875) == "0.187500000000000");
    CHECK(format_decimal15(4096.0) == "4096.00000000000");
    CHECK(format_decimal15(0.00623309268188016) == "0.00623309268188016");
    CHECK(format_decimal15(-2.5) == "-2.50000000000000");
    CHECK(format_decimal15(0.0) == "0");
}

TEST_CASE("converge writes the golden CSV")
{
    TempDir dir;
    RunConfig config;
    config.command = Command::converge;
    config.law_path = dir.write("rad.law", kRademacher);
    config.n_start = 4;
    config.n_factor = 2;
    config.steps = 11;
    config.out_path = dir.file("conv.csv");
    const Outcome first = execute(config);
    REQUIRE(first.code == kExitOk);
    const std::string csv = slurp(*config.out_path);

    CHECK(csv == slurp(std::string(CLT_TEST_DATA_DIR) + "/golden/converge_rademacher.csv"));
    CHECK(csv.rfind(std::string(kConvergeCsvHeader) + "\n", 0) == 0);
    CHECK(csv.find('\r') == std::string::npos);

    // Kolmogorov distance of the Rademacher sum at even n is C(n, n/2) / 2^(n+1).
    const std::vector<std::pair<long, double>> exact{
        {4, 0.1875},
        {8, 0.13671875},
        {16, 0.0981903076171875},
        {32, 0.06997496704570949077606},
        {64, 0.04967337687398344826415},
        {128, 0.03519304608500756588411},
        {256, 0.02490955496807007561914},
        {512, 0.01762231774291937031389},
        {1024, 0.01246390294648977185612},
        {2048, 0.008814386202423259987843},
        {4096, 0.00623309268188012978872},
    };
    const auto rows = parse_rows(csv);
    REQUIRE(rows.size() == 11);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        REQUIRE(row.size() == 7);
        CHECK(row[0] == exact[i].first);
        CHECK(row[1] == doctest::Approx(exact[i].second).epsilon(1e-12));
        CHECK(row[2] == doctest::Approx(2 * exact[i].second).epsilon(1e-12));
        CHECK(row[1] <= row[2]);
        CHECK(row[2] <= 2 * row[1] * (1 + 1e-14));
        CHECK(row[3] == doctest::Approx(std::sqrt(row[0]) * row[1]).epsilon(1e-13));
        CHECK(row[5] == doctest::Approx(0.398942280401433).epsilon(1e-14));
        CHECK(row[6] == doctest::Approx(0.797884560802865).epsilon(1e-14));
    }

    const Outcome second = execute(config);
    REQUIRE(second.code == kExitOk);
    CHECK(slurp(*config.out_path) == csv);
    CHECK(second.out == first.out);
}

TEST_CASE("converge rows satisfy the sandwich for a skewed law")
{
    TempDir dir;
    RunConfig config;
    config.command = Command::converge;
    config.law_path = dir.write("skew.law", R"({"atoms":[{"x":"0","p":"0.6"},{"x":"1","p":"0.3"},{"x":"7/2","p":"0.1"}]})");
    config.n_start = 1;
    config.n_factor = 3;
    config.steps = 6;
    config.out_path = dir.file("skew.csv");
    REQUIRE(execute(config).code == kExitOk);
    const auto rows = parse_rows(slurp(*config.out_path));
    REQUIRE(rows.size() == 6);
    for (const auto& row : rows) {
        CHECK(row[1] <= row[2]);
        CHECK(row[2] <= 2 * row[1] * (1 + 1e-14));
    }
}

TEST_CASE("gamma-converge rows")
{
    TempDir dir;
    RunConfig config;
    config.command = Command::gamma_converge;
    config.n_start = 16;
    config.n_factor = 4;
    config.steps = 4;
    config.out_path = dir.file("gamma.csv");
    REQUIRE(execute(config).code == kExitOk);
    const auto rows = parse_rows(slurp(*config.out_path));
    REQUIRE(rows.size() == 4);
    CHECK(rows.back()[0] == 1024.0);
    for (const auto& row : rows) {
        CHECK(row[1] <= row[2]);
        CHECK(row[2] <= 2 * row[1]);
        CHECK(row[6] == doctest::Approx(0.192324796744445).epsilon(1e-14));
        CHECK(row[5] == doctest::Approx(0.132980760133811).epsilon(1e-14));
    }
}

TEST_CASE("limit output")
{
    TempDir dir;
    RunConfig config;
    config.command = Command::limit;
    config.law_path = dir.write("rad.law", kRademacher);
    config.out_path = dir.file("limit.json");
    const Outcome outcome = execute(config);
    REQUIRE(outcome.code == kExitOk);
    CHECK(outcome.out.find("lattice_dominant") != std::string::npos);
    CHECK(outcome.out.find("0.79788456") != std::string::npos);
    const auto json = nlohmann::json::parse(slurp(*config.out_path));
    CHECK(json.at("branch") == "lattice_dominant");
    CHECK(json.at("value").get<double>() == doctest::Approx(std::sqrt(2.0 / M_PI)).epsilon(1e-15));
    CHECK(json.at("interval_objective").get<double>() == doctest::Approx(std::sqrt(2.0 / M_PI)).epsilon(1e-15));
}

TEST_CASE("extremal two-point Kolmogorov output")
{
    TempDir dir;
    RunConfig config;
    config.command = Command::extremal;
    config.objective = ObjectiveKind::kolmogorov;
    config.mode = SearchMode::two_point;
    config.out_path = dir.file("extremal.json");
    const Outcome outcome = execute(config);
    REQUIRE(outcome.code == kExitOk);
    CHECK(outcome.out.find("0.162277") != std::string::npos);
    CHECK(outcome.out.find("0.409732") != std::string::npos);
    const auto json = nlohmann::json::parse(slurp(*config.out_path));
    CHECK(json.at("spread").get<double>() == doctest::Approx(std::sqrt(10.0) - 3.0).epsilon(1e-6));
    CHECK(json.at("value").get<double>() == doctest::Approx(0.4097321837023963).epsilon(1e-9));
}

TEST_CASE("distance with the exact oracle")
{
    TempDir dir;
    RunConfig config;
    config.command = Command::distance;
    config.law_path = dir.write("rad.law", kRademacher);
    config.n = 4;
    config.exact = true;
    config.out_path = dir.file("distance.json");
    REQUIRE(execute(config).code == kExitOk);
    const auto json = nlohmann::json::parse(slurp(*config.out_path));
    CHECK(json.at("d_kolm").get<double>() == 0.1875);
    CHECK(json.at("d_interval").get<double>() == 0.375);
    CHECK(json.at("exact_max_mass_diff").get<double>() == 0.0);
    CHECK(json.at("exact_d_interval").get<double>() == 0.375);
}

TEST_CASE("remaining commands succeed")
{
    TempDir dir;
    const std::string law = dir.write("b.law", R"({"atoms":[{"x":"0","p":"0.7"},{"x":"1","p":"0.3"}]})");
    for (Command command : {Command::moments, Command::span, Command::edgeworth, Command::vonmises, Command::constants}) {
        RunConfig config;
        config.command = command;
        config.law_path = law;
        config.n = 9;
        config.out_path = dir.file("out.json");
        const Outcome outcome = execute(config);
        CHECK(outcome.code == kExitOk);
        CHECK_FALSE(outcome.out.empty());
        CHECK(nlohmann::json::accept(slurp(*config.out_path)));
    }
}

TEST_CASE("exit codes")
{
    TempDir dir;
    RunConfig config;
    config.command = Command::moments;
    config.law_path = dir.file("missing.law");
    Outcome outcome = execute(config);
    CHECK(outcome.code == kExitInputError);
    CHECK_FALSE(outcome.err.empty());

    config.law_path = dir.write("unknown.law", R"({"atoms":[{"x":"1","p":"1","q":"2"}]})");
    CHECK(execute(config).code == kExitInputError);

    config.law_path = dir.write("sum.law", R"({"atoms":[{"x":"1","p":"0.5"},{"x":"2","p":"0.4"}]})");
    CHECK(execute(config).code == kExitInputError);

    config.law_path = dir.write("garbage.law", "{not json");
    CHECK(execute(config).code == kExitInputError);

    config.command = Command::converge;
    config.law_path = dir.write("rad.law", kRademacher);
    config.n_factor = 1;
    CHECK(execute(config).code == kExitInputError);
    config.n_factor = 2;
    config.steps = 0;
    CHECK(execute(config).code == kExitInputError);

    config.command = Command::vonmises;
    config.s = 4;
    CHECK(execute(config).code == kExitInputError);

    config.command = Command::distance;
    config.n = 1L << 21;
    outcome = execute(config);
    CHECK(outcome.code == kExitScaleError);
    CHECK(outcome.err.find("SupportOverflow") != std::string::npos);

    config.command = Command::gamma_converge;
    config.n_start = 4096;
    config.steps = 2;
    CHECK(execute(config).code == kExitScaleError);
}
