#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "fht/cli.hpp"

using namespace fht;
using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("help and usage errors") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == 2);
    CHECK(run({"exact", "--symbol", "nope", "--n", "4"}).code == 2);
    CHECK(run({"exact", "--symbol", "identity", "--n", "4", "--grid", "100"}).code == 2);
    CHECK(run({"correlator", "--kind", "counting", "--m", "2", "--x", "0.3"}).code == 2);
}

TEST_CASE("numerical failures emit a JSON error object and exit 1") {
    const RunResult r = run({"barnes", "--z", "0,0"});
    CHECK(r.code == 1);
    const json j = json::parse(r.out);
    CHECK(j.contains("error"));
}

TEST_CASE("barnes subcommand") {
    const RunResult r = run({"barnes", "--z", "0.5,0"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(std::abs(j["G"]["re"].get<double>() - 0.6032442812) < 1e-9);
    CHECK(std::abs(j["G"]["im"].get<double>()) < 1e-13);
    CHECK(std::abs(j["z"]["re"].get<double>() - 0.5) == 0.0);
    CHECK(j.contains("logG"));
}

TEST_CASE("reps subcommand finds the degenerate pair") {
    const RunResult r = run({"reps", "--symbol", "jump", "--alpha", "3.14159265", "--xr", "2.0"});
    REQUIRE(r.code == 0);
    const json arr = json::parse(r.out);
    int minimal = 0;
    for (const auto& rep : arr)
        if (rep["minimal"].get<bool>()) ++minimal;
    CHECK(minimal == 2);

    const RunResult r2 = run({"reps", "--symbol", "jump", "--alpha", "1.884", "--xr", "2.0"});
    const json arr2 = json::parse(r2.out);
    int minimal2 = 0;
    for (const auto& rep : arr2)
        if (rep["minimal"].get<bool>()) ++minimal2;
    CHECK(minimal2 == 1);
}

TEST_CASE("exact subcommand round-trips values at full precision") {
    const RunResult r = run({"exact", "--symbol", "dd", "--xr", "2.0", "--n", "6", "--grid", "1024"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    const DeterminantResult ref = toeplitz_determinant_with_error(density_density_symbol(2.0), 6, 1024);
    CHECK(j["det"]["re"].get<double>() == ref.det.real());
    CHECK(j["det"]["im"].get<double>() == ref.det.imag());
    CHECK(j["log_modulus"].get<double>() == ref.log_det.log_modulus);
    CHECK(j["N"].get<int>() == 6);
}

TEST_CASE("asymptote subcommand") {
    const RunResult r = run({"asymptote", "--symbol", "jump", "--alpha", "1.884", "--xr", "1.884",
                             "--n", "64"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["representations"].size() == 1);
    const Complex d(j["D"]["re"].get<double>(), j["D"]["im"].get<double>());
    const Complex ref = fh_determinant_asymptote(jump_symbol(1.884, 1.884), 64);
    CHECK(std::abs(d - ref) == 0.0);
}

TEST_CASE("compare subcommand emits the versioned CSV with shrinking error") {
    const RunResult r = run({"compare", "--symbol", "jump", "--alpha", "1.884", "--xr", "1.884",
                             "--n", "16,32,64", "--grid", "65536"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "# fh-toeplitz v1");
    std::getline(in, line);
    CHECK(line.starts_with("# compare:"));
    std::vector<double> errs;
    while (std::getline(in, line)) {
        std::stringstream row(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(row, field, ',')) fields.push_back(field);
        REQUIRE(fields.size() == 7);
        errs.push_back(std::stod(fields[5]));
    }
    REQUIRE(errs.size() == 3);
    CHECK(errs[1] < errs[0]);
    CHECK(errs[2] < errs[1]);

    // identity symbol: zero error rows
    const RunResult rid = run({"compare", "--symbol", "identity", "--n", "8"});
    std::istringstream iid(rid.out);
    std::getline(iid, line);
    std::getline(iid, line);
    std::getline(iid, line);
    CHECK(line.starts_with("8,1,"));

    // density-matrix symbol at b = 0 against its asymptote
    const RunResult rdm = run({"compare", "--symbol", "dm", "--alpha", "0", "--xr", "3.1416",
                               "--n", "32", "--grid", "65536"});
    REQUIRE(rdm.code == 0);
    std::istringstream idm(rdm.out);
    std::getline(idm, line);
    std::getline(idm, line);
    std::getline(idm, line);
    std::stringstream row(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(row, field, ',')) fields.push_back(field);
    REQUIRE(fields.size() == 7);
    CHECK(std::stod(fields[5]) < 0.02);  // O(1/N) agreement at N = 32
}

TEST_CASE("correlator subcommand") {
    const RunResult r = run({"correlator", "--kind", "green", "--m", "20", "--l", "1", "--x",
                             "0.25", "--both"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    // Dirichlet kernel zero: both sides vanish
    CHECK(std::abs(j["exact"]["re"].get<double>()) < 1e-8);
    CHECK(std::abs(j["asym"]["re"].get<double>()) < 1e-12);

    const RunResult rdd = run({"correlator", "--kind", "dd", "--m", "20", "--l", "1", "--x", "0.3",
                               "--grid", "4096"});
    const json jdd = json::parse(rdd.out);
    CHECK(std::abs(jdd["exact"].get<double>() - 400.0) < 1e-6);
    CHECK(jdd.contains("det_identity"));
    CHECK(jdd.contains("leading"));

    // --xr-frac style input is accepted on symbol-based commands
    const RunResult rx = run({"exact", "--symbol", "dd", "--xr-frac", "0.3", "--n", "4"});
    CHECK(rx.code == 0);
}

TEST_CASE("sweep subcommand emits one row per combination") {
    const RunResult r = run({"sweep", "--kind", "counting", "--m", "8,12", "--l", "1", "--x",
                             "0.3,0.4", "--alpha", "1.0", "--grid", "8192"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    int rows = 0, comments = 0;
    while (std::getline(in, line)) {
        if (line.starts_with("#")) ++comments;
        else ++rows;
    }
    CHECK(comments == 2);
    CHECK(rows == 4);
}

TEST_CASE("identical configuration gives byte-identical output") {
    const std::vector<std::string> args = {"correlator", "--kind", "counting", "--m", "16",
                                           "--l", "1", "--x", "0.3", "--alpha", "1.884"};
    const RunResult a = run(args);
    const RunResult b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}
