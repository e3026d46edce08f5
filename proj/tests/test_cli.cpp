#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "cyclab/error.hpp"
#include "helpers.hpp"

using namespace cyclab;
using namespace cyclab::cli;

namespace {

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "cyclab_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

RunManifest manifest(Command c, const std::string& fixture, const std::string& out) {
    RunManifest m;
    m.command = c;
    m.input_path = test::fixture(fixture);
    m.output_path = scratch(out);
    return m;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("command names round-trip") {
    for (const auto c : {Command::coeffs, Command::rolle, Command::zeros, Command::sweep, Command::cartan,
                         Command::remez, Command::frobenius}) {
        CHECK(command_from_string(to_string(c)) == c);
    }
    CHECK_THROWS_AS(command_from_string("integrate"), DomainError);
}

TEST_CASE("rolle on e^z - 1 - z") {
    RunManifest m;
    m.command = Command::rolle;
    const Json r = execute(m, test::load_fixture("exp_z_minus_1_minus_z"));
    CHECK(r["ord_sum"] == 2);
    CHECK(r["bound"] == 2);
    CHECK(r["satisfied"] == true);
}

TEST_CASE("coeffs match the closed forms") {
    RunManifest m;
    m.command = Command::coeffs;
    m.max_n = 4;
    const Json r = execute(m, test::load_fixture("exp_z_minus_1_minus_z"));
    REQUIRE(r["coefficients"].size() == 5);
    // e^z - 1 - z = z^2/2 + z^3/6 + ...
    const std::vector<double> want{0.0, 0.0, 0.5, 1.0 / 6.0, 1.0 / 24.0};
    for (std::size_t n = 0; n < want.size(); ++n) {
        const Complex a = complex_from_json(r["coefficients"][n]);
        CHECK(std::abs(a - want[n]) <= 1e-15);
    }
}

TEST_CASE("zeros on the fixture disk") {
    RunManifest m;
    m.command = Command::zeros;
    const Json r = execute(m, test::load_fixture("exp_z_minus_1_minus_z"));
    CHECK(r["count"] == 2);
    CHECK(r["agreed"] == true);
}

TEST_CASE("exit statuses") {
    std::ostringstream err;
    CHECK(run(manifest(Command::rolle, "exp_z_minus_1_minus_z", "out.txt"), err) == exit_usage);

    RunManifest missing = manifest(Command::rolle, "exp_z_minus_1_minus_z", "out.json");
    missing.input_path = scratch("does_not_exist.json");
    std::filesystem::remove(missing.input_path);
    CHECK(run(missing, err) == exit_io);

    const auto bad = scratch("bad.json");
    std::ofstream(bad) << "{\"m\": 2}";
    RunManifest schema = manifest(Command::rolle, "exp_z_minus_1_minus_z", "out.json");
    schema.input_path = bad;
    CHECK(run(schema, err) == exit_schema);

    const auto garbage = scratch("garbage.json");
    std::ofstream(garbage) << "not json";
    schema.input_path = garbage;
    CHECK(run(schema, err) == exit_schema);

    // Cartan with R beyond the admissible radius is a numeric/domain failure.
    RunManifest numeric = manifest(Command::cartan, "z_exp_z", "out.json");
    numeric.R = 5.0;
    CHECK(run(numeric, err) == exit_numeric);

    CHECK(run(manifest(Command::rolle, "exp_z_minus_1_minus_z", "ok.json"), err) == exit_ok);
    CHECK(Json::parse(slurp(scratch("ok.json")))["satisfied"] == true);
}

TEST_CASE("sweep output is byte-identical across runs and worker counts") {
    RunManifest m = manifest(Command::sweep, "sweep_z2_exp_z", "sweep_a.json");
    m.samples = 40;
    m.workers = 1;
    std::ostringstream err;
    REQUIRE(run(m, err) == exit_ok);
    m.output_path = scratch("sweep_b.json");
    m.workers = 3;
    REQUIRE(run(m, err) == exit_ok);
    const std::string a = slurp(scratch("sweep_a.json"));
    CHECK(a == slurp(scratch("sweep_b.json")));
    const Json doc = Json::parse(a);
    CHECK(doc["report"]["records"].size() == 40);
    CHECK(doc["config"]["workers"] == 1);
}

TEST_CASE("CSV rendering") {
    RunManifest m = manifest(Command::sweep, "sweep_z2_exp_z", "sweep.csv");
    m.samples = 10;
    std::ostringstream err;
    REQUIRE(run(m, err) == exit_ok);
    std::istringstream csv(slurp(m.output_path));
    std::string line;
    std::getline(csv, line);
    CHECK(line == "index,hash,status,count,residual");
    std::size_t rows = 0;
    while (std::getline(csv, line)) ++rows;
    CHECK(rows == 10);

    RunManifest c = manifest(Command::coeffs, "exp_z", "coeffs.csv");
    c.max_n = 3;
    REQUIRE(run(c, err) == exit_ok);
    CHECK(slurp(c.output_path).rfind("n,re,im\n0,1", 0) == 0);

    RunManifest r = manifest(Command::rolle, "exp_z_minus_1_minus_z", "rolle.csv");
    REQUIRE(run(r, err) == exit_ok);
    const std::string text = slurp(r.output_path);
    CHECK(text.rfind("key,value\n", 0) == 0);
    CHECK(text.find("ord_sum,2") != std::string::npos);
}

TEST_CASE("every fixture with a command runs cleanly") {
    const std::vector<std::pair<Command, std::string>> runs{
        {Command::cartan, "cartan_m2p1q1"},
        {Command::remez, "remez_exp_z_minus_1_minus_z"},
        {Command::remez, "remez_classical_linear"},
        {Command::remez, "remez_classical_chebyshev3"},
        {Command::frobenius, "frobenius_hand_chain"},
        {Command::frobenius, "frobenius_random_combination"},
        {Command::zeros, "z2_minus_quarter"},
    };
    for (const auto& [c, name] : runs) {
        INFO(name);
        std::ostringstream err;
        CHECK(run(manifest(c, name, name + ".json"), err) == exit_ok);
        CHECK(err.str().empty());
    }
}

}  // TEST_SUITE
