// End-to-end checks of the command-line tool. The binary path comes from the
// ISOSPEC_CLI environment variable (set by ctest); without it the suite warns
// and backs off so the test binary stays runnable on its own.
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "isospec/catalog.hpp"
#include "isospec/serialize.hpp"

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

const char* cli_path() { return std::getenv("ISOSPEC_CLI"); }

RunResult run_cli(const std::string& args) {
    const fs::path out = fs::temp_directory_path() / "isospec_cli_stdout.txt";
    const std::string command = std::string(cli_path()) + " " + args + " > " + out.string() + " 2>/dev/null";
    const int raw = std::system(command.c_str());
    RunResult result;
    result.exit_code = WEXITSTATUS(raw);
    std::ifstream in(out);
    std::stringstream buf;
    buf << in.rdbuf();
    result.stdout_text = buf.str();
    return result;
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("certify distinguishes the explicit pair") {
    if (!cli_path()) {
        MESSAGE("ISOSPEC_CLI not set; skipping CLI tests");
        return;
    }
    const RunResult r = run_cli("certify --catalog ex4.3@t=0 --catalog2 ex4.3@t=0.25");
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.stdout_text);
    CHECK(report["schema"] == "isospec/1");
    CHECK(report["isospectral"] == true);
    CHECK(report["nonisometry"] == "DistinctCriticalValues");
    CHECK(report["heat"]["verdict"] == "NotOneFormIsospectral");
    CHECK(report["heat"]["delta_ric_norm_sq"].get<double>() == doctest::Approx(0.1875));
}

TEST_CASE("certify of a pencil against itself is inconclusive") {
    if (!cli_path()) return;
    const RunResult r = run_cli("certify --catalog lemma4.2 --catalog2 lemma4.2");
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.stdout_text);
    CHECK(report["isospectral"] == true);
    CHECK(report["nonisometry"] == "Inconclusive");
    CHECK(report["heat"]["verdict"] == "Undetermined");
}

TEST_CASE("certify reports non-isospectral pairs with exit 0") {
    if (!cli_path()) return;
    const RunResult r = run_cli("certify --catalog ex4.3@t=0 --catalog2 lemma4.2");
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.stdout_text);
    CHECK(report["isospectral"] == false);
    CHECK(report["nonisometry"].is_null());
    CHECK(report["heat"].is_null());
}

TEST_CASE("certify accepts file input") {
    if (!cli_path()) return;
    const fs::path dir = fresh_dir("isospec_cli_files");
    const fs::path file = dir / "pencil.json";
    std::ofstream(file) << isospec::to_json(isospec::catalog::make_ex43(0.25));
    const RunResult r =
        run_cli("certify --catalog ex4.3@t=0 --input2 " + file.string());
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.stdout_text)["isospectral"] == true);
}

TEST_CASE("flow writes the trajectory artifacts") {
    if (!cli_path()) return;
    const fs::path dir = fresh_dir("isospec_cli_flow");
    const RunResult r =
        run_cli("flow --catalog lemma4.2 --t-end 0.05 --dt 1e-3 --out " + dir.string());
    REQUIRE(r.exit_code == 0);

    const std::string csv = slurp(dir / "trajectory.csv");
    CHECK(csv.rfind("t,q,ric_norm_sq,max_drift\n", 0) == 0);

    const json summary = json::parse(slurp(dir / "flow_summary.json"));
    CHECK(summary["generic"] == true);
    CHECK(summary["degraded"] == false);
    CHECK(summary["max_drift"].get<double>() <= 1e-8);
    CHECK(summary["states"] == 51);
    CHECK(summary["method"] == "RK4");
}

TEST_CASE("flow state dumps are loadable pencils") {
    if (!cli_path()) return;
    const fs::path dir = fresh_dir("isospec_cli_states");
    const RunResult r = run_cli("flow --catalog lemma4.2 --t-end 0.01 --dt 5e-3 --dump-states --out " +
                                dir.string());
    REQUIRE(r.exit_code == 0);
    CHECK(fs::exists(dir / "state_00000.json"));
    CHECK(fs::exists(dir / "state_00002.json"));
    const isospec::SkewPencil back = isospec::pencil_from_json(slurp(dir / "state_00002.json"));
    CHECK(back.dim() == 5);
}

TEST_CASE("flow rejects bad configuration with exit 2") {
    if (!cli_path()) return;
    CHECK(run_cli("flow --catalog lemma4.2 --dt 0").exit_code == 2);
    CHECK(run_cli("flow --catalog lemma4.2 --dt -1e-3").exit_code == 2);
    CHECK(run_cli("flow --catalog nosuch").exit_code == 2);
    CHECK(run_cli("flow").exit_code == 2);
    CHECK(run_cli("certify --catalog lemma4.2").exit_code == 2);
    CHECK(run_cli("report --catalog lemma4.2 --base unknown-preset").exit_code == 2);
    CHECK(run_cli("report --catalog ex4.3@t=99").exit_code == 2);
    CHECK(run_cli("report --catalog ex4.3@x=1").exit_code == 2);
    CHECK(run_cli("report --catalog lemma4.2@t=1").exit_code == 2);
    CHECK(run_cli("report --catalog lemma4.2 --samples 10").exit_code == 2);
}

TEST_CASE("divergent flows exit with code 3") {
    if (!cli_path()) return;
    const fs::path dir = fresh_dir("isospec_cli_diverge");
    const fs::path file = dir / "big.json";
    const isospec::SkewPencil j = isospec::catalog::make_lemma42();
    std::ofstream(file) << isospec::to_json(isospec::SkewPencil(50.0 * j[0], 50.0 * j[1]));
    const RunResult r = run_cli("flow --input " + file.string() + " --t-end 10 --dt 0.1");
    CHECK(r.exit_code == 3);
}

TEST_CASE("report carries the curvature headline values") {
    if (!cli_path()) return;
    const RunResult r = run_cli("report --catalog ex4.3@t=0");
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.stdout_text);
    CHECK(report["curvature"]["scal_g"].get<double>() == doctest::Approx(-2.5));
    CHECK(report["curvature"]["ric_v_norm_sq"].get<double>() == doctest::Approx(6.5));
    CHECK(report["c_ric_quadrature"].is_null());

    const RunResult zero = run_cli("report --catalog ex2.5@t=0");
    REQUIRE(zero.exit_code == 0);
}

TEST_CASE("report quadrature records seed and samples") {
    if (!cli_path()) return;
    const RunResult r = run_cli("report --catalog ex4.3@t=0 --samples 10000 --seed 3");
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.stdout_text);
    CHECK(report["c_ric_quadrature"]["samples"] == 10000);
    CHECK(report["c_ric_quadrature"]["seed"] == 3);
    CHECK(report["c_ric_quadrature"]["value"].get<double>() > 0.0);
}

TEST_CASE("identical configurations produce byte-identical artifacts") {
    if (!cli_path()) return;
    const fs::path dir_a = fresh_dir("isospec_cli_det_a");
    const fs::path dir_b = fresh_dir("isospec_cli_det_b");
    const std::string args = "report --catalog ex4.3@t=0.1 --samples 10000 --seed 17 --out ";
    REQUIRE(run_cli(args + dir_a.string()).exit_code == 0);
    REQUIRE(run_cli(args + dir_b.string()).exit_code == 0);
    CHECK(slurp(dir_a / "report.json") == slurp(dir_b / "report.json"));
    CHECK_FALSE(slurp(dir_a / "report.json").empty());
}

} // TEST_SUITE
