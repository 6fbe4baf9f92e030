#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rcarlab/cli.hpp"

using namespace rcarlab;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
    std::ifstream file(path, std::ios::binary);
    REQUIRE(file.good());
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

int run(const std::string& config, const std::string& out_dir) {
    cli::Overrides overrides;
    overrides.out = out_dir;
    return cli::run_config_text(config, overrides);
}

}  // namespace

TEST_CASE("config errors exit with code 3") {
    CHECK(run("not json at all", "/tmp/rcarlab-test-badjson") == cli::kExitConfigError);
    CHECK(run(R"({"command":"nope"})", "/tmp/rcarlab-test-badcmd") == cli::kExitConfigError);
    CHECK(run(R"({"command":"simulate-panel"})", "/tmp/rcarlab-test-nopanel") ==
          cli::kExitConfigError);
    // range violations are caught before any work starts
    CHECK(run(R"({"command":"simulate-panel","replicates":2,
                 "innovation":{"flavor":"exact-stable","alpha":2.5,"c1":1,"c2":1},
                 "mixing":{"beta":1.5},
                 "panel":{"N":4,"n":8,"taus":[1.0]}})",
              "/tmp/rcarlab-test-badalpha") == cli::kExitConfigError);
    CHECK(run(R"({"command":"verify-regime","replicates":10,"tolerance":0.5,
                 "innovation":{"flavor":"exact-stable","alpha":1.2,"c1":1,"c2":1},
                 "mixing":{"beta":1.2},
                 "panel":{"N":16,"n":16,"taus":[1.0]}})",
              "/tmp/rcarlab-test-boundary") == cli::kExitConfigError);
}

TEST_CASE("regime-table emits one row per grid point") {
    TempDir dir("rcarlab-test-table");
    const std::string config = R"({
        "command": "regime-table",
        "seed": 7,
        "grid": {"alphas": [0.5, 1.5, 2.0], "betas": [0.5, 1.2, 2.5], "N": 1000, "n": 100}
    })";
    CHECK(run(config, dir.path.string()) == cli::kExitOk);
    const std::string table = slurp(dir.path / "regime_table.csv");
    // header comment + csv header + 9 rows
    CHECK(std::count(table.begin(), table.end(), '\n') == 11);
    CHECK(table.find("alpha-stable") != std::string::npos);
    // row (1.5, 2.5): short memory, alpha-stable
    CHECK(table.find("1.5,2.5,1000,100,III_short_memory") != std::string::npos);
    const std::string manifest = slurp(dir.path / "manifest.json");
    CHECK(manifest.find("config_hash") != std::string::npos);
}

TEST_CASE("limit-cf at theta = 0 emits exactly 1") {
    TempDir dir("rcarlab-test-cf");
    const std::string config = R"({
        "command": "limit-cf",
        "innovation": {"flavor": "exact-stable", "alpha": 1.5, "c1": 0.5, "c2": 0.5},
        "limit_cf": {"family": "V", "beta": 0.5, "psi1": 1.0, "taus": [1.0]},
        "thetas": {"min": -1.0, "max": 1.0, "count": 3}
    })";
    CHECK(run(config, dir.path.string()) == cli::kExitOk);
    const std::string cf = slurp(dir.path / "cf.csv");
    CHECK(cf.find("V,1,0,1,0\n") != std::string::npos);
}

TEST_CASE("verify-regime passes on an easy desk-scale case and reproduces bytes") {
    const std::string config = R"({
        "command": "verify-regime",
        "seed": 20260301,
        "replicates": 400,
        "tolerance": 0.12,
        "innovation": {"flavor": "gaussian", "variance": 1.0},
        "mixing": {"beta": 2.5},
        "panel": {"N": 64, "n": 64, "taus": [1.0]},
        "thetas": {"min": -3.0, "max": 3.0, "count": 31}
    })";
    TempDir dir_a("rcarlab-test-verify-a");
    TempDir dir_b("rcarlab-test-verify-b");
    CHECK(run(config, dir_a.path.string()) == cli::kExitOk);
    CHECK(run(config, dir_b.path.string()) == cli::kExitOk);
    for (const char* name : {"verify.csv", "distances.csv"}) {
        CHECK(slurp(dir_a.path / name) == slurp(dir_b.path / name));
        CHECK(slurp(dir_a.path / name).find("# config=") == 0);
    }
}

TEST_CASE("verify-regime reports distance failures with exit code 2") {
    // Deliberately compare against the wrong tolerance: tiny sample, strict
    // tolerance cannot hold.
    const std::string config = R"({
        "command": "verify-regime",
        "seed": 3,
        "replicates": 16,
        "tolerance": 0.001,
        "innovation": {"flavor": "gaussian", "variance": 1.0},
        "mixing": {"beta": 2.5},
        "panel": {"N": 8, "n": 8, "taus": [1.0]},
        "thetas": {"min": -3.0, "max": 3.0, "count": 11}
    })";
    TempDir dir("rcarlab-test-verify-fail");
    CHECK(run(config, dir.path.string()) == cli::kExitVerifyFailed);
}

TEST_CASE("simulate-z writes trajectories") {
    const std::string config = R"({
        "command": "simulate-z",
        "seed": 11,
        "replicates": 5,
        "innovation": {"flavor": "exact-stable", "alpha": 1.5, "c1": 0.5, "c2": 0.5},
        "z": {"alpha": 1.5, "beta": 0.5, "psi1": 1.0, "tau_grid": [0.5, 1.0],
               "x_min": 1e-4, "x_max": 50.0, "dt": 0.02}
    })";
    TempDir dir("rcarlab-test-z");
    CHECK(run(config, dir.path.string()) == cli::kExitOk);
    const std::string z = slurp(dir.path / "z.csv");
    CHECK(std::count(z.begin(), z.end(), '\n') == 12); // comment + header + 10 rows
}
