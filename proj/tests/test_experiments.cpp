#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"

#include "hardylab/experiments.hpp"

using namespace hardylab;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() /
              ("hardylab-test-" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~TempDir() { std::error_code ec; fs::remove_all(dir, ec); }
};

} // namespace

TEST_CASE("config text round-trips losslessly") {
    ExperimentConfig cfg;
    cfg.experiment = "ball-constants";
    cfg.out_csv = "ball.csv";
    cfg.out_json = "ball.json";
    cfg.seed = 42;
    cfg.workers = 3;
    cfg.rel_tol = 1e-10;
    cfg.overrides = {{"samples", 500.0}, {"a1_samples", 100.0}};
    ExperimentConfig back = parse_config_text(serialize_config(cfg));
    CHECK(back == cfg);
}

TEST_CASE("config parser reports precise errors") {
    CHECK_THROWS_AS(parse_config_text("x = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[experiment]\nid = \"appendix\"\nbogus = 3\n"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config_text("[weird]\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[experiment]\nseed = 1\n"), ConfigError);
    ExperimentConfig ok = parse_config_text(
        "# comment\n[experiment]\nid = \"appendix\"\nseed = 7\n\n[overrides]\nn = 2\n");
    CHECK(ok.experiment == "appendix");
    CHECK(ok.seed == 7);
    CHECK(ok.overrides.at("n") == 2.0);
}

TEST_CASE("unknown experiment ids list the valid ones") {
    ExperimentConfig cfg;
    cfg.experiment = "nonsense";
    try {
        run_experiment(cfg);
        CHECK(false);
    } catch (const ConfigError& e) {
        std::string msg = e.what();
        CHECK(msg.find("registry-all") != std::string::npos);
        CHECK(msg.find("appendix") != std::string::npos);
    }
}

TEST_CASE("identical config and seed give byte-identical outputs") {
    ExperimentConfig cfg;
    cfg.experiment = "registry-all";
    cfg.seed = 9;
    ExperimentOutcome a = run_experiment(cfg);
    ExperimentOutcome b = run_experiment(cfg);
    CHECK(csv_to_string(a.rows) == csv_to_string(b.rows));
    // a different worker count must not change the bytes either
    cfg.workers = 1;
    ExperimentOutcome c = run_experiment(cfg);
    CHECK(csv_to_string(a.rows) == csv_to_string(c.rows));
}

TEST_CASE("seeded random suites are reproducible") {
    ExperimentConfig cfg;
    cfg.experiment = "appendix";
    cfg.seed = 4;
    cfg.overrides = {{"a1_samples", 200.0}, {"a2_samples", 2000.0}};
    ExperimentOutcome a = run_experiment(cfg);
    ExperimentOutcome b = run_experiment(cfg);
    CHECK(csv_to_string(a.rows) == csv_to_string(b.rows));
    CHECK(a.pass);
}

TEST_CASE("CSV columns are fixed and files are written") {
    TempDir tmp;
    ExperimentConfig cfg;
    cfg.experiment = "fem-p2";
    cfg.out_csv = (tmp.dir / "fem.csv").string();
    cfg.out_json = (tmp.dir / "fem.json").string();
    ExperimentOutcome out = run_experiment(cfg);
    CHECK(out.pass);
    std::string csv = slurp(cfg.out_csv);
    CHECK(csv.rfind("experiment_id,registry_id,domain,family,params,lhs,rhs,margin,"
                    "quadrature_error,target,fitted_limit,fit_residual,pass\n",
                    0) == 0);
    auto j = nlohmann::json::parse(slurp(cfg.out_json));
    CHECK(j["experiment"] == "fem-p2");
    CHECK(j["pass"] == true);
    CHECK(j["cases"].size() == out.rows.size());
    CHECK(j["cases"][0].contains("anchor"));
}

TEST_CASE("json summaries flag failing anchors") {
    TempDir tmp;
    ExperimentConfig cfg;
    cfg.experiment = "ball-constants";
    cfg.out_json = (tmp.dir / "b.json").string();
    ExperimentOutcome out = run_experiment(cfg);
    auto j = nlohmann::json::parse(slurp(cfg.out_json));
    int json_failures = 0;
    for (const auto& c : j["cases"])
        if (c["pass"] == false) ++json_failures;
    CHECK(json_failures == out.failures);
}
