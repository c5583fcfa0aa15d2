// Command-line runner for the inequality laboratory: margin checks, parameter
// sweeps, verification suites, and config-driven experiment reproduction.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hardylab/experiments.hpp"
#include "hardylab/registry.hpp"
#include "hardylab/sharpness.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitAssertFail = 1;
constexpr int kExitConfigError = 2;

std::string resolve_experiment(const std::string& name) {
    static const std::map<std::string, std::string> aliases = {
        {"ball-series", "ball-constants"},
        {"strip", "strip-degenerate"},
        {"remainders", "weighted-remainders"},
        {"fem", "fem-p2"},
        {"all", "registry-all"},
    };
    auto it = aliases.find(name);
    return it == aliases.end() ? name : it->second;
}

int run_cfg(hardylab::ExperimentConfig cfg, bool quiet) {
    cfg.experiment = resolve_experiment(cfg.experiment);
    hardylab::ExperimentOutcome out = hardylab::run_experiment(cfg);
    if (!quiet) {
        std::printf("experiment %-22s checks %3d  failures %d  %s\n",
                    out.experiment.c_str(), out.checks, out.failures,
                    out.pass ? "PASS" : "FAIL");
        for (const auto& r : out.rows)
            if (!r.pass)
                std::printf("  FAIL %-28s %-16s %-14s %s\n", r.registry_id.c_str(),
                            r.domain.c_str(), r.family.c_str(), r.params.c_str());
        if (!out.csv_path.empty()) std::printf("wrote %s\n", out.csv_path.c_str());
        if (!out.json_path.empty()) std::printf("wrote %s\n", out.json_path.c_str());
    }
    return out.pass ? kExitPass : kExitAssertFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hardylab: numerical verification of sharp Hardy-type inequalities"};
    app.require_subcommand(1);

    // ---- check ----
    auto* check = app.add_subcommand("check", "evaluate one inequality margin");
    std::string check_id, check_domain = "ball", check_family = "power";
    int check_n = 2;
    double check_R = 1.0;
    std::vector<std::string> check_params;
    check->add_option("--id", check_id, "inequality id (see `list`)")->required();
    check->add_option("--domain", check_domain, "domain id");
    check->add_option("--n", check_n, "dimension");
    check->add_option("--R", check_R, "domain size (R, L or a)");
    check->add_option("--family", check_family, "profile family");
    check->add_option("--param,-P", check_params, "name=value (repeatable)");
    static const std::vector<std::string> shortcut_keys = {
        "s", "q",  "p",     "eps", "gamma", "beta", "delta", "eta",
        "width", "center", "alpha", "rV", "r", "cutoff", "a", "form"};
    std::map<std::string, double> shortcut_vals;
    for (const auto& k : shortcut_keys)
        check->add_option("--" + k, shortcut_vals[k], "shortcut for --param " + k + "=<value>");

    // ---- sweep ----
    auto* sweep = app.add_subcommand("sweep", "run a named sweep experiment");
    std::string sweep_experiment, sweep_out, sweep_json;
    std::uint64_t sweep_seed = 1;
    sweep->add_option("--experiment", sweep_experiment, "experiment id")->required();
    sweep->add_option("--out", sweep_out, "CSV output path");
    sweep->add_option("--json", sweep_json, "JSON summary path");
    sweep->add_option("--seed", sweep_seed, "random seed");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run a verification suite, exit 0/1");
    std::string verify_suite;
    std::uint64_t verify_seed = 1;
    std::string verify_out, verify_json;
    verify->add_option("--suite", verify_suite, "suite id (experiment id)")->required();
    verify->add_option("--seed", verify_seed, "random seed");
    verify->add_option("--out", verify_out, "CSV output path");
    verify->add_option("--json", verify_json, "JSON summary path");

    // ---- list ----
    auto* list = app.add_subcommand("list", "list inequality ids and experiments");

    // ---- run ----
    auto* runc = app.add_subcommand("run", "run an experiment from a config file");
    std::string run_path;
    runc->add_option("config", run_path, "config file path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitPass : kExitConfigError;
    }

    try {
        if (*check) {
            const hardylab::InequalityRecord& rec = hardylab::require_record(check_id);
            hardylab::MarginCase c;
            c.domain_id = check_domain;
            c.n = check_n;
            c.size = check_R;
            c.family = check_family;
            for (const auto& kv : check_params) {
                auto eq = kv.find('=');
                if (eq == std::string::npos)
                    throw hardylab::ConfigError("--param expects name=value, got '" + kv + "'");
                std::string key = kv.substr(0, eq);
                double val = std::stod(kv.substr(eq + 1));
                c.params[key] = val;
                c.family_params.push_back({key, val});
            }
            for (const auto& k : shortcut_keys)
                if (check->count("--" + k)) {
                    c.params[k] = shortcut_vals[k];
                    c.family_params.push_back({k, shortcut_vals[k]});
                }
            hardylab::MarginInputs in = hardylab::build_case_inputs(rec, c, {});
            hardylab::MarginResult r = hardylab::evaluate_margin(rec, in);
            std::printf("%s  [%s]\n", rec.id.c_str(), rec.anchor.c_str());
            std::printf("  %s\n", rec.statement.c_str());
            std::printf("  constants: %s\n", rec.constant_note.c_str());
            std::printf("  lhs = %.12g   rhs = %.12g\n", r.lhs.value, r.rhs.value);
            std::printf("  margin = %.12g   error bound = %.3g\n", r.margin, r.err);
            if (r.escalations > 0)
                std::printf("  escalated %s to %.6g (%d steps)\n", rec.escalate_key.c_str(),
                            r.constant_used, r.escalations);
            if (r.D_used > 0) std::printf("  log-weight scale D = %.6g\n", r.D_used);
            std::printf("  %s\n", r.pass ? "PASS (margin >= -error)" : "FAIL");
            return r.pass ? kExitPass : kExitAssertFail;
        }
        if (*sweep) {
            hardylab::ExperimentConfig cfg;
            cfg.experiment = sweep_experiment;
            cfg.out_csv = sweep_out;
            cfg.out_json = sweep_json;
            cfg.seed = sweep_seed;
            return run_cfg(cfg, false);
        }
        if (*verify) {
            hardylab::ExperimentConfig cfg;
            cfg.experiment = verify_suite;
            cfg.seed = verify_seed;
            cfg.out_csv = verify_out;
            cfg.out_json = verify_json;
            return run_cfg(cfg, false);
        }
        if (*list) {
            std::printf("registry v%d\ninequalities:\n", hardylab::kRegistryVersion);
            for (const auto& rec : hardylab::registry()) {
                std::string schema;
                if (!rec.defaults.empty()) {
                    for (const auto& [k, v] : rec.defaults.front().params) {
                        if (!schema.empty()) schema += ",";
                        schema += k;
                    }
                }
                std::printf("  %-20s %-18s params(%s)\n      %s\n", rec.id.c_str(),
                            rec.anchor.c_str(), schema.c_str(), rec.statement.c_str());
            }
            std::printf("\nsharp-constant targets:\n");
            for (const auto& t : hardylab::sharp_targets())
                std::printf("  %-26s %-20s %-14s -> %s (tol %g)\n", t.id.c_str(),
                            t.anchor.c_str(), t.model.c_str(), t.formula.c_str(),
                            t.tolerance);
            std::printf("\nexperiments:\n");
            for (const auto& id : hardylab::experiment_ids()) std::printf("  %s\n", id.c_str());
            return kExitPass;
        }
        if (*runc) {
            hardylab::ExperimentConfig cfg = hardylab::parse_config_file(run_path);
            return run_cfg(cfg, false);
        }
    } catch (const hardylab::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfigError;
    } catch (const hardylab::RegistryError& e) {
        std::fprintf(stderr, "registry error: %s\n", e.what());
        return kExitConfigError;
    } catch (const hardylab::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitAssertFail;
    }
    return kExitConfigError;
}
