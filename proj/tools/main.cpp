// Command-line front end: planning, simulation, experiment sweeps, the exact
// reference search and config validation.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "uuvplan/harness.hpp"

using namespace uuvplan;

namespace {

struct CommonOpts {
    std::string config_file;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_dir;
    std::string format = "csv";
    std::optional<double> dt;
    std::optional<std::string> variant;
    int dims = 2;
    bool serial = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_dims = true) {
    cmd->add_option("--config", opts.config_file, "Scenario config file (JSON)");
    cmd->add_option("--seed", opts.seed, "Override the random-map seed");
    cmd->add_option("--out-dir", opts.out_dir, "Output directory");
    cmd->add_option("--format", opts.format, "Table/record format: csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--dt", opts.dt, "Integration step (s)");
    cmd->add_option("--variant", opts.variant, "Algorithm: bnnp|cbnnp|both")
        ->check(CLI::IsMember({"bnnp", "cbnnp", "both"}));
    if (with_dims)
        cmd->add_option("--dim", opts.dims, "Dimensionality for default scenarios (2|3)")
            ->check(CLI::IsMember({2, 3}));
    cmd->add_flag("--serial", opts.serial, "Disable the OpenMP batch runner");
}

ScenarioConfig load_config(const CommonOpts& opts) {
    ScenarioConfig cfg = opts.config_file.empty()
                             ? ScenarioConfig::defaults(opts.dims)
                             : ScenarioConfig::from_json_file(opts.config_file);
    if (opts.seed) cfg.map.seed = *opts.seed;
    if (opts.out_dir) cfg.out_dir = *opts.out_dir;
    if (opts.dt) cfg.sim.dt = *opts.dt;
    if (opts.variant) {
        if (*opts.variant == "bnnp")
            cfg.variant = VariantChoice::bnnp;
        else if (*opts.variant == "cbnnp")
            cfg.variant = VariantChoice::cbnnp;
        else
            cfg.variant = VariantChoice::both;
    }
    cfg.validate();
    return cfg;
}

void print_waypoints(const PlanPath& plan) {
    for (const Cell& w : plan.waypoints) std::printf("%s\n", w.str().c_str());
}

int cmd_plan(const CommonOpts& opts) {
    const ScenarioConfig cfg = load_config(opts);
    const GridMap map = cfg.map.build({cfg.origin, cfg.destination});
    const PlanPath plan = plan_bnnp(map, cfg.origin, cfg.destination, cfg.gain);
    const char* status = plan.status == PlanStatus::reached   ? "reached"
                         : plan.status == PlanStatus::trapped ? "trapped"
                                                              : "step_limit";
    std::printf("status: %s\nwaypoints (%zu):\n", status, plan.waypoints.size());
    print_waypoints(plan);
    if (plan.waypoints.size() >= 2) std::printf("length: %.4f m\n", plan.length());
    return plan.reached() ? 0 : 2;
}

int cmd_simulate(const CommonOpts& opts) {
    const ScenarioConfig cfg = load_config(opts);
    const ScenarioResult result = run_scenario(cfg);
    std::printf("%s", records_to_csv(result.records, true).c_str());
    std::printf("trajectories written to %s/\n", cfg.out_dir.c_str());
    return 0;
}

int cmd_sweep(const std::string& name, const CommonOpts& opts) {
    const ScenarioConfig loaded = load_config(opts);
    // Sweep conditions (map, endpoints, currents) are pinned by the sweep
    // itself; dimension-agnostic knobs follow the user's config.
    const auto base_for = [&](int dims) {
        ScenarioConfig b = ScenarioConfig::defaults(dims);
        b.gain = loaded.gain;
        b.desired_speed = loaded.desired_speed;
        b.sim = loaded.sim;
        b.out_dir = loaded.out_dir;
        b.ratio_sweep_seeds = loaded.ratio_sweep_seeds;
        return b;
    };
    const ScenarioConfig base = base_for(2);
    const ExecMode mode = opts.serial ? ExecMode::serial : ExecMode::parallel;
    std::filesystem::create_directories(base.out_dir);
    const std::string stem = base.out_dir + "/" + name;

    auto write_table = [&](const SweepOutput& out) {
        if (opts.format == "json") {
            write_text_file(stem + ".table.json", out.table.to_json_text());
            write_text_file(stem + ".records.json", records_to_json_text(out.records));
        } else {
            write_text_file(stem + ".table.csv", out.table.to_csv());
            write_text_file(stem + ".records.csv", records_to_csv(out.records));
        }
        std::printf("%s", out.table.to_csv().c_str());
    };

    if (name == "directions2d") {
        write_table(sweep_directions_2d(base_for(2), mode));
    } else if (name == "speeds2d") {
        write_table(sweep_speeds(base_for(2), 2, mode));
    } else if (name == "speeds3d") {
        write_table(sweep_speeds(base_for(3), 3, mode));
    } else if (name == "directions3d") {
        write_table(sweep_directions_3d(base_for(3), mode));
    } else if (name == "ratio") {
        const RatioSweepOutput out = sweep_obstacle_ratio(base, mode);
        write_text_file(stem + ".summary.csv", out.summary_csv());
        if (opts.format == "json")
            write_text_file(stem + ".records.json", records_to_json_text(out.records));
        else
            write_text_file(stem + ".records.csv", records_to_csv(out.records));
        std::printf("%s", out.summary_csv().c_str());
    } else if (name == "dynamic") {
        const auto results = dynamic_current_demo(base);
        const ScenarioResult& r = results[0];
        for (std::size_t i = 0; i < r.records.size(); ++i) {
            const std::string path = stem + "_" + to_string(r.records[i].variant) +
                                     ".trajectory.csv";
            write_text_file(path,
                            trajectory_to_csv(r.trajectories[i], r.records[i].variant,
                                              r.config.dims()));
        }
        if (opts.format == "json")
            write_text_file(stem + ".records.json", records_to_json_text(r.records));
        else
            write_text_file(stem + ".records.csv", records_to_csv(r.records));
        std::printf("%s", records_to_csv(r.records).c_str());
    } else {
        std::fprintf(stderr, "unknown sweep: %s\n", name.c_str());
        return 1;
    }
    std::printf("outputs written under %s/\n", base.out_dir.c_str());
    return 0;
}

int cmd_oracle(const CommonOpts& opts) {
    const ScenarioConfig cfg = load_config(opts);
    const GridMap map = cfg.map.build({cfg.origin, cfg.destination});
    const OracleResult result = shortest_path(map, cfg.origin, cfg.destination);
    if (!result.reachable()) {
        std::printf("unreachable\n");
        return 2;
    }
    std::printf("length: %.4f m\nwaypoints (%zu):\n", result.length, result.path.size());
    for (const Cell& w : result.path) std::printf("%s\n", w.str().c_str());
    return 0;
}

int cmd_validate(const CommonOpts& opts) {
    if (opts.config_file.empty()) {
        std::fprintf(stderr, "validate-config requires --config\n");
        return 1;
    }
    ScenarioConfig::from_json_file(opts.config_file);
    std::printf("%s: OK\n", opts.config_file.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grid path planning and current-compensated trajectory simulation "
                 "for unmanned underwater vehicles"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string sweep_name;

    CLI::App* plan = app.add_subcommand("plan", "Plan one path and print waypoints");
    add_common(plan, opts);
    CLI::App* simulate =
        app.add_subcommand("simulate", "Run one scenario and write trajectory CSVs");
    add_common(simulate, opts);
    CLI::App* sweep = app.add_subcommand("sweep", "Run a named experiment sweep");
    sweep
        ->add_option("name", sweep_name,
                     "directions2d|speeds2d|speeds3d|directions3d|ratio|dynamic")
        ->required()
        ->check(CLI::IsMember({"directions2d", "speeds2d", "speeds3d", "directions3d",
                               "ratio", "dynamic"}));
    add_common(sweep, opts);
    CLI::App* oracle =
        app.add_subcommand("oracle", "Exact reference shortest path for a scenario");
    add_common(oracle, opts);
    CLI::App* validate =
        app.add_subcommand("validate-config", "Parse and validate a config file");
    add_common(validate, opts, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (plan->parsed()) return cmd_plan(opts);
        if (simulate->parsed()) return cmd_simulate(opts);
        if (sweep->parsed()) return cmd_sweep(sweep_name, opts);
        if (oracle->parsed()) return cmd_oracle(opts);
        if (validate->parsed()) return cmd_validate(opts);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
