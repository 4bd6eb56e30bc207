#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "casim/batch.hpp"
#include "casim/config.hpp"

int main(int argc, char** argv) {
    CLI::App app{"CAS spoofing-attack simulator"};
    app.require_subcommand(1);

    std::string config_path;
    uint64_t seed = 0;
    bool seed_set = false;
    int workers = 0;
    app.add_option("--config", config_path, "JSON configuration file");
    app.add_option("--seed", seed, "override the configured RNG seed")
        ->each([&](const std::string&) { seed_set = true; });
    app.add_option("--workers", workers, "override the configured worker count");

    std::vector<std::string> inputs;
    std::string out_dir = ".";
    std::string out_csv = "heatmap.csv";
    std::string traj_dir;
    std::string result_dir;

    auto* clean = app.add_subcommand("clean", "ingest and clean state-vector CSVs");
    clean->add_option("inputs", inputs, "input CSV files")->required();
    clean->add_option("-o,--out", out_dir, "output directory");

    auto* optimize = app.add_subcommand("optimize", "optimize attacks per trajectory");
    optimize->add_option("--trajectories", traj_dir, "directory of cleaned trajectory CSVs")
        ->required();
    optimize->add_option("-o,--out", out_dir, "output directory");

    auto* heatmap = app.add_subcommand("heatmap", "grid-attacker vulnerability map");
    heatmap->add_option("--trajectories", traj_dir, "directory of cleaned trajectory CSVs")
        ->required();
    heatmap->add_option("-o,--out", out_csv, "output CSV path");

    auto* report = app.add_subcommand("report", "aggregate stored optimization results");
    report->add_option("--results", result_dir, "directory of .result.json files")
        ->required();
    report->add_option("-o,--out", out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        casim::config::ExperimentConfig cfg;
        if (!config_path.empty()) cfg = casim::config::load(config_path);
        if (seed_set) cfg.seed = seed;
        if (workers > 0) cfg.workers = workers;

        if (clean->parsed())
            return casim::batch::cmd_clean(inputs, cfg, out_dir);
        if (optimize->parsed())
            return casim::batch::cmd_optimize(
                casim::batch::list_files(traj_dir, ".csv"), cfg, out_dir);
        if (heatmap->parsed())
            return casim::batch::cmd_heatmap(
                casim::batch::list_files(traj_dir, ".csv"), cfg, out_csv);
        if (report->parsed())
            return casim::batch::cmd_report(
                casim::batch::list_files(result_dir, ".json"), cfg, out_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
