#pragma once

#include <string>
#include <vector>

#include "casim/config.hpp"

namespace casim::batch {

// Command implementations behind the CLI; all return 0 on success.

// Full ingestion pipeline: input state-vector CSVs to per-flight
// trajectory CSVs plus a JSON-lines manifest (manifest.jsonl).
int cmd_clean(const std::vector<std::string>& input_csvs,
              const config::ExperimentConfig& cfg, const std::string& out_dir);

// Optimize every trajectory; writes <id>.result.json per trajectory plus
// aggregate.json / aggregate.csv.
int cmd_optimize(const std::vector<std::string>& traj_files,
                 const config::ExperimentConfig& cfg,
                 const std::string& out_dir);

// Grid-positioned attacker; mean best cost per cell (heatmap.csv).
int cmd_heatmap(const std::vector<std::string>& traj_files,
                const config::ExperimentConfig& cfg,
                const std::string& out_csv);

// Pure fold over stored result files: aggregate tables, RA-length and
// deviation distributions, strategy meta-statistics.
int cmd_report(const std::vector<std::string>& result_files,
               const config::ExperimentConfig& cfg,
               const std::string& out_dir);

// Files with the given extension, sorted by name.
std::vector<std::string> list_files(const std::string& dir,
                                    const std::string& extension);

// Stable per-trajectory seed derivation (FNV-1a fold of the id).
uint64_t derive_seed(uint64_t base_seed, const std::string& id);

}  // namespace casim::batch
