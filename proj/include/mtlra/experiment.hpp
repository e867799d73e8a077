// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "mtlra/benchmarks.hpp"

namespace mtlra {

// One experiment: task roster, schemes to compare, architecture, training
// hyperparameters, dataset sizing and Monte Carlo repetition count.
struct ExperimentConfig {
  std::uint64_t seed = 1;
  int repetitions = 1;
  int jobs = 1;
  std::filesystem::path out_dir = "out";
  std::vector<SchemeKind> schemes;
  int samples_per_task = 1000;  // D
  double train_fraction = 0.75;
  std::vector<int> core_widths;  // {d_0..d_{L+1}}
  TrainConfig train;
  std::vector<TaskSpec> tasks;

  void validate() const;
  std::string to_json() const;
  static ExperimentConfig from_json(const std::string& text);
  static ExperimentConfig from_file(const std::filesystem::path& path);
};

struct MetricRow {
  std::string scheme;
  std::string task_kind;
  int task_id = 0;
  int n = 0;
  int repetition = 0;  // -1 marks the aggregate (mean over repetitions)
  std::string metric;
  double value = 0.0;
};

struct MetricReport {
  std::vector<MetricRow> rows;

  // report.csv columns: scheme,task_kind,N,repetition,metric,value
  // (aggregate rows carry "mean" in the repetition column).
  std::string to_csv() const;
  // Mean over repetitions for one cell; looks at aggregate rows.
  double aggregate(const std::string& scheme, int task_id,
                   const std::string& metric) const;
};

struct ExperimentResult {
  MetricReport report;
  int failed_cells = 0;
  std::filesystem::path report_path;
};

// Runs every (repetition, scheme) cell: derives seeds, generates datasets,
// trains, evaluates on the test split, and writes per-repetition artifacts,
// report.csv and per-(scheme,task) curve CSVs under cfg.out_dir. A failing
// cell is recorded and skipped; the result counts failures.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Model bundle directory: params.json, masks.json, duals.json, config.json.
void save_model_bundle(const std::filesystem::path& dir, const MtlModel& model,
                       const ExperimentConfig& cfg, std::uint64_t train_seed);
MtlModel load_model_bundle(const std::filesystem::path& dir, ExperimentConfig* cfg_out);

// Final test metrics of one model on its datasets, in report emission order.
std::vector<MetricRow> evaluate_model(const MtlModel& model,
                                      const std::vector<TaskData>& data,
                                      int repetition);

// Duals round-trip used by the bundle.
std::string duals_to_json(const DualState& duals);
DualState duals_from_json(const std::string& text);

}  // namespace mtlra
