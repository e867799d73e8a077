// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mtlra/matrix.hpp"
#include "mtlra/rng.hpp"

namespace mtlra {

enum class TaskKind { Supervised, Unsupervised };

inline const char* to_string(TaskKind k) {
  return k == TaskKind::Supervised ? "supervised" : "unsupervised";
}

// One optimization task: delay minimization (supervised, labels from the
// convex solver) or average sum-capacity maximization (unsupervised).
struct TaskSpec {
  int id = 0;               // 1..K
  TaskKind kind = TaskKind::Supervised;
  int dim = 0;              // N_i: number of frequency bands / channels
  double beta = 0.0;        // loss weight, sum over tasks = 1
  int batch = 32;           // B_i

  double p_tot = 0.0;       // watts; softmax/sigmoid output scale
  // Supervised (delay) physicals.
  double bandwidth_hz = 0.0;    // W
  double noise_psd_w_hz = 0.0;  // N0 in W/Hz
  double load_bits = 0.0;       // L_n, identical across bands
  // Unsupervised (capacity) physicals.
  double p_av = 0.0;        // watts

  double noise_power_w() const { return noise_psd_w_hz * bandwidth_hz; }
};

enum class Split { Train, Test };

// Channel gains (unit-mean exponential, what the networks consume) plus, for
// supervised tasks, per-row optimal allocations stored as fractions of p_tot.
struct Dataset {
  int task_id = 0;
  Split split = Split::Train;
  Matrix features;                 // rows x N_i
  std::optional<Matrix> labels;    // rows x N_i, fractions in [0,1], row-sum 1

  int rows() const { return features.rows(); }
  int dim() const { return features.cols(); }
};

struct TaskData {
  Dataset train;
  Dataset test;
};

// Non-negative dual variables, one per constraint per unsupervised task
// (the capacity problem has a single average-power constraint).
struct DualState {
  std::map<int, std::vector<double>> lambda;  // task id -> per-constraint values

  double& scalar(int task_id);
  double scalar(int task_id) const;
  bool all_nonnegative() const;
};

// Unit-mean exponential power gains (|h|^2 of unit-variance Rayleigh fading).
Matrix gen_channels(int dim, int count, RngStream& rng);

// Mean transmission delay in seconds over N bands:
//   (1/N) sum_n load_bits / (bandwidth * log2(1 + p[n] * g[n]))
// g must already be noise-normalized (|h|^2 / (N0 * W)).
double delay_objective(const Vec& p, const Vec& g, double load_bits, double bandwidth_hz);

// KKT solution of the delay-minimization problem: nested bisection, outer on
// the budget multiplier, inner per-band Newton on the marginal-delay
// equation. Budget binds: sum(p) = p_tot within tol, marginals equalized.
Vec solve_delay_min(const Vec& g, double load_bits, double bandwidth_hz,
                    double p_tot, double tol);

// Marginal delay decrease for one band at power p (the quantity the solver
// equalizes across bands). Exposed for tests.
double delay_marginal(double p, double g, double load_bits, double bandwidth_hz);

// Instantaneous sum capacity log2(1 + sum_n g[n] * p[n]) in bits/s/Hz.
double capacity_objective(const Vec& p, const Vec& g);

// Mean over batch rows of (total power - p_av); may be negative.
double avg_power_gap(const std::vector<Vec>& p_batch, double p_av);
double avg_power_gap(const Matrix& p_batch, double p_av);

// Near-optimal reference policy for the capacity problem: per sample, load
// only the strongest band with p = clamp(1/(lambda ln2) - 1/g*, 0, p_tot);
// lambda bisected until the mean total power hits p_av.
struct UlReferenceResult {
  double mean_capacity = 0.0;  // bits/s/Hz
  double mean_power = 0.0;     // watts
  double lambda = 0.0;
};
UlReferenceResult ul_reference_policy(const Matrix& gains, double p_av,
                                      double p_tot, double tol);

// Datasets for every task: features from per-row derived streams
// (seed, task id, row), labels from solve_delay_min for supervised tasks.
// rows_per_task is D; the first round(D * train_fraction) rows form the
// train split. jobs > 1 parallelizes the label solves (bit-identical output).
std::vector<TaskData> build_datasets(const std::vector<TaskSpec>& specs,
                                     int rows_per_task, double train_fraction,
                                     std::uint64_t seed, int jobs = 1);

// Dataset directory layout: <dir>/task_XX/{manifest.json, features.csv[, labels.csv]}
void save_datasets(const std::filesystem::path& dir, const std::vector<TaskSpec>& specs,
                   const std::vector<TaskData>& data, std::uint64_t seed);
std::vector<TaskData> load_datasets(const std::filesystem::path& dir,
                                    const std::vector<TaskSpec>& specs);

}  // namespace mtlra
