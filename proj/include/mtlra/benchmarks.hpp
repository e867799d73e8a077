// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "mtlra/train.hpp"

namespace mtlra {

// Architecture summary of one comparison scheme, including the trainable
// parameter count (base network; the router is reported separately since it
// is frozen and discarded after hardening).
struct SchemeSpec {
  SchemeKind scheme = SchemeKind::Proposed;
  std::vector<int> widths;
  std::size_t base_parameters = 0;
  std::size_t router_parameters = 0;  // proposed only
};

SchemeSpec describe_scheme(SchemeKind scheme, const std::vector<TaskSpec>& specs,
                           const std::vector<int>& core_widths, int router_hidden);

// A dedicated network per task, no masks, no router; trained for t1 + t2
// updates so every scheme spends the same step budget.
TrainOutcome train_single_task(const TaskSpec& spec, const TaskData& data,
                               const std::vector<int>& core_widths,
                               const TrainConfig& cfg, bool log_test_metrics = true,
                               TrainLog* abort_log = nullptr);

// One shared network; features zero-padded to the maximum dimensionality
// plus a task-index column, labels zero-padded, heads over the full width.
TrainOutcome train_zero_padding(const std::vector<TaskSpec>& specs,
                                const std::vector<TaskData>& data,
                                const std::vector<int>& core_widths,
                                const TrainConfig& cfg, bool log_test_metrics = true,
                                TrainLog* abort_log = nullptr);

// The routed architecture with the router output fixed to one everywhere
// and a task-index input column.
TrainOutcome train_naive(const std::vector<TaskSpec>& specs,
                         const std::vector<TaskData>& data,
                         const std::vector<int>& core_widths, const TrainConfig& cfg,
                         bool log_test_metrics = true, TrainLog* abort_log = nullptr);

// The routed multi-task scheme (two-phase training).
TrainOutcome train_proposed(const std::vector<TaskSpec>& specs,
                            const std::vector<TaskData>& data,
                            const std::vector<int>& core_widths, const TrainConfig& cfg,
                            bool log_test_metrics = true, TrainLog* abort_log = nullptr);

}  // namespace mtlra
