// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <utility>

#include "mtlra/tasks.hpp"

namespace mtlra {

// Power fractions (length N_i, entries in [0,1]) for one test row.
using AllocatorFn = std::function<Vec(const Dataset& data, int row)>;

// Mean over the test set of (delay(model allocation) - delay(label))^2 in
// seconds^2. Labels are required.
double eval_supervised(const AllocatorFn& allocate, const Dataset& test,
                       const TaskSpec& spec);

struct UlMetrics {
  double capacity = 0.0;   // mean bits/s/Hz
  double violation = 0.0;  // max(0, mean total power - P_av) in watts
  double mean_power = 0.0; // watts
};

UlMetrics eval_unsupervised(const AllocatorFn& allocate, const Dataset& test,
                            const TaskSpec& spec);

}  // namespace mtlra
