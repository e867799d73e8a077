// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "mtlra/net.hpp"

namespace mtlra {

struct AdamHyper {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

// First/second moment estimates mirroring a BaseNetParams shape.
// step_count increases by exactly one per update.
struct AdamState {
  std::vector<Matrix> m_w, v_w;
  std::vector<Vec> m_b, v_b;
  std::int64_t step_count = 0;
  AdamHyper hyper;

  AdamState() = default;
  explicit AdamState(const BaseNetParams& p, AdamHyper hp = {});
};

// Standard Adam with bias correction: params -= eta * m_hat / (sqrt(v_hat) + eps).
void adam_step(BaseNetParams* params, const NetGrads& grads, AdamState* state, double eta);

// Plain gradient descent: params -= eta * grads.
void sgd_step(BaseNetParams* params, const NetGrads& grads, double eta);

enum class OptimizerKind { Adam, Sgd };

}  // namespace mtlra
