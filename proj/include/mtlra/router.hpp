// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mtlra/net.hpp"

namespace mtlra {

// Shape of one maskable hidden-layer weight matrix.
struct MaskShape {
  int layer = 0;  // 1-based layer index l of the base network, 2 <= l <= L
  int rows = 0;   // d_{l-1}
  int cols = 0;   // d_l
};

// Per-task mask matrices for the base network's hidden layers. Soft masks
// have entries in [0,1]; hard masks are exactly 0.0 or 1.0.
struct MaskSet {
  int task_id = 0;
  std::vector<MaskShape> shapes;
  std::vector<Matrix> layers;  // one per shape, same order
  bool hard = false;

  // Per-layer mask pointers aligned with a base network of `layer_count`
  // layers (slots for unmasked layers stay null).
  std::vector<const Matrix*> layer_ptrs(int layer_count) const;
};

// The routing network: one-hot task index -> flat mask vector, reshaped to
// the hidden-layer weight shapes of the base network. Two dense layers
// (K -> T -> sum of mask entries), ReLU hidden, ReLU(tanh(gamma x)) output.
struct RouterState {
  int task_count = 0;   // K
  int hidden_width = 0; // T
  double gamma = 0.0;
  std::vector<MaskShape> mask_shapes;
  BaseNetParams net;    // widths {K, T, output_width}

  int output_width() const { return net.layer_widths.back(); }
  std::vector<ActivationSpec> activations() const {
    return {ActivationSpec::relu(), ActivationSpec::relu_tanh(gamma)};
  }
};

// Mask shapes for a base network: one per hidden layer l = 2..L.
std::vector<MaskShape> maskable_shapes(const std::vector<int>& layer_widths);

// Weights ~ N(mu, sigma^2) with mu > 0 and sigma^2 < mu (keeps the initial
// soft masks close to one so the initial subnets equal the full network);
// biases exactly zero.
RouterState init_router(int task_count, int hidden_width,
                        const std::vector<int>& base_layer_widths, double mu,
                        double sigma, double gamma, RngStream& rng);

// Soft masks for one task. task_onehot must contain exactly one 1.
// The flat output is reshaped layer-ascending, row-major per matrix.
MaskSet route(const RouterState& router, const Vec& task_onehot);

// As route(), capturing the tape so gradients can flow back into the router.
MaskSet route(const RouterState& router, const Vec& task_onehot, Tape* tape);

// Convenience: one-hot vector for a 1-based task index.
Vec task_onehot(int task_id, int task_count);

// Flatten per-layer mask gradients (same order as the route output) into the
// upstream vector for backward() on the router tape.
Vec flatten_mask_grads(const RouterState& router, const std::vector<Matrix>& grads_per_layer);

// Threshold at 0.5: entries > 0.5 map to exactly 1.0, entries <= 0.5 to 0.0.
MaskSet harden(const MaskSet& soft);

// JSON manifest: task id, layer index and shape per mask; hard masks stored
// as 0/1 integers, soft masks as 17-significant-digit reals.
std::string masks_to_json(const std::vector<MaskSet>& masks);
std::vector<MaskSet> masks_from_json(const std::string& json_text);

}  // namespace mtlra
