// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mtlra/activations.hpp"
#include "mtlra/errors.hpp"
#include "mtlra/matrix.hpp"
#include "mtlra/rng.hpp"

namespace mtlra {

// Glorot-uniform draw on [-sqrt(6/(rows+cols)), +sqrt(6/(rows+cols))].
Matrix xavier_init(int rows, int cols, RngStream& rng);

// I.i.d. normal entries, mean mu, standard deviation sigma.
Matrix gaussian_init(int rows, int cols, double mu, double sigma, RngStream& rng);

// Weights and biases of a fully-connected feed-forward network.
// layer_widths = {d_0, ..., d_{L+1}}; weights[l] is d_l x d_{l+1} (0-based),
// i.e. the paper-style W_{l+1}, with biases[l] of length d_{l+1}.
struct BaseNetParams {
  std::vector<int> layer_widths;
  std::vector<Matrix> weights;
  std::vector<Vec> biases;

  BaseNetParams() = default;
  explicit BaseNetParams(std::vector<int> widths);

  int layer_count() const { return static_cast<int>(weights.size()); }  // L+1
  int input_width() const { return layer_widths.front(); }
  int output_width() const { return layer_widths.back(); }

  void init_xavier(RngStream& rng);                       // weights Xavier, biases zero
  void init_gaussian(double mu, double sigma, RngStream& rng);  // weights normal, biases zero

  std::size_t parameter_count() const;

  bool operator==(const BaseNetParams& o) const {
    return layer_widths == o.layer_widths && weights == o.weights && biases == o.biases;
  }
};

// Everything backward needs: inputs, pre-activations and activations per
// layer, plus the slicing/mask configuration the forward pass used.
struct Tape {
  const BaseNetParams* params = nullptr;
  std::vector<const Matrix*> masks;       // one slot per layer, null = unmasked
  std::vector<ActivationSpec> acts;       // one per layer
  int in_active = 0;                      // active rows of the first weight matrix
  int out_active = 0;                     // active cols of the last weight matrix
  std::vector<Vec> y;                     // y[0] = input, y[l] = post-activation
  std::vector<Vec> z;                     // z[l-1] = pre-activation of layer l
};

// Gradient holder mirroring BaseNetParams. Entries outside active slices and
// entries under a zero mask are exactly 0.0. mask_grads[l] (when requested)
// is d(loss)/d(mask entry), needed to chain gradients into the router.
struct NetGrads {
  std::vector<Matrix> weights;
  std::vector<Vec> biases;
  std::vector<Matrix> mask_grads;  // empty unless requested; sized per masked layer

  explicit NetGrads(const BaseNetParams& p, bool with_mask_grads = false);
  NetGrads() = default;

  void scale(double s);
  void add_scaled(const NetGrads& o, double s);  // this += s * o (params part only)
  bool all_finite() const;
};

// Forward pass through the network.
//   masks:      optional; per-layer element-wise weight masks (same shape as
//               the weight matrix). Pass {} for a plain pass.
//   in_active:  number of active input features (first rows of W_1); -1 = all.
//   out_active: number of active output units (first cols of W_{L+1}); -1 = all.
// Returns the output (length out_active); fills the tape for backward.
Vec forward(const BaseNetParams& params, const std::vector<const Matrix*>& masks,
            const Vec& input, const std::vector<ActivationSpec>& acts, Tape* tape,
            int in_active = -1, int out_active = -1);

// Convenience overload without tape capture.
Vec forward(const BaseNetParams& params, const std::vector<const Matrix*>& masks,
            const Vec& input, const std::vector<ActivationSpec>& acts,
            int in_active = -1, int out_active = -1);

// Reverse pass. upstream is d(loss)/d(output), length out_active. Accumulates
// into grads (+= semantics, so batches can share one holder). Weight
// gradients are pre-multiplied by the mask where one was applied; if
// grads.mask_grads is non-empty, d(loss)/d(mask) is accumulated as well.
void backward(const Tape& tape, const Vec& upstream, NetGrads* grads);

// Serialization: JSON with layer shapes and nested arrays, numbers printed
// with 17 significant digits (exact round-trip for doubles).
std::string params_to_json(const BaseNetParams& params);
BaseNetParams params_from_json(const std::string& json_text);

}  // namespace mtlra
