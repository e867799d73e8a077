// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "mtlra/errors.hpp"
#include "mtlra/matrix.hpp"

namespace mtlra {

enum class ActKind { Identity, Relu, Sigmoid, Tanh, Softmax, ReluTanh };

struct ActivationSpec {
  ActKind kind = ActKind::Identity;
  double gamma = 0.0;  // ReluTanh sharpness; must be > 0 for that kind

  static ActivationSpec identity() { return {ActKind::Identity, 0.0}; }
  static ActivationSpec relu() { return {ActKind::Relu, 0.0}; }
  static ActivationSpec sigmoid() { return {ActKind::Sigmoid, 0.0}; }
  static ActivationSpec tanh() { return {ActKind::Tanh, 0.0}; }
  static ActivationSpec softmax() { return {ActKind::Softmax, 0.0}; }
  static ActivationSpec relu_tanh(double gamma) {
    if (gamma <= 0.0) throw ArgumentError("relu_tanh: gamma must be positive");
    return {ActKind::ReluTanh, gamma};
  }
};

inline double relu(double x) { return x > 0.0 ? x : 0.0; }

inline double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

// ReLU(tanh(gamma*x)): saturating step approximation with range [0, 1).
// Derivative is 0 at and left of the origin.
inline double relu_tanh(double x, double gamma) {
  return x > 0.0 ? std::tanh(gamma * x) : 0.0;
}

inline double relu_tanh_deriv(double x, double gamma) {
  if (x <= 0.0) return 0.0;
  const double t = std::tanh(gamma * x);
  return gamma * (1.0 - t * t);
}

// Max-subtracted softmax; outputs are in (0,1) and sum to 1.
inline void softmax(const double* z, double* out, std::size_t n) {
  double zmax = z[0];
  for (std::size_t i = 1; i < n; ++i) zmax = std::max(zmax, z[i]);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::exp(z[i] - zmax);
    sum += out[i];
  }
  for (std::size_t i = 0; i < n; ++i) out[i] /= sum;
}

inline Vec softmax(const Vec& z) {
  Vec out(z.size());
  softmax(z.data(), out.data(), z.size());
  return out;
}

// Element-wise forward value for the scalar activations.
inline double act_apply(const ActivationSpec& a, double z) {
  switch (a.kind) {
    case ActKind::Identity: return z;
    case ActKind::Relu: return relu(z);
    case ActKind::Sigmoid: return sigmoid(z);
    case ActKind::Tanh: return std::tanh(z);
    case ActKind::ReluTanh: return relu_tanh(z, a.gamma);
    case ActKind::Softmax:
      throw ArgumentError("softmax is a vector activation");
  }
  return z;
}

// dy/dz for the scalar activations given z and y = act(z).
inline double act_deriv(const ActivationSpec& a, double z, double y) {
  switch (a.kind) {
    case ActKind::Identity: return 1.0;
    case ActKind::Relu: return z > 0.0 ? 1.0 : 0.0;
    case ActKind::Sigmoid: return y * (1.0 - y);
    case ActKind::Tanh: return 1.0 - y * y;
    case ActKind::ReluTanh: return relu_tanh_deriv(z, a.gamma);
    case ActKind::Softmax:
      throw ArgumentError("softmax is a vector activation");
  }
  return 1.0;
}

// Softmax backward: dz = y .* (dy - <dy, y>).
inline void softmax_backward(const double* y, const double* dy, double* dz,
                             std::size_t n) {
  double dot = 0.0;
  for (std::size_t i = 0; i < n; ++i) dot += dy[i] * y[i];
  for (std::size_t i = 0; i < n; ++i) dz[i] = y[i] * (dy[i] - dot);
}

}  // namespace mtlra
