// Copyright 2026 The OplixNet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "oplixnet/complex_core.hpp"
#include "oplixnet/model_spec.hpp"
#include "oplixnet/photonic.hpp"
#include "oplixnet/random.hpp"

namespace oplixnet {

// Gradients w.r.t. a complex quantity z = a + jb are packed as the complex
// number dL/da + j dL/db. With that packing a complex product y = W x
// backpropagates as dW = g x^H and dx = W^H g, which is exactly real
// backprop through the realified matrix with the paired entries tied.

/// A parameter block seen as reals (complex entries as re, im pairs).
struct ParamView {
  std::string name;
  std::span<double> value;
  std::span<double> grad;
};

class Layer {
 public:
  virtual ~Layer() = default;

  virtual OpKind kind() const = 0;
  virtual std::string label() const = 0;
  virtual std::unique_ptr<Layer> clone() const = 0;

  /// Inference without side effects.
  virtual ComplexMatrix infer(const ComplexMatrix& x) const = 0;
  /// Training forward pass; keeps what backward needs.
  virtual ComplexMatrix forward(const ComplexMatrix& x) = 0;
  /// Accumulates parameter gradients and returns the input gradient.
  virtual ComplexMatrix backward(const ComplexMatrix& grad) = 0;

  virtual std::vector<ParamView> params() { return {}; }
};

/// Complex fully connected layer, no bias unless requested.
class DenseOp final : public Layer {
 public:
  DenseOp(std::string label, int in, int out, bool bias, bool real_only);

  OpKind kind() const override { return OpKind::Dense; }
  std::string label() const override { return label_; }
  std::unique_ptr<Layer> clone() const override;
  ComplexMatrix infer(const ComplexMatrix& x) const override;
  ComplexMatrix forward(const ComplexMatrix& x) override;
  ComplexMatrix backward(const ComplexMatrix& grad) override;
  std::vector<ParamView> params() override;

  /// Complex Glorot: re and im independent N(0, 1/(fan_in + fan_out));
  /// real-only layers use N(0, 2/(fan_in + fan_out)).
  void init(Rng& rng);

  ComplexMatrix& weight() { return w_; }
  const ComplexMatrix& weight() const { return w_; }
  bool has_bias() const { return has_bias_; }
  const ComplexVector& bias() const { return b_; }
  bool real_only() const { return real_only_; }

 private:
  std::string label_;
  bool has_bias_;
  bool real_only_;
  ComplexMatrix w_, dw_;
  ComplexVector b_, db_;
  ComplexMatrix x_;
};

/// Complex 2-D convolution lowered to a GEMM over unrolled patches.
/// Activations are CHW-flattened columns, one column per sample.
class ConvOp final : public Layer {
 public:
  ConvOp(std::string label, Shape3 in, int c_out, int kernel, int stride,
         int pad, bool bias, bool real_only);

  OpKind kind() const override { return OpKind::Conv; }
  std::string label() const override { return label_; }
  std::unique_ptr<Layer> clone() const override;
  ComplexMatrix infer(const ComplexMatrix& x) const override;
  ComplexMatrix forward(const ComplexMatrix& x) override;
  ComplexMatrix backward(const ComplexMatrix& grad) override;
  std::vector<ParamView> params() override;
  void init(Rng& rng);

  /// Kernel as a c_out x (c_in k k) matrix, column index (ci k + ki) k + kj.
  ComplexMatrix& kernel() { return k_; }
  const ComplexMatrix& kernel() const { return k_; }
  bool has_bias() const { return has_bias_; }
  const ComplexVector& bias() const { return b_; }
  Shape3 in_shape() const { return in_; }
  Shape3 out_shape() const { return out_; }

  /// Unrolled patches: (batch * Ho * Wo) x (c_in k k).
  ComplexMatrix im2col(const ComplexMatrix& x) const;
  /// Inverse layout of the GEMM result (batch * Ho * Wo) x c_out into CHW
  /// columns, adding the bias.
  ComplexMatrix to_columns(const ComplexMatrix& yt, Eigen::Index batch) const;

 private:
  std::string label_;
  Shape3 in_, out_;
  int kernel_size_, stride_, pad_;
  bool has_bias_;
  bool real_only_;
  ComplexMatrix k_, dk_;
  ComplexVector b_, db_;
  ComplexMatrix patches_;
  Eigen::Index batch_ = 0;
};

/// Max pooling applied to real and imaginary parts independently.
class MaxPoolOp final : public Layer {
 public:
  MaxPoolOp(Shape3 in, int size, int stride);

  OpKind kind() const override { return OpKind::MaxPool; }
  std::string label() const override { return "maxpool"; }
  std::unique_ptr<Layer> clone() const override;
  ComplexMatrix infer(const ComplexMatrix& x) const override;
  ComplexMatrix forward(const ComplexMatrix& x) override;
  ComplexMatrix backward(const ComplexMatrix& grad) override;

 private:
  ComplexMatrix run(const ComplexMatrix& x, std::vector<int>* arg_re,
                    std::vector<int>* arg_im) const;

  Shape3 in_, out_;
  int size_, stride_;
  std::vector<int> arg_re_, arg_im_;
  Eigen::Index in_rows_ = 0, batch_ = 0;
};

class GlobalAvgPoolOp final : public Layer {
 public:
  explicit GlobalAvgPoolOp(Shape3 in) : in_(in) {}

  OpKind kind() const override { return OpKind::GlobalAvgPool; }
  std::string label() const override { return "gap"; }
  std::unique_ptr<Layer> clone() const override;
  ComplexMatrix infer(const ComplexMatrix& x) const override;
  ComplexMatrix forward(const ComplexMatrix& x) override { return infer(x); }
  ComplexMatrix backward(const ComplexMatrix& grad) override;

 private:
  Shape3 in_;
};

/// Identity on CHW-flattened columns.
class FlattenOp final : public Layer {
 public:
  OpKind kind() const override { return OpKind::Flatten; }
  std::string label() const override { return "flatten"; }
  std::unique_ptr<Layer> clone() const override;
  ComplexMatrix infer(const ComplexMatrix& x) const override { return x; }
  ComplexMatrix forward(const ComplexMatrix& x) override { return x; }
  ComplexMatrix backward(const ComplexMatrix& grad) override { return grad; }
};

class ActivationOp final : public Layer {
 public:
  ActivationOp(ActivationKind kind, double modrelu_offset)
      : act_(kind), offset_(modrelu_offset) {}

  OpKind kind() const override { return OpKind::Activation; }
  std::string label() const override { return "act"; }
  std::unique_ptr<Layer> clone() const override;
  ComplexMatrix infer(const ComplexMatrix& x) const override;
  ComplexMatrix forward(const ComplexMatrix& x) override;
  ComplexMatrix backward(const ComplexMatrix& grad) override;

 private:
  ActivationKind act_;
  double offset_;
  ComplexMatrix x_;
};

/// Unitary decoder trained directly in mesh coordinates: MZI angles and the
/// output phase screen are the parameters, so the layer is unitary by
/// construction.
class UnitaryMeshOp final : public Layer {
 public:
  UnitaryMeshOp(std::string label, int width);

  OpKind kind() const override { return OpKind::DecoderUnitary; }
  std::string label() const override { return label_; }
  std::unique_ptr<Layer> clone() const override;
  ComplexMatrix infer(const ComplexMatrix& x) const override;
  ComplexMatrix forward(const ComplexMatrix& x) override;
  ComplexMatrix backward(const ComplexMatrix& grad) override;
  std::vector<ParamView> params() override;
  void init(Rng& rng);

  /// Current parameters as a mesh (angles wrapped into [0, 2pi)).
  MziMesh mesh() const;
  int width() const { return width_; }

 private:
  std::string label_;
  int width_;
  std::vector<int> tops_;
  std::vector<double> theta_, phi_, screen_;
  std::vector<double> dtheta_, dphi_, dscreen_;
  std::vector<ComplexMatrix> stage_inputs_;  // 2 x batch rows before each stage
  ComplexMatrix out_;
};

}  // namespace oplixnet
