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

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "oplixnet/data_io.hpp"
#include "oplixnet/layers.hpp"
#include "oplixnet/model_spec.hpp"

namespace oplixnet {

/// A trainable model built from a ModelSpec. Activations travel as
/// features x batch complex matrices; logits come out batch x classes.
class Network {
 public:
  Network(ModelSpec spec, std::uint64_t seed);
  Network(const Network& other);
  Network& operator=(const Network& other);
  Network(Network&&) noexcept = default;
  Network& operator=(Network&&) noexcept = default;

  const ModelSpec& spec() const { return spec_; }
  const ResolvedModel& resolved() const { return resolved_; }
  int classes() const { return resolved_.classes; }
  /// Complex input features per sample.
  int input_size() const { return resolved_.input_shape.size(); }

  /// Encodes one image for this model's flavor (and scheme).
  ComplexVector encode(const RealImage& image) const;
  ComplexMatrix encode_batch(const Dataset& data,
                             std::span<const std::size_t> indices) const;

  /// Complex outputs of the last layer, before detection.
  ComplexMatrix field(const ComplexMatrix& x) const;
  /// Detection / readout of the last layer's outputs.
  RealMatrix readout(const ComplexMatrix& z) const;
  RealMatrix infer(const ComplexMatrix& x) const { return readout(field(x)); }

  /// Training pass; keeps per-layer state for backward.
  RealMatrix forward(const ComplexMatrix& x);
  /// Gradient of the loss w.r.t. the logits of the last forward call.
  void backward(const RealMatrix& dlogits);

  std::vector<ParamView> params();
  void zero_grad();
  std::size_t parameter_count();

  std::size_t size() const { return layers_.size(); }
  const Layer& layer(std::size_t i) const { return *layers_[i]; }
  Layer& layer(std::size_t i) { return *layers_[i]; }

 private:
  ComplexMatrix readout_grad(const RealMatrix& dlogits) const;

  ModelSpec spec_;
  ResolvedModel resolved_;
  std::vector<std::unique_ptr<Layer>> layers_;
  ComplexMatrix last_field_;
};

}  // namespace oplixnet
