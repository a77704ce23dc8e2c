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

#include "oplixnet/network.hpp"

#include <algorithm>
#include <cmath>

#include "oplixnet/assignment.hpp"
#include "oplixnet/errors.hpp"

namespace oplixnet {

Network::Network(ModelSpec spec, std::uint64_t seed)
    : spec_(std::move(spec)), resolved_(resolve(spec_)) {
  if (!spec_.arch.trainable) {
    throw ConfigError(spec_.arch.name + " is available for area counting only");
  }
  const bool real_only = spec_.flavor == Flavor::RVNN;
  const bool bias = spec_.use_bias;
  Rng rng(seed);
  for (const ResolvedLayer& r : resolved_.layers) {
    switch (r.kind) {
      case OpKind::Dense:
      case OpKind::DecoderLinear: {
        auto op = std::make_unique<DenseOp>(r.label, r.in_shape.size(),
                                            r.out_shape.size(), bias, real_only);
        op->init(rng);
        layers_.push_back(std::move(op));
        break;
      }
      case OpKind::Conv: {
        auto op = std::make_unique<ConvOp>(r.label, r.in_shape, r.out_shape.channels,
                                           r.kernel, r.stride, r.pad, bias, real_only);
        op->init(rng);
        layers_.push_back(std::move(op));
        break;
      }
      case OpKind::MaxPool:
        layers_.push_back(std::make_unique<MaxPoolOp>(r.in_shape, r.kernel, r.stride));
        break;
      case OpKind::GlobalAvgPool:
        layers_.push_back(std::make_unique<GlobalAvgPoolOp>(r.in_shape));
        break;
      case OpKind::Flatten:
        layers_.push_back(std::make_unique<FlattenOp>());
        break;
      case OpKind::Activation:
        layers_.push_back(
            std::make_unique<ActivationOp>(spec_.activation, spec_.modrelu_offset));
        break;
      case OpKind::DecoderUnitary: {
        auto op = std::make_unique<UnitaryMeshOp>(r.label, r.out_shape.size());
        op->init(rng);
        layers_.push_back(std::move(op));
        break;
      }
      case OpKind::Residual:
        throw ConfigError(spec_.arch.name + ": residual blocks are counted, not trained");
    }
  }
}

Network::Network(const Network& other)
    : spec_(other.spec_), resolved_(other.resolved_), last_field_(other.last_field_) {
  for (const auto& l : other.layers_) layers_.push_back(l->clone());
}

Network& Network::operator=(const Network& other) {
  if (this != &other) {
    Network tmp(other);
    *this = std::move(tmp);
  }
  return *this;
}

ComplexVector Network::encode(const RealImage& image) const {
  if (!(image.shape == spec_.arch.input)) {
    throw ConfigError("image shape " + image.shape.str() + " does not match model input " +
                      spec_.arch.input.str());
  }
  if (spec_.flavor == Flavor::SCVNN) return assign(image, *spec_.scheme).data.flatten();
  return encode_real_part(image).flatten();
}

ComplexMatrix Network::encode_batch(const Dataset& data,
                                    std::span<const std::size_t> indices) const {
  ComplexMatrix x(input_size(), static_cast<Eigen::Index>(indices.size()));
  for (std::size_t j = 0; j < indices.size(); ++j) {
    x.col(static_cast<Eigen::Index>(j)) = encode(data.image(indices[j]));
  }
  return x;
}

ComplexMatrix Network::field(const ComplexMatrix& x) const {
  if (x.rows() != input_size()) {
    throw ConfigError("batch has " + std::to_string(x.rows()) +
                      " features, model expects " + std::to_string(input_size()));
  }
  ComplexMatrix h = x;
  for (const auto& l : layers_) h = l->infer(h);
  return h;
}

RealMatrix Network::readout(const ComplexMatrix& z) const {
  const int c = classes();
  RealMatrix logits(z.cols(), c);
  if (spec_.flavor == Flavor::RVNN) {
    logits = z.real().transpose();
  } else if (resolved_.head.rule == LogitRule::CoherentPairs) {
    for (Eigen::Index s = 0; s < z.cols(); ++s) {
      for (int k = 0; k < c; ++k) {
        const Complex v = z(k / 2, s);
        logits(s, k) = (k % 2 == 0) ? v.real() : v.imag();
      }
    }
  } else if (spec_.magnitude_detection) {
    logits = z.cwiseAbs().transpose();
  } else {
    logits = z.cwiseAbs2().transpose();
  }
  if (!logits.allFinite()) throw NumericalError("non-finite logits");
  return logits;
}

ComplexMatrix Network::readout_grad(const RealMatrix& d) const {
  const ComplexMatrix& z = last_field_;
  ComplexMatrix g = ComplexMatrix::Zero(z.rows(), z.cols());
  const int c = classes();
  for (Eigen::Index s = 0; s < z.cols(); ++s) {
    if (spec_.flavor == Flavor::RVNN) {
      for (int k = 0; k < c; ++k) g(k, s) = Complex(d(s, k), 0.0);
    } else if (resolved_.head.rule == LogitRule::CoherentPairs) {
      for (int k = 0; k < c; ++k) {
        g(k / 2, s) += (k % 2 == 0) ? Complex(d(s, k), 0.0) : Complex(0.0, d(s, k));
      }
    } else if (spec_.magnitude_detection) {
      for (int k = 0; k < c; ++k) {
        const double r = std::abs(z(k, s));
        g(k, s) = r > 0 ? z(k, s) / r * d(s, k) : Complex(0.0, 0.0);
      }
    } else {
      for (int k = 0; k < c; ++k) g(k, s) = 2.0 * z(k, s) * d(s, k);
    }
  }
  return g;
}

RealMatrix Network::forward(const ComplexMatrix& x) {
  if (x.rows() != input_size()) {
    throw ConfigError("batch has " + std::to_string(x.rows()) +
                      " features, model expects " + std::to_string(input_size()));
  }
  ComplexMatrix h = x;
  for (auto& l : layers_) h = l->forward(h);
  last_field_ = std::move(h);
  return readout(last_field_);
}

void Network::backward(const RealMatrix& dlogits) {
  if (dlogits.rows() != last_field_.cols() || dlogits.cols() != classes()) {
    throw ConfigError("logit gradient shape does not match the last forward pass");
  }
  ComplexMatrix g = readout_grad(dlogits);
  for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) g = (*it)->backward(g);
}

std::vector<ParamView> Network::params() {
  std::vector<ParamView> out;
  for (auto& l : layers_) {
    for (ParamView& p : l->params()) out.push_back(p);
  }
  return out;
}

void Network::zero_grad() {
  for (ParamView& p : params()) std::fill(p.grad.begin(), p.grad.end(), 0.0);
}

std::size_t Network::parameter_count() {
  std::size_t n = 0;
  for (const ParamView& p : params()) n += p.value.size();
  return n;
}

}  // namespace oplixnet
