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

#include "oplixnet/optimizer.hpp"

#include <cmath>

#include "oplixnet/errors.hpp"

namespace oplixnet {

std::string optimizer_name(OptimizerKind kind) {
  return kind == OptimizerKind::Adam ? "adam" : "sgd";
}

OptimizerKind parse_optimizer(std::string_view name) {
  if (name == "adam") return OptimizerKind::Adam;
  if (name == "sgd") return OptimizerKind::Sgd;
  throw ConfigError("unknown optimizer '" + std::string(name) + "' (adam, sgd)");
}

void OptimizerConfig::validate() const {
  if (!(lr >= 0) || !std::isfinite(lr)) throw ConfigError("learning rate must be >= 0");
  if (momentum < 0 || momentum >= 1) throw ConfigError("momentum must be in [0, 1)");
  if (beta1 < 0 || beta1 >= 1 || beta2 < 0 || beta2 >= 1) {
    throw ConfigError("Adam betas must be in [0, 1)");
  }
  if (!(eps > 0)) throw ConfigError("Adam eps must be positive");
}

Optimizer::Optimizer(OptimizerConfig config) : config_(config) { config_.validate(); }

void Optimizer::step(const std::vector<ParamView>& params) {
  if (m_.empty()) {
    for (const ParamView& p : params) {
      m_.emplace_back(p.value.size(), 0.0);
      v_.emplace_back(p.value.size(), 0.0);
    }
  }
  if (m_.size() != params.size()) {
    throw ConfigError("optimizer: parameter list changed between steps");
  }
  ++t_;
  const double lr = config_.lr;
  if (config_.kind == OptimizerKind::Sgd) {
    for (std::size_t k = 0; k < params.size(); ++k) {
      auto& buf = m_[k];
      for (std::size_t i = 0; i < buf.size(); ++i) {
        buf[i] = config_.momentum * buf[i] + params[k].grad[i];
        params[k].value[i] -= lr * buf[i];
      }
    }
    return;
  }
  const double b1 = config_.beta1, b2 = config_.beta2;
  const double c1 = 1.0 - std::pow(b1, static_cast<double>(t_));
  const double c2 = 1.0 - std::pow(b2, static_cast<double>(t_));
  for (std::size_t k = 0; k < params.size(); ++k) {
    auto& m = m_[k];
    auto& v = v_[k];
    for (std::size_t i = 0; i < m.size(); ++i) {
      const double g = params[k].grad[i];
      m[i] = b1 * m[i] + (1 - b1) * g;
      v[i] = b2 * v[i] + (1 - b2) * g * g;
      params[k].value[i] -= lr * (m[i] / c1) / (std::sqrt(v[i] / c2) + config_.eps);
    }
  }
}

}  // namespace oplixnet
