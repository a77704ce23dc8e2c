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

#include <string>
#include <string_view>
#include <vector>

#include "oplixnet/layers.hpp"

namespace oplixnet {

enum class OptimizerKind { Adam, Sgd };

std::string optimizer_name(OptimizerKind kind);
OptimizerKind parse_optimizer(std::string_view name);

struct OptimizerConfig {
  OptimizerKind kind = OptimizerKind::Adam;
  double lr = 1e-3;
  double momentum = 0.9;  // SGD
  double beta1 = 0.9;     // Adam
  double beta2 = 0.999;
  double eps = 1e-8;

  void validate() const;
};

/// Element-wise update over real views of the parameters (complex entries
/// update their real and imaginary parts independently). State is keyed by
/// position, so the parameter list must not change between steps.
class Optimizer {
 public:
  explicit Optimizer(OptimizerConfig config);

  void step(const std::vector<ParamView>& params);
  const OptimizerConfig& config() const { return config_; }

 private:
  OptimizerConfig config_;
  long long t_ = 0;
  std::vector<std::vector<double>> m_, v_;
};

}  // namespace oplixnet
