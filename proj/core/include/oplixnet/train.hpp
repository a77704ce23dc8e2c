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
#include <functional>
#include <string>
#include <vector>

#include "oplixnet/data_io.hpp"
#include "oplixnet/losses.hpp"
#include "oplixnet/network.hpp"
#include "oplixnet/optimizer.hpp"

namespace oplixnet {

struct TrainConfig {
  int epochs = 10;
  int batch_size = 64;
  OptimizerConfig optimizer;
  std::uint64_t seed = 1;
  double alpha = 1.0;        // KD mixing factor, mutual training only
  double temperature = 1.0;  // KD softening
  KdDirection kd_direction = KdDirection::StudentFirst;
  bool freeze_teacher = false;  // mutual training: teacher only provides targets
  int eval_threads = 1;

  void validate() const;
};

struct EpochRecord {
  int epoch = 0;
  double loss = 0.0;  // CE + alpha KD, mean over batches
  double ce = 0.0;
  double kd = 0.0;
  double train_accuracy = 0.0;  // on the batches as seen during the epoch
  double eval_accuracy = -1.0;  // -1 when no eval set was given
};

struct TrainHistory {
  std::vector<EpochRecord> epochs;

  std::string to_csv() const;
};

using EpochCallback = std::function<void(const std::string& who, const EpochRecord&)>;

/// Mini-batch training on cross-entropy. Batch order for epoch e is
/// permutation(derive_seed(seed, e), N). Throws NumericalError naming the
/// epoch and batch if the loss stops being finite.
TrainHistory train(Network& net, const Dataset& data, const TrainConfig& config,
                   const Dataset* eval = nullptr, const EpochCallback& on_epoch = {});

struct MutualHistory {
  TrainHistory student;
  TrainHistory teacher;
};

/// Both models train from their current state on the same image order.
/// Each step adds alpha * KD toward the other's logits from the same batch,
/// computed before either update. With alpha = 0 the KD terms are skipped
/// and each model follows exactly its independent train() trajectory.
MutualHistory mutual_train(Network& student, Network& teacher, const Dataset& data,
                           const TrainConfig& config, const Dataset* eval = nullptr,
                           const EpochCallback& on_epoch = {});

/// Logits for every sample (N x classes); pure, may split work over threads.
RealMatrix predict(const Network& net, const Dataset& data, int threads = 1,
                   int batch_size = 500);

/// Fraction of argmax hits.
double evaluate(const Network& net, const Dataset& data, int threads = 1);

double accuracy(const RealMatrix& logits, const std::vector<int>& labels);

}  // namespace oplixnet
