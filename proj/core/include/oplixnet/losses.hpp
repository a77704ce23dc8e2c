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

#include <span>
#include <vector>

#include "oplixnet/complex_core.hpp"

namespace oplixnet {

/// Row-wise softmax of logits / temperature (batch x classes).
RealMatrix softmax(const RealMatrix& logits, double temperature = 1.0);

/// Mean cross-entropy of softmax(logits) against integer labels. When `grad`
/// is given it receives dL/dlogits.
double cross_entropy(const RealMatrix& logits, std::span<const int> labels,
                     RealMatrix* grad = nullptr);

/// StudentFirst: KL(p_student || p_teacher), the default.
/// TeacherFirst: KL(p_teacher || p_student), the deep-mutual-learning form.
enum class KdDirection { StudentFirst, TeacherFirst };

/// Distillation loss between temperature-softened distributions, scaled by
/// T^2 and averaged over the batch. Teacher logits are constants; `grad`
/// receives dL/dstudent_logits.
double kd_loss(const RealMatrix& student, const RealMatrix& teacher,
               double temperature, KdDirection direction = KdDirection::StudentFirst,
               RealMatrix* grad = nullptr);

/// Argmax per row.
std::vector<int> predictions(const RealMatrix& logits);

}  // namespace oplixnet
