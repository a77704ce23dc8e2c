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

#include "oplixnet/losses.hpp"

#include <cmath>
#include <string>

#include "oplixnet/errors.hpp"

namespace oplixnet {

namespace {

// log softmax of one row, shifted by the row max.
RealVector log_softmax_row(const Eigen::Ref<const RealVector>& z) {
  const double m = z.maxCoeff();
  RealVector s = z.array() - m;
  const double lse = std::log(s.array().exp().sum());
  return s.array() - lse;
}

}  // namespace

RealMatrix softmax(const RealMatrix& logits, double temperature) {
  if (!(temperature > 0)) throw ConfigError("temperature must be positive");
  RealMatrix p(logits.rows(), logits.cols());
  for (Eigen::Index i = 0; i < logits.rows(); ++i) {
    RealVector row = logits.row(i).transpose() / temperature;
    p.row(i) = log_softmax_row(row).array().exp().matrix().transpose();
  }
  return p;
}

double cross_entropy(const RealMatrix& logits, std::span<const int> labels,
                     RealMatrix* grad) {
  if (static_cast<Eigen::Index>(labels.size()) != logits.rows()) {
    throw ConfigError("cross_entropy: " + std::to_string(labels.size()) +
                      " labels for " + std::to_string(logits.rows()) + " rows");
  }
  const double n = static_cast<double>(logits.rows());
  double total = 0.0;
  if (grad) grad->resize(logits.rows(), logits.cols());
  for (Eigen::Index i = 0; i < logits.rows(); ++i) {
    const int y = labels[static_cast<std::size_t>(i)];
    if (y < 0 || y >= logits.cols()) throw ConfigError("cross_entropy: label out of range");
    RealVector lp = log_softmax_row(logits.row(i).transpose());
    total -= lp(y);
    if (grad) {
      RealVector g = lp.array().exp();
      g(y) -= 1.0;
      grad->row(i) = g.transpose() / n;
    }
  }
  return total / n;
}

double kd_loss(const RealMatrix& student, const RealMatrix& teacher,
               double temperature, KdDirection direction, RealMatrix* grad) {
  if (student.rows() != teacher.rows() || student.cols() != teacher.cols()) {
    throw ConfigError("kd_loss: student and teacher logits differ in shape");
  }
  if (!(temperature > 0)) throw ConfigError("temperature must be positive");
  const double t = temperature;
  const double n = static_cast<double>(student.rows());
  double total = 0.0;
  if (grad) grad->resize(student.rows(), student.cols());
  for (Eigen::Index i = 0; i < student.rows(); ++i) {
    RealVector ls = log_softmax_row(student.row(i).transpose() / t);
    RealVector lt = log_softmax_row(teacher.row(i).transpose() / t);
    RealVector ps = ls.array().exp();
    RealVector pt = lt.array().exp();
    double kl = 0.0;
    RealVector g;
    if (direction == KdDirection::StudentFirst) {
      RealVector d = ls - lt;
      kl = ps.dot(d);
      // d/du_k sum_j p_j (log p_j - log q_j) = p_k (log p_k - log q_k - KL)
      g = ps.array() * (d.array() - kl);
    } else {
      kl = pt.dot(lt - ls);
      g = ps - pt;
    }
    total += kl;
    // u = z / T and the T^2 factor leave T * dKL/du.
    if (grad) grad->row(i) = (t * g / n).transpose();
  }
  return t * t * total / n;
}

std::vector<int> predictions(const RealMatrix& logits) {
  std::vector<int> out(static_cast<std::size_t>(logits.rows()));
  for (Eigen::Index i = 0; i < logits.rows(); ++i) {
    Eigen::Index k = 0;
    logits.row(i).maxCoeff(&k);
    out[static_cast<std::size_t>(i)] = static_cast<int>(k);
  }
  return out;
}

}  // namespace oplixnet
