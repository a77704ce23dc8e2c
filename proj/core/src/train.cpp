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

#include "oplixnet/train.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>

#include "oplixnet/errors.hpp"
#include "oplixnet/random.hpp"

namespace oplixnet {

void TrainConfig::validate() const {
  if (epochs < 0) throw ConfigError("epochs must be >= 0");
  if (batch_size <= 0) throw ConfigError("batch size must be positive");
  if (!(alpha >= 0) || !std::isfinite(alpha)) throw ConfigError("alpha must be >= 0");
  if (!(temperature > 0) || !std::isfinite(temperature)) {
    throw ConfigError("temperature must be > 0");
  }
  if (eval_threads < 1) throw ConfigError("threads must be >= 1");
  optimizer.validate();
}

std::string TrainHistory::to_csv() const {
  std::ostringstream os;
  os.precision(10);
  os << "epoch,loss,ce,kd,train_accuracy,eval_accuracy\n";
  for (const EpochRecord& r : epochs) {
    os << r.epoch << ',' << r.loss << ',' << r.ce << ',' << r.kd << ','
       << r.train_accuracy << ',';
    if (r.eval_accuracy >= 0) os << r.eval_accuracy;
    os << '\n';
  }
  return os.str();
}

double accuracy(const RealMatrix& logits, const std::vector<int>& labels) {
  if (labels.empty()) return 0.0;
  std::vector<int> pred = predictions(logits);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) hits += pred[i] == labels[i];
  return static_cast<double>(hits) / static_cast<double>(labels.size());
}

RealMatrix predict(const Network& net, const Dataset& data, int threads, int batch_size) {
  const std::size_t n = data.size();
  RealMatrix out(static_cast<Eigen::Index>(n), net.classes());
  const std::size_t bs = static_cast<std::size_t>(std::max(batch_size, 1));
  const std::size_t batches = (n + bs - 1) / bs;
  auto work = [&](std::size_t first, std::size_t stride) {
    std::vector<std::size_t> idx;
    for (std::size_t b = first; b < batches; b += stride) {
      idx.resize(std::min(bs, n - b * bs));
      std::iota(idx.begin(), idx.end(), b * bs);
      RealMatrix l = net.infer(net.encode_batch(data, idx));
      out.middleRows(static_cast<Eigen::Index>(b * bs), l.rows()) = l;
    }
  };
  const std::size_t t = std::clamp<std::size_t>(static_cast<std::size_t>(threads), 1, batches ? batches : 1);
  if (t == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < t; ++i) pool.emplace_back(work, i, t);
    for (auto& th : pool) th.join();
  }
  return out;
}

double evaluate(const Network& net, const Dataset& data, int threads) {
  return accuracy(predict(net, data, threads), data.labels);
}

namespace {

struct Batch {
  std::vector<std::size_t> idx;
  std::vector<int> labels;
};

std::vector<Batch> epoch_batches(const Dataset& data, const TrainConfig& config, int epoch) {
  const std::vector<std::size_t> perm =
      permutation(derive_seed(config.seed, static_cast<std::uint64_t>(epoch)), data.size());
  std::vector<Batch> out;
  const std::size_t bs = static_cast<std::size_t>(config.batch_size);
  for (std::size_t start = 0; start < perm.size(); start += bs) {
    Batch b;
    const std::size_t end = std::min(perm.size(), start + bs);
    b.idx.assign(perm.begin() + static_cast<std::ptrdiff_t>(start),
                 perm.begin() + static_cast<std::ptrdiff_t>(end));
    for (std::size_t i : b.idx) b.labels.push_back(data.labels[i]);
    out.push_back(std::move(b));
  }
  return out;
}

// Running sums for one model over an epoch.
struct Tally {
  double loss = 0, ce = 0, kd = 0;
  std::size_t hits = 0, seen = 0, batches = 0;

  void add(double l, double c, double k, const RealMatrix& logits,
           const std::vector<int>& labels) {
    loss += l;
    ce += c;
    kd += k;
    ++batches;
    std::vector<int> pred = predictions(logits);
    for (std::size_t i = 0; i < labels.size(); ++i) hits += pred[i] == labels[i];
    seen += labels.size();
  }

  EpochRecord record(int epoch) const {
    EpochRecord r;
    r.epoch = epoch;
    const double nb = batches ? static_cast<double>(batches) : 1.0;
    r.loss = loss / nb;
    r.ce = ce / nb;
    r.kd = kd / nb;
    r.train_accuracy = seen ? static_cast<double>(hits) / static_cast<double>(seen) : 0.0;
    return r;
  }
};

void check_finite_loss(double loss, const std::string& who, int epoch, std::size_t batch) {
  if (!std::isfinite(loss)) {
    throw NumericalError(who + " diverged: non-finite loss at epoch " +
                         std::to_string(epoch) + ", batch " + std::to_string(batch));
  }
}

void check_dataset(const Network& net, const Dataset& data) {
  if (data.size() == 0) throw DataError(DataErrorKind::Empty, "training set is empty");
  if (data.classes > net.classes()) {
    throw ConfigError("dataset has " + std::to_string(data.classes) +
                      " classes, model has " + std::to_string(net.classes()));
  }
  if (!(data.shape == net.spec().arch.input)) {
    throw ConfigError("dataset images are " + data.shape.str() + ", model expects " +
                      net.spec().arch.input.str());
  }
}

}  // namespace

TrainHistory train(Network& net, const Dataset& data, const TrainConfig& config,
                   const Dataset* eval, const EpochCallback& on_epoch) {
  config.validate();
  check_dataset(net, data);
  Optimizer opt(config.optimizer);
  TrainHistory history;
  for (int e = 0; e < config.epochs; ++e) {
    Tally tally;
    const std::vector<Batch> batches = epoch_batches(data, config, e);
    for (std::size_t b = 0; b < batches.size(); ++b) {
      const ComplexMatrix x = net.encode_batch(data, batches[b].idx);
      const RealMatrix logits = net.forward(x);
      RealMatrix grad;
      const double ce = cross_entropy(logits, batches[b].labels, &grad);
      check_finite_loss(ce, "training", e + 1, b);
      net.zero_grad();
      net.backward(grad);
      opt.step(net.params());
      tally.add(ce, ce, 0.0, logits, batches[b].labels);
    }
    EpochRecord r = tally.record(e + 1);
    if (eval) r.eval_accuracy = evaluate(net, *eval, config.eval_threads);
    history.epochs.push_back(r);
    if (on_epoch) on_epoch("model", r);
  }
  return history;
}

MutualHistory mutual_train(Network& student, Network& teacher, const Dataset& data,
                           const TrainConfig& config, const Dataset* eval,
                           const EpochCallback& on_epoch) {
  config.validate();
  if (student.classes() != teacher.classes()) {
    throw ConfigError("mutual training needs equal class counts (" +
                      std::to_string(student.classes()) + " vs " +
                      std::to_string(teacher.classes()) + ")");
  }
  check_dataset(student, data);
  check_dataset(teacher, data);
  Optimizer opt_s(config.optimizer);
  Optimizer opt_t(config.optimizer);
  const bool use_kd = config.alpha > 0;
  MutualHistory history;
  for (int e = 0; e < config.epochs; ++e) {
    Tally ts, tt;
    const std::vector<Batch> batches = epoch_batches(data, config, e);
    for (std::size_t b = 0; b < batches.size(); ++b) {
      const Batch& batch = batches[b];
      const RealMatrix ls = student.forward(student.encode_batch(data, batch.idx));
      const RealMatrix lt = teacher.forward(teacher.encode_batch(data, batch.idx));

      RealMatrix gs, gt;
      const double ce_s = cross_entropy(ls, batch.labels, &gs);
      const double ce_t = cross_entropy(lt, batch.labels, &gt);
      double kd_s = 0.0, kd_t = 0.0;
      if (use_kd) {
        RealMatrix ks, kt;
        kd_s = kd_loss(ls, lt, config.temperature, config.kd_direction, &ks);
        kd_t = kd_loss(lt, ls, config.temperature, config.kd_direction, &kt);
        gs += config.alpha * ks;
        gt += config.alpha * kt;
      }
      const double loss_s = ce_s + config.alpha * kd_s;
      const double loss_t = ce_t + config.alpha * kd_t;
      check_finite_loss(loss_s, "student", e + 1, b);
      check_finite_loss(loss_t, "teacher", e + 1, b);

      student.zero_grad();
      student.backward(gs);
      opt_s.step(student.params());
      if (!config.freeze_teacher) {
        teacher.zero_grad();
        teacher.backward(gt);
        opt_t.step(teacher.params());
      }

      ts.add(loss_s, ce_s, kd_s, ls, batch.labels);
      tt.add(loss_t, ce_t, kd_t, lt, batch.labels);
    }
    EpochRecord rs = ts.record(e + 1);
    EpochRecord rt = tt.record(e + 1);
    if (eval) {
      rs.eval_accuracy = evaluate(student, *eval, config.eval_threads);
      rt.eval_accuracy = evaluate(teacher, *eval, config.eval_threads);
    }
    history.student.epochs.push_back(rs);
    history.teacher.epochs.push_back(rt);
    if (on_epoch) {
      on_epoch("student", rs);
      on_epoch("teacher", rt);
    }
  }
  return history;
}

}  // namespace oplixnet
