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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "oplixnet/area.hpp"
#include "oplixnet/data_io.hpp"
#include "oplixnet/model_spec.hpp"

namespace oplixnet::cli {

enum ExitCode : int {
  kOk = 0,
  kOther = 1,
  kConfig = 2,
  kData = 3,
  kVerification = 4,
  kDiverged = 5,
};

struct Globals {
  std::uint64_t seed = 1;
  std::filesystem::path data_dir;
  std::filesystem::path out_dir = "out";
  std::string device_profile = "2dc2ps";
  int threads = 1;
};

/// Model selection shared by the subcommands.
struct ModelArgs {
  std::string model;       // zoo name with optional -cvnn/-scvnn/-rvnn, or a file
  std::string assignment;  // empty: default for the flavor
  std::string decoder;     // empty: merge
  std::string activation;  // empty: split-relu
  double reference = 1.0;
  bool bias = false;
  bool magnitude = false;
};

struct TrainArgs {
  int epochs = 10;
  int batch_size = 64;
  double lr = 1e-3;
  std::string optimizer = "adam";
  double momentum = 0.9;
  int subset = 0;       // per class, 0 = all
  int eval_subset = 0;  // per class, 0 = all
  std::string name;     // output stem
};

struct DistillArgs {
  double alpha = 1.0;
  double temperature = 1.0;
  std::string kd_direction = "student-first";
};

/// Records what ran, collecting output files as they are written.
class Manifest {
 public:
  Manifest(std::string command, std::vector<std::string> argv, const Globals& g);

  nlohmann::ordered_json& config() { return config_; }
  void output(const std::filesystem::path& p);
  void result(const std::string& key, nlohmann::ordered_json value);
  /// Writes <out>/<command>.manifest.json.
  void write() const;

 private:
  std::string command_;
  std::vector<std::string> argv_;
  Globals globals_;
  std::string started_;
  nlohmann::ordered_json config_ = nlohmann::ordered_json::object();
  nlohmann::ordered_json results_ = nlohmann::ordered_json::object();
  std::vector<std::string> outputs_;
};

/// count: without --assignment and without a flavor suffix the
/// conventional network is reported.
ModelSpec resolve_model(const ModelArgs& args, bool default_to_conventional);
Dataset load_dataset(const Architecture& arch, const std::filesystem::path& dir,
                     const std::string& split);

int cmd_count(const Globals& g, const ModelArgs& m, Manifest& manifest);
int cmd_train(const Globals& g, const ModelArgs& m, const TrainArgs& t, Manifest& manifest);
int cmd_distill(const Globals& g, const ModelArgs& student, const ModelArgs& teacher,
                const TrainArgs& t, const DistillArgs& d, Manifest& manifest);
int cmd_eval(const Globals& g, const std::filesystem::path& checkpoint,
             const std::string& split, int subset, Manifest& manifest);
int cmd_compile(const Globals& g, const std::filesystem::path& checkpoint,
                Manifest& manifest);
int cmd_simulate(const Globals& g, const std::filesystem::path& checkpoint,
                 const std::filesystem::path& netlists, int images, double tolerance,
                 Manifest& manifest);
int cmd_report(const Globals& g, Manifest& manifest);

}  // namespace oplixnet::cli
