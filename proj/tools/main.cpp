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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "json.hpp"
#include "oplixnet/data_io.hpp"
#include "oplixnet/errors.hpp"

namespace {

using namespace oplixnet;
using namespace oplixnet::cli;

void add_model_options(CLI::App* app, ModelArgs& m, const std::string& prefix = "") {
  const std::string p = prefix.empty() ? "--" : "--" + prefix + "-";
  app->add_option(p + "model", m.model,
                  "Zoo name (fcnn, fcnn-m1..m4, lenet5, resnet20, resnet32, resnet56), "
                  "optionally suffixed -cvnn/-scvnn/-rvnn, or a key/value model file")
      ->required();
  app->add_option(p + "assignment", m.assignment, "Assignment scheme: si, sh, ss, cl, cr");
  app->add_option(p + "decoder", m.decoder, "Decoder: merge, linear, unitary, coherent");
  app->add_option(p + "activation", m.activation, "split-relu or mod-relu");
  app->add_option(p + "reference", m.reference, "Coherent decoder reference amplitude");
  app->add_flag(p + "bias", m.bias, "Add software biases to weight layers");
  app->add_flag(p + "magnitude", m.magnitude, "Use |z| instead of |z|^2 as logits");
}

void add_train_options(CLI::App* app, TrainArgs& t) {
  app->add_option("--epochs", t.epochs, "Training epochs")->capture_default_str();
  app->add_option("--batch-size", t.batch_size, "Mini-batch size")->capture_default_str();
  app->add_option("--lr", t.lr, "Learning rate")->capture_default_str();
  app->add_option("--optimizer", t.optimizer, "adam or sgd")->capture_default_str();
  app->add_option("--momentum", t.momentum, "SGD momentum")->capture_default_str();
  app->add_option("--subset", t.subset, "Training images per class (0 = all)");
  app->add_option("--eval-subset", t.eval_subset, "Test images per class (0 = all)");
  app->add_option("--name", t.name, "Output file stem");
}

int run(const std::vector<std::string>& args);

int dispatch(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args);
}

int run(const std::vector<std::string>& args) {
  CLI::App app{"oplixnet: split complex-valued optical neural networks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", OPLIXNET_VERSION_STRING);

  Globals g;
  std::string data_dir;
  app.add_option("--seed", g.seed, "Seed for every random stream of the run")->capture_default_str();
  app.add_option("--data-dir", data_dir, "Dataset directory (default: $OPLIXNET_DATA or ./data)");
  app.add_option("--out-dir", g.out_dir, "Output directory")->capture_default_str();
  app.add_option("--device-profile", g.device_profile, "2dc2ps or 2dc1ps")
      ->check(CLI::IsMember({"2dc2ps", "2dc1ps"}))
      ->capture_default_str();
  app.add_option("--threads", g.threads, "Threads for evaluation")->check(CLI::PositiveNumber);

  ModelArgs model, teacher;
  TrainArgs train;
  DistillArgs distill;
  std::string checkpoint, split = "test", netlists, manifest_path;
  int eval_subset = 0, images = 100;
  double tolerance = 1e-5;

  auto* count = app.add_subcommand("count", "MZI / device counts for a model");
  add_model_options(count, model);

  auto* tr = app.add_subcommand("train", "Train a model and write a checkpoint");
  add_model_options(tr, model);
  add_train_options(tr, train);

  auto* ds = app.add_subcommand("distill", "Mutual learning of a student and a teacher");
  add_model_options(ds, model, "student");
  add_model_options(ds, teacher, "teacher");
  add_train_options(ds, train);
  ds->add_option("--alpha", distill.alpha, "KD mixing factor")->capture_default_str();
  ds->add_option("--temperature", distill.temperature, "KD temperature")->capture_default_str();
  ds->add_option("--kd-direction", distill.kd_direction, "student-first or teacher-first")
      ->capture_default_str();

  auto* ev = app.add_subcommand("eval", "Accuracy of a checkpoint");
  ev->add_option("--checkpoint", checkpoint, "Checkpoint file")->required();
  ev->add_option("--split", split, "train or test")->capture_default_str();
  ev->add_option("--subset", eval_subset, "Images per class (0 = all)");

  auto* cp = app.add_subcommand("compile", "Compile a checkpoint to MZI mesh netlists");
  cp->add_option("--checkpoint", checkpoint, "Checkpoint file")->required();

  auto* sim = app.add_subcommand("simulate", "Compare mesh inference with software inference");
  sim->add_option("--checkpoint", checkpoint, "Checkpoint file")->required();
  sim->add_option("--netlists", netlists, "Directory of netlists (default: --out-dir)");
  sim->add_option("--images", images, "Test images to run")->capture_default_str();
  sim->add_option("--tolerance", tolerance, "Maximum logit deviation")->capture_default_str();

  auto* rp = app.add_subcommand("report", "Area and decoder tables for the whole zoo");

  auto* replay = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  replay->add_option("manifest", manifest_path, "Manifest JSON")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfig;
  }

  g.data_dir = data_dir.empty() ? default_data_dir() : std::filesystem::path(data_dir);

  try {
    if (*replay) {
      std::ifstream is(manifest_path);
      if (!is) throw DataError(DataErrorKind::Missing, "manifest not found: " + manifest_path);
      const nlohmann::json j = nlohmann::json::parse(is);
      const std::vector<std::string> recorded = j.at("argv").get<std::vector<std::string>>();
      if (!recorded.empty() && recorded.front() == "replay") {
        throw ConfigError("a replay manifest cannot be replayed");
      }
      return run(recorded);
    }
    CLI::App* sub = app.get_subcommands().front();
    Manifest manifest(sub->get_name(), args, g);
    int rc = kOk;
    try {
      if (sub == count) {
        rc = cmd_count(g, model, manifest);
      } else if (sub == tr) {
        rc = cmd_train(g, model, train, manifest);
      } else if (sub == ds) {
        rc = cmd_distill(g, model, teacher, train, distill, manifest);
      } else if (sub == ev) {
        rc = cmd_eval(g, checkpoint, split, eval_subset, manifest);
      } else if (sub == cp) {
        rc = cmd_compile(g, checkpoint, manifest);
      } else if (sub == sim) {
        rc = cmd_simulate(g, checkpoint, netlists, images, tolerance, manifest);
      } else if (sub == rp) {
        rc = cmd_report(g, manifest);
      }
    } catch (const VerificationError&) {
      manifest.write();
      throw;
    }
    manifest.write();
    return rc;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kConfig;
  } catch (const DataError& e) {
    std::fprintf(stderr, "data error: %s\n", e.what());
    return kData;
  } catch (const VerificationError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kVerification;
  } catch (const NumericalError& e) {
    std::fprintf(stderr, "numerical error: %s\n", e.what());
    return kDiverged;
  } catch (const nlohmann::json::exception& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kOther;
  }
}

}  // namespace

int main(int argc, char** argv) { return dispatch(argc, argv); }
