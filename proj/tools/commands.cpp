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

#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "oplixnet/checkpoint.hpp"
#include "oplixnet/errors.hpp"
#include "oplixnet/hardware.hpp"
#include "oplixnet/kv_config.hpp"
#include "oplixnet/netlist.hpp"
#include "oplixnet/network.hpp"
#include "oplixnet/random.hpp"
#include "oplixnet/train.hpp"

namespace oplixnet::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

// Seed streams derived from --seed.
constexpr std::uint64_t kInitStream = 1;
constexpr std::uint64_t kSubsetStream = 2;
constexpr std::uint64_t kShuffleStream = 3;
constexpr std::uint64_t kTeacherInitStream = 4;

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void write_text(const fs::path& p, const std::string& text) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream os(p, std::ios::binary);
  if (!os) throw DataError(DataErrorKind::Missing, "cannot write " + p.string());
  os << text;
}

std::string pct(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", 100.0 * r);
  return buf;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

ActivationKind parse_activation(const std::string& s) {
  if (s == "split-relu" || s.empty()) return ActivationKind::SplitRelu;
  if (s == "mod-relu") return ActivationKind::ModRelu;
  throw ConfigError("unknown activation '" + s + "' (split-relu, mod-relu)");
}

std::string spec_tag(const ModelSpec& spec) {
  std::string tag = spec.arch.name;
  if (spec.flavor == Flavor::SCVNN) {
    tag += "-" + scheme_code(spec.scheme->kind) + "-" + decoder_name(spec.decoder.kind);
  } else {
    std::string f = flavor_name(spec.flavor);
    std::transform(f.begin(), f.end(), f.begin(), [](unsigned char c) { return std::tolower(c); });
    tag += "-" + f;
  }
  return tag;
}

ordered_json spec_summary(const ModelSpec& spec) {
  ordered_json j;
  j["model"] = spec.arch.name;
  j["flavor"] = flavor_name(spec.flavor);
  j["assignment"] = spec.scheme ? scheme_code(spec.scheme->kind) : "none";
  j["decoder"] = spec.flavor == Flavor::SCVNN ? decoder_name(spec.decoder.kind) : "photodiode";
  j["activation"] = spec.activation == ActivationKind::SplitRelu ? "split-relu" : "mod-relu";
  j["bias"] = spec.use_bias;
  j["magnitude_detection"] = spec.magnitude_detection;
  return j;
}

TrainConfig train_config(const Globals& g, const TrainArgs& t) {
  TrainConfig c;
  c.epochs = t.epochs;
  c.batch_size = t.batch_size;
  c.optimizer.kind = parse_optimizer(t.optimizer);
  c.optimizer.lr = t.lr;
  c.optimizer.momentum = t.momentum;
  c.seed = derive_seed(g.seed, kShuffleStream);
  c.eval_threads = g.threads;
  return c;
}

ordered_json train_summary(const TrainConfig& c, const TrainArgs& t) {
  ordered_json j;
  j["epochs"] = c.epochs;
  j["batch_size"] = c.batch_size;
  j["optimizer"] = optimizer_name(c.optimizer.kind);
  j["lr"] = c.optimizer.lr;
  if (c.optimizer.kind == OptimizerKind::Sgd) j["momentum"] = c.optimizer.momentum;
  j["subset_per_class"] = t.subset;
  j["eval_subset_per_class"] = t.eval_subset;
  return j;
}

void progress(const std::string& who, const EpochRecord& r) {
  std::fprintf(stderr, "[%s] epoch %d  loss %.5f  ce %.5f  kd %.5f  train %.4f", who.c_str(),
               r.epoch, r.loss, r.ce, r.kd, r.train_accuracy);
  if (r.eval_accuracy >= 0) std::fprintf(stderr, "  eval %.4f", r.eval_accuracy);
  std::fprintf(stderr, "\n");
}

std::pair<Dataset, Dataset> train_and_eval_sets(const Globals& g, const Architecture& arch,
                                                const TrainArgs& t) {
  Dataset train_set = load_dataset(arch, g.data_dir, "train");
  Dataset test_set = load_dataset(arch, g.data_dir, "test");
  if (t.subset > 0) train_set = subset(train_set, t.subset, derive_seed(g.seed, kSubsetStream));
  if (t.eval_subset > 0) {
    test_set = subset(test_set, t.eval_subset, derive_seed(g.seed, kSubsetStream + 100));
  }
  return {std::move(train_set), std::move(test_set)};
}

std::string layer_file(const Layer& l) {
  return l.label() + (l.kind() == OpKind::DecoderUnitary ? ".mesh.json" : ".netlist.json");
}

}  // namespace

// ---------------------------------------------------------------- manifest

Manifest::Manifest(std::string command, std::vector<std::string> argv, const Globals& g)
    : command_(std::move(command)), argv_(std::move(argv)), globals_(g), started_(utc_now()) {}

void Manifest::output(const fs::path& p) { outputs_.push_back(p.string()); }

void Manifest::result(const std::string& key, ordered_json value) {
  results_[key] = std::move(value);
}

void Manifest::write() const {
  ordered_json j;
  j["tool"] = "oplixnet";
  j["version"] = OPLIXNET_VERSION_STRING;
  j["command"] = command_;
  j["argv"] = argv_;
  j["globals"] = {{"seed", globals_.seed},
                  {"data_dir", globals_.data_dir.string()},
                  {"out_dir", globals_.out_dir.string()},
                  {"device_profile", globals_.device_profile},
                  {"threads", globals_.threads}};
  j["config"] = config_;
  j["results"] = results_;
  j["outputs"] = outputs_;
  j["started_at"] = started_;
  j["finished_at"] = utc_now();
  write_text(globals_.out_dir / (command_ + ".manifest.json"), j.dump(2) + "\n");
}

// ---------------------------------------------------------------- models & data

ModelSpec resolve_model(const ModelArgs& a, bool default_to_conventional) {
  if (a.model.empty()) throw ConfigError("--model is required");
  ModelSpec spec;
  std::optional<Flavor> flavor;
  std::string assignment = a.assignment;
  std::string decoder = a.decoder;
  std::string activation = a.activation;

  if (fs::is_regular_file(a.model)) {
    const KvTable t = read_kv_file(a.model);
    spec.arch = architecture_from_kv(t);
    auto str = [&](const char* key) -> std::string {
      auto it = t.find(key);
      return it == t.end() ? std::string() : it->second.as_string(key);
    };
    if (const std::string f = str("flavor"); !f.empty()) flavor = parse_flavor(f);
    if (assignment.empty()) assignment = str("assignment");
    if (decoder.empty()) decoder = str("decoder");
    if (activation.empty()) activation = str("activation");
  } else {
    std::string base = a.model;
    for (const auto& [suffix, f] : {std::pair{"-scvnn", Flavor::SCVNN},
                                    std::pair{"-cvnn", Flavor::CVNN},
                                    std::pair{"-rvnn", Flavor::RVNN}}) {
      if (ends_with(base, suffix)) {
        base.resize(base.size() - std::string(suffix).size());
        flavor = f;
        break;
      }
    }
    spec.arch = zoo_architecture(base);
  }

  if (!flavor) {
    flavor = (assignment.empty() && default_to_conventional) ? Flavor::CVNN : Flavor::SCVNN;
  }
  spec.flavor = *flavor;
  if (spec.flavor == Flavor::SCVNN) {
    spec.scheme = AssignmentScheme::of(parse_scheme(assignment.empty() ? "si" : assignment));
    spec.decoder.kind = parse_decoder(decoder.empty() ? "merge" : decoder);
    spec.decoder.reference_amplitude = a.reference;
  } else if (!assignment.empty()) {
    throw ConfigError("--assignment applies to SCVNN models only");
  }
  spec.activation = parse_activation(activation);
  spec.use_bias = a.bias;
  spec.magnitude_detection = a.magnitude;
  spec.validate();
  return spec;
}

Dataset load_dataset(const Architecture& arch, const fs::path& dir, const std::string& split) {
  const Shape3 s = arch.input;
  if (s.channels == 1 && arch.classes == 10) {
    if (28 % s.height != 0 || s.height != s.width) {
      throw ConfigError(arch.name + ": no MNIST variant with input " + s.str());
    }
    Dataset d = load_mnist(dir, split);
    return downsample(d, 28 / s.height);
  }
  if (s.channels == 3 && s.height == 32 && s.width == 32) {
    if (arch.classes == 10) return load_cifar_dir(dir, CifarVariant::Cifar10, split);
    if (arch.classes == 100) return load_cifar_dir(dir, CifarVariant::Cifar100, split);
  }
  throw ConfigError(arch.name + ": no dataset for input " + s.str() + " with " +
                    std::to_string(arch.classes) + " classes");
}

// ---------------------------------------------------------------- count

int cmd_count(const Globals& g, const ModelArgs& m, Manifest& manifest) {
  const ModelSpec spec = resolve_model(m, true);
  const DeviceProfile profile = DeviceProfile::parse(g.device_profile);
  const AreaReport r = area_report(spec, profile);
  manifest.config()["model"] = spec_summary(spec);

  const std::string stem = "count_" + spec_tag(spec);
  const fs::path csv = g.out_dir / (stem + ".csv");
  const fs::path js = g.out_dir / (stem + ".json");
  write_text(csv, to_csv(r));
  write_text(js, to_json(r) + "\n");
  manifest.output(csv);
  manifest.output(js);

  std::cout << "model " << r.model << "  flavor " << r.flavor << "  assignment " << r.scheme
            << "  decoder " << r.decoder << "  profile " << r.profile.name << "\n";
  std::cout << "  layer            rows   cols      MZIs\n";
  for (const LayerArea& l : r.layers) {
    std::printf("  %-14s %6d %6d %9lld\n", l.label.c_str(), l.rows, l.cols,
                static_cast<long long>(l.mzis));
  }
  std::printf("  total MZIs %lld (%s x10^4)   baseline %lld (%s x10^4)   reduction %s\n",
              static_cast<long long>(r.mzi_count), format_e4(r.mzi_count).c_str(),
              static_cast<long long>(r.baseline_mzi_count),
              format_e4(r.baseline_mzi_count).c_str(), pct(r.reduction_ratio).c_str());
  if (r.mzi_count_without_merge_doubling != r.mzi_count) {
    std::printf("  without merge doubling: %lld MZIs, reduction %s\n",
                static_cast<long long>(r.mzi_count_without_merge_doubling),
                pct(r.reduction_without_merge_doubling).c_str());
  }
  std::printf("  DCs %lld  PSs %lld  (encoder DCs %lld)\n", static_cast<long long>(r.dc_count),
              static_cast<long long>(r.ps_count), static_cast<long long>(r.encoder_dcs));
  manifest.result("mzi_count", r.mzi_count);
  manifest.result("baseline_mzi_count", r.baseline_mzi_count);
  manifest.result("reduction_ratio", r.reduction_ratio);
  return kOk;
}

// ---------------------------------------------------------------- train / distill / eval

int cmd_train(const Globals& g, const ModelArgs& m, const TrainArgs& t, Manifest& manifest) {
  const ModelSpec spec = resolve_model(m, false);
  const TrainConfig config = train_config(g, t);
  manifest.config()["model"] = spec_summary(spec);
  manifest.config()["train"] = train_summary(config, t);

  auto [train_set, test_set] = train_and_eval_sets(g, spec.arch, t);
  Network net(spec, derive_seed(g.seed, kInitStream));
  const TrainHistory h = train(net, train_set, config, &test_set, progress);

  const std::string stem = t.name.empty() ? spec_tag(spec) : t.name;
  const fs::path ckpt = g.out_dir / (stem + ".ckpt");
  const fs::path hist = g.out_dir / (stem + ".history.csv");
  fs::create_directories(g.out_dir);
  save_checkpoint(net, ckpt, spec_tag(spec));
  write_text(hist, h.to_csv());
  manifest.output(ckpt);
  manifest.output(hist);

  const double acc = h.epochs.empty() ? evaluate(net, test_set, g.threads)
                                      : h.epochs.back().eval_accuracy;
  std::printf("%s test accuracy %.4f (%zu images)\n", stem.c_str(), acc, test_set.size());
  manifest.result("test_accuracy", acc);
  return kOk;
}

int cmd_distill(const Globals& g, const ModelArgs& sm, const ModelArgs& tm, const TrainArgs& t,
                const DistillArgs& d, Manifest& manifest) {
  const ModelSpec student_spec = resolve_model(sm, false);
  const ModelSpec teacher_spec = resolve_model(tm, false);
  if (!(student_spec.arch.input == teacher_spec.arch.input) ||
      student_spec.arch.classes != teacher_spec.arch.classes) {
    throw ConfigError("student and teacher must share input shape and class count");
  }
  TrainConfig config = train_config(g, t);
  config.alpha = d.alpha;
  config.temperature = d.temperature;
  if (d.kd_direction == "student-first") {
    config.kd_direction = KdDirection::StudentFirst;
  } else if (d.kd_direction == "teacher-first") {
    config.kd_direction = KdDirection::TeacherFirst;
  } else {
    throw ConfigError("--kd-direction must be student-first or teacher-first");
  }
  manifest.config()["student"] = spec_summary(student_spec);
  manifest.config()["teacher"] = spec_summary(teacher_spec);
  ordered_json tj = train_summary(config, t);
  tj["alpha"] = config.alpha;
  tj["temperature"] = config.temperature;
  tj["kd_direction"] = d.kd_direction;
  manifest.config()["train"] = tj;

  auto [train_set, test_set] = train_and_eval_sets(g, student_spec.arch, t);
  Network student(student_spec, derive_seed(g.seed, kInitStream));
  Network teacher(teacher_spec, derive_seed(g.seed, kTeacherInitStream));
  const MutualHistory h = mutual_train(student, teacher, train_set, config, &test_set, progress);

  const std::string stem = t.name.empty() ? spec_tag(student_spec) + "-ml" : t.name;
  fs::create_directories(g.out_dir);
  const std::pair<const char*, std::pair<const Network*, const TrainHistory*>> parts[] = {
      {"student", {&student, &h.student}}, {"teacher", {&teacher, &h.teacher}}};
  for (const auto& [who, p] : parts) {
    const fs::path ckpt = g.out_dir / (stem + "." + who + ".ckpt");
    const fs::path hist = g.out_dir / (stem + "." + who + ".history.csv");
    save_checkpoint(*p.first, ckpt, spec_tag(p.first->spec()));
    write_text(hist, p.second->to_csv());
    manifest.output(ckpt);
    manifest.output(hist);
    const double acc = p.second->epochs.empty() ? evaluate(*p.first, test_set, g.threads)
                                                : p.second->epochs.back().eval_accuracy;
    std::printf("%s %s test accuracy %.4f\n", who, spec_tag(p.first->spec()).c_str(), acc);
    manifest.result(std::string(who) + "_test_accuracy", acc);
  }
  return kOk;
}

int cmd_eval(const Globals& g, const fs::path& checkpoint, const std::string& split, int n,
             Manifest& manifest) {
  const Network net = load_checkpoint(checkpoint);
  manifest.config()["checkpoint"] = checkpoint.string();
  manifest.config()["model"] = spec_summary(net.spec());
  manifest.config()["split"] = split;
  Dataset data = load_dataset(net.spec().arch, g.data_dir, split);
  if (n > 0) data = subset(data, n, derive_seed(g.seed, kSubsetStream + 100));
  const double acc = evaluate(net, data, g.threads);
  std::printf("%s %s accuracy %.4f (%zu images)\n", spec_tag(net.spec()).c_str(), split.c_str(),
              acc, data.size());
  manifest.result("accuracy", acc);
  manifest.result("images", data.size());
  return kOk;
}

// ---------------------------------------------------------------- compile / simulate

int cmd_compile(const Globals& g, const fs::path& checkpoint, Manifest& manifest) {
  const Network net = load_checkpoint(checkpoint);
  manifest.config()["checkpoint"] = checkpoint.string();
  manifest.config()["model"] = spec_summary(net.spec());
  const CompiledNetwork hw = compile_network(net);
  fs::create_directories(g.out_dir);

  ordered_json layers = ordered_json::array();
  std::cout << "  layer            rows   cols   stages   scale\n";
  for (const CompiledLayer& c : hw.layers) {
    const fs::path p = g.out_dir / layer_file(net.layer(c.index));
    ordered_json lj;
    lj["label"] = c.label;
    lj["file"] = p.filename().string();
    if (c.optics) {
      write_netlist(p, *c.optics);
      const std::size_t stages = c.optics->v_mesh.stages.size() + c.optics->u_mesh.stages.size();
      std::printf("  %-14s %6d %6d %8zu   %.6g\n", c.label.c_str(), c.optics->rows,
                  c.optics->cols, stages, c.optics->global_scale);
      lj["rows"] = c.optics->rows;
      lj["cols"] = c.optics->cols;
      lj["mzi_stages"] = stages;
      lj["global_scale"] = c.optics->global_scale;
    } else {
      write_text(p, mesh_to_json(*c.mesh) + "\n");
      std::printf("  %-14s %6d %6d %8zu   unitary\n", c.label.c_str(), c.mesh->width,
                  c.mesh->width, c.mesh->stages.size());
      lj["rows"] = c.mesh->width;
      lj["cols"] = c.mesh->width;
      lj["mzi_stages"] = c.mesh->stages.size();
    }
    manifest.output(p);
    layers.push_back(lj);
  }
  // Round-trip check of what was just written.
  double worst = 0.0;
  for (const LayerMismatch& mm : check_compiled(net, hw, 0.0)) {
    worst = std::max(worst, mm.max_abs_error);
  }
  std::printf("compiled %zu layers; max weight reconstruction error %.3e\n", hw.layers.size(),
              worst);
  manifest.result("layers", layers);
  manifest.result("max_weight_error", worst);
  return kOk;
}

int cmd_simulate(const Globals& g, const fs::path& checkpoint, const fs::path& netlists,
                 int images, double tolerance, Manifest& manifest) {
  const Network net = load_checkpoint(checkpoint);
  const fs::path dir = netlists.empty() ? g.out_dir : netlists;
  manifest.config()["checkpoint"] = checkpoint.string();
  manifest.config()["netlists"] = dir.string();
  manifest.config()["images"] = images;
  manifest.config()["tolerance"] = tolerance;

  CompiledNetwork hw;
  for (std::size_t i = 0; i < net.size(); ++i) {
    const Layer& l = net.layer(i);
    const bool weighted = l.kind() == OpKind::Dense || l.kind() == OpKind::Conv ||
                          l.kind() == OpKind::DecoderLinear;
    if (!weighted && l.kind() != OpKind::DecoderUnitary) continue;
    const fs::path p = dir / layer_file(l);
    if (!fs::exists(p)) throw DataError(DataErrorKind::Missing, "missing netlist " + p.string());
    CompiledLayer c;
    c.index = i;
    c.label = l.label();
    c.kind = l.kind();
    if (weighted) {
      c.optics = read_netlist(p);
    } else {
      std::ifstream is(p);
      std::stringstream ss;
      ss << is.rdbuf();
      c.mesh = mesh_from_json(ss.str());
    }
    hw.layers.push_back(std::move(c));
  }

  Dataset data = load_dataset(net.spec().arch, g.data_dir, "test");
  std::vector<std::size_t> idx(std::min<std::size_t>(static_cast<std::size_t>(images), data.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  const ComplexMatrix x = net.encode_batch(data, idx);
  const RealMatrix sw = net.infer(x);
  const RealMatrix hl = hardware_logits(net, hw, x);
  const double dev = (sw - hl).cwiseAbs().maxCoeff();
  const double agree = [&] {
    const auto a = predictions(sw), b = predictions(hl);
    std::size_t same = 0;
    for (std::size_t i = 0; i < a.size(); ++i) same += a[i] == b[i];
    return static_cast<double>(same) / static_cast<double>(a.size());
  }();
  std::printf("simulated %zu images: max logit deviation %.3e (tolerance %.1e), argmax agreement %.4f\n",
              idx.size(), dev, tolerance, agree);
  manifest.result("max_logit_deviation", dev);
  manifest.result("argmax_agreement", agree);

  if (!(dev <= tolerance)) {
    const std::vector<LayerMismatch> bad = check_compiled(net, hw, 1e-9);
    std::string where = "no single layer identified";
    int layer_pos = -1, stage = -1;
    if (!bad.empty()) {
      const LayerMismatch& b = bad.front();
      for (std::size_t i = 0; i < hw.layers.size(); ++i) {
        if (hw.layers[i].label == b.label) layer_pos = static_cast<int>(i);
      }
      stage = b.stage;
      where = "layer " + b.label + ", " + b.mesh +
              (b.stage >= 0 ? " stage " + std::to_string(b.stage) : std::string()) +
              " (weight error " + std::to_string(b.max_abs_error) + ")";
    }
    manifest.result("failure", where);
    throw VerificationError("verification failed: logit deviation " + std::to_string(dev) +
                                " exceeds " + std::to_string(tolerance) + "; " + where,
                            layer_pos, stage);
  }
  return kOk;
}

// ---------------------------------------------------------------- report

int cmd_report(const Globals& g, Manifest& manifest) {
  const DeviceProfile profile = DeviceProfile::parse(g.device_profile);
  std::ostringstream area, dec;
  area << "# MZI counts per zoo model and assignment; device profile " << profile.name << "\n";
  area << "model,assignment,decoder,mzis,mzis_e4,baseline_mzis,baseline_e4,reduction_pct\n";
  dec << "# decoder overhead relative to the coherent head\n";
  dec << "model,assignment,decoder,mzis,overhead_vs_coherent,overhead_pct_of_total,"
         "needs_reference,needs_post_processing\n";
  char buf[256];

  for (const std::string& name : zoo_names()) {
    const Architecture arch = zoo_architecture(name);
    const std::vector<SchemeKind> schemes =
        arch.input.channels == 1
            ? std::vector<SchemeKind>{SchemeKind::SpatialInterlace, SchemeKind::SpatialHalfHalf,
                                      SchemeKind::SpatialSymmetric}
            : std::vector<SchemeKind>{SchemeKind::SpatialInterlace, SchemeKind::SpatialHalfHalf,
                                      SchemeKind::SpatialSymmetric, SchemeKind::ChannelLossless,
                                      SchemeKind::ChannelRemapping};
    for (SchemeKind sk : schemes) {
      ModelSpec spec = conventional_spec(arch);
      spec.flavor = Flavor::SCVNN;
      spec.scheme = AssignmentScheme::of(sk);
      spec.decoder.kind = DecoderKind::Merge;
      AreaReport r;
      try {
        r = area_report(spec, profile);
      } catch (const ConfigError&) {
        continue;  // scheme does not fit this input
      }
      std::snprintf(buf, sizeof buf, "%s,%s,merge,%lld,%s,%lld,%s,%.2f\n", name.c_str(),
                    scheme_code(sk).c_str(), static_cast<long long>(r.mzi_count),
                    format_e4(r.mzi_count).c_str(), static_cast<long long>(r.baseline_mzi_count),
                    format_e4(r.baseline_mzi_count).c_str(), 100.0 * r.reduction_ratio);
      area << buf;
    }

    const SchemeKind primary =
        arch.input.channels == 1 ? SchemeKind::SpatialInterlace : SchemeKind::ChannelLossless;
    ModelSpec spec = conventional_spec(arch);
    spec.flavor = Flavor::SCVNN;
    spec.scheme = AssignmentScheme::of(primary);
    spec.decoder.kind = DecoderKind::Coherent;
    const AreaReport coherent = area_report(spec, profile);
    for (DecoderKind dk : {DecoderKind::Merge, DecoderKind::Linear, DecoderKind::Unitary,
                           DecoderKind::Coherent}) {
      spec.decoder.kind = dk;
      const AreaReport r = area_report(spec, profile);
      const long long over = static_cast<long long>(r.mzi_count - coherent.mzi_count);
      std::snprintf(buf, sizeof buf, "%s,%s,%s,%lld,%lld,%.4f,%s,%s\n", name.c_str(),
                    scheme_code(primary).c_str(), decoder_name(dk).c_str(),
                    static_cast<long long>(r.mzi_count), over,
                    100.0 * static_cast<double>(over) / static_cast<double>(r.mzi_count),
                    r.needs_reference ? "yes" : "no", r.needs_post_processing ? "yes" : "no");
      dec << buf;
    }
  }
  const fs::path a = g.out_dir / "report_area.csv";
  const fs::path d = g.out_dir / "report_decoders.csv";
  write_text(a, area.str());
  write_text(d, dec.str());
  manifest.output(a);
  manifest.output(d);
  std::cout << area.str() << "\n" << dec.str();
  return kOk;
}

}  // namespace oplixnet::cli
