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

#include "oplixnet/checkpoint.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>

#include "json.hpp"

#include "oplixnet/errors.hpp"

namespace oplixnet {

static_assert(std::endian::native == std::endian::little,
              "checkpoint I/O assumes a little-endian host");

namespace {

using nlohmann::json;

constexpr char kMagic[8] = {'O', 'P', 'L', 'X', 'C', 'K', 'P', 'T'};
constexpr std::uint32_t kVersion = 1;

json shape_json(Shape3 s) { return {s.height, s.width, s.channels}; }

Shape3 shape_from(const json& j) {
  if (!j.is_array() || j.size() != 3) throw ConfigError("shape must be [h, w, c]");
  return {j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

json spec_json(const ModelSpec& spec) {
  json layers = json::array();
  for (const LayerSpec& l : spec.arch.layers) layers.push_back(layer_to_string(l));
  json j;
  j["arch"] = {{"name", spec.arch.name},
               {"input", shape_json(spec.arch.input)},
               {"classes", spec.arch.classes},
               {"layers", layers},
               {"trainable", spec.arch.trainable}};
  j["flavor"] = flavor_name(spec.flavor);
  if (spec.scheme) {
    json s = {{"kind", scheme_code(spec.scheme->kind)},
              {"interlace_axis",
               spec.scheme->interlace_axis == PairAxis::Vertical ? "vertical" : "horizontal"}};
    if (spec.scheme->remap) {
      const RemapMatrix& r = *spec.scheme->remap;
      s["remap"] = {{r(0, 0), r(0, 1), r(0, 2)}, {r(1, 0), r(1, 1), r(1, 2)}};
    }
    j["scheme"] = s;
  }
  j["decoder"] = {{"kind", decoder_name(spec.decoder.kind)},
                  {"reference_amplitude", spec.decoder.reference_amplitude}};
  j["activation"] = spec.activation == ActivationKind::SplitRelu ? "split-relu" : "mod-relu";
  j["modrelu_offset"] = spec.modrelu_offset;
  j["use_bias"] = spec.use_bias;
  j["magnitude_detection"] = spec.magnitude_detection;
  return j;
}

ModelSpec spec_from(const json& j) {
  ModelSpec spec;
  const json& a = j.at("arch");
  spec.arch.name = a.at("name").get<std::string>();
  spec.arch.input = shape_from(a.at("input"));
  spec.arch.classes = a.at("classes").get<int>();
  for (const json& l : a.at("layers")) spec.arch.layers.push_back(parse_layer(l.get<std::string>()));
  spec.arch.trainable = a.value("trainable", true);
  spec.flavor = parse_flavor(j.at("flavor").get<std::string>());
  if (j.contains("scheme")) {
    const json& s = j["scheme"];
    AssignmentScheme scheme = AssignmentScheme::of(parse_scheme(s.at("kind").get<std::string>()));
    scheme.interlace_axis =
        s.value("interlace_axis", "vertical") == "horizontal" ? PairAxis::Horizontal
                                                              : PairAxis::Vertical;
    if (s.contains("remap")) {
      RemapMatrix r;
      for (int i = 0; i < 2; ++i) {
        for (int c = 0; c < 3; ++c) r(i, c) = s["remap"].at(i).at(c).get<double>();
      }
      scheme.remap = r;
    }
    spec.scheme = scheme;
  }
  spec.decoder.kind = parse_decoder(j.at("decoder").at("kind").get<std::string>());
  spec.decoder.reference_amplitude = j["decoder"].value("reference_amplitude", 1.0);
  const std::string act = j.value("activation", "split-relu");
  if (act == "split-relu") {
    spec.activation = ActivationKind::SplitRelu;
  } else if (act == "mod-relu") {
    spec.activation = ActivationKind::ModRelu;
  } else {
    throw ConfigError("unknown activation '" + act + "'");
  }
  spec.modrelu_offset = j.value("modrelu_offset", -0.1);
  spec.use_bias = j.value("use_bias", false);
  spec.magnitude_detection = j.value("magnitude_detection", false);
  spec.validate();
  return spec;
}

template <typename T>
void put(std::ofstream& os, T v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <typename T>
T get(std::istream& is, const std::string& what, const std::filesystem::path& path) {
  T v{};
  if (!is.read(reinterpret_cast<char*>(&v), sizeof v)) {
    throw DataError(DataErrorKind::Truncated,
                    path.string() + ": truncated checkpoint (" + what + ")");
  }
  return v;
}

}  // namespace

std::string model_spec_to_json(const ModelSpec& spec) { return spec_json(spec).dump(2); }

ModelSpec model_spec_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("model spec: ") + e.what());
  }
  try {
    return spec_from(j);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("model spec: ") + e.what());
  }
}

void save_checkpoint(const Network& net, const std::filesystem::path& path,
                     const std::string& note) {
  // params() hands out mutable views; nothing is written through them here.
  Network& n = const_cast<Network&>(net);
  const std::vector<ParamView> params = n.params();
  json meta;
  meta["model"] = spec_json(net.spec());
  meta["tensors"] = json::array();
  std::uint64_t count = 0;
  for (const ParamView& p : params) {
    meta["tensors"].push_back({{"name", p.name}, {"size", p.value.size()}});
    count += p.value.size();
  }
  meta["note"] = note;
  const std::string text = meta.dump();

  std::ofstream os(path, std::ios::binary);
  if (!os) throw DataError(DataErrorKind::Missing, "cannot write " + path.string());
  os.write(kMagic, sizeof kMagic);
  put<std::uint32_t>(os, kVersion);
  put<std::uint64_t>(os, text.size());
  os.write(text.data(), static_cast<std::streamsize>(text.size()));
  put<std::uint64_t>(os, count);
  for (const ParamView& p : params) {
    os.write(reinterpret_cast<const char*>(p.value.data()),
             static_cast<std::streamsize>(p.value.size() * sizeof(double)));
  }
  if (!os) throw DataError(DataErrorKind::Missing, "write failed: " + path.string());
}

Network load_checkpoint(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw DataError(DataErrorKind::Missing, "checkpoint not found: " + path.string());
  char magic[8];
  if (!is.read(magic, sizeof magic)) {
    throw DataError(DataErrorKind::Truncated, path.string() + ": truncated checkpoint (magic)");
  }
  if (std::memcmp(magic, kMagic, sizeof kMagic) != 0) {
    throw DataError(DataErrorKind::BadMagic, path.string() + " is not an oplixnet checkpoint");
  }
  const auto version = get<std::uint32_t>(is, "version", path);
  if (version != kVersion) {
    throw DataError(DataErrorKind::BadMagic,
                    path.string() + ": unsupported checkpoint version " + std::to_string(version));
  }
  const auto len = get<std::uint64_t>(is, "metadata length", path);
  if (len > (1u << 28)) {
    throw DataError(DataErrorKind::Truncated, path.string() + ": implausible metadata length");
  }
  std::string text(len, '\0');
  if (!is.read(text.data(), static_cast<std::streamsize>(len))) {
    throw DataError(DataErrorKind::Truncated, path.string() + ": truncated checkpoint (metadata)");
  }
  json meta;
  try {
    meta = json::parse(text);
  } catch (const json::exception& e) {
    throw DataError(DataErrorKind::BadMagic, path.string() + ": bad metadata: " + e.what());
  }
  ModelSpec spec = spec_from(meta.at("model"));
  Network net(spec, 0);
  std::vector<ParamView> params = net.params();
  const json& tensors = meta.at("tensors");
  if (tensors.size() != params.size()) {
    throw DataError(DataErrorKind::CountMismatch,
                    path.string() + ": tensor count does not match the model");
  }
  const auto count = get<std::uint64_t>(is, "value count", path);
  std::uint64_t expected = 0;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (tensors[i].at("name").get<std::string>() != params[i].name ||
        tensors[i].at("size").get<std::size_t>() != params[i].value.size()) {
      throw DataError(DataErrorKind::CountMismatch,
                      path.string() + ": tensor " + params[i].name + " does not match the model");
    }
    expected += params[i].value.size();
  }
  if (count != expected) {
    throw DataError(DataErrorKind::CountMismatch, path.string() + ": value count mismatch");
  }
  for (ParamView& p : params) {
    if (!is.read(reinterpret_cast<char*>(p.value.data()),
                 static_cast<std::streamsize>(p.value.size() * sizeof(double)))) {
      throw DataError(DataErrorKind::Truncated, path.string() + ": truncated checkpoint (values)");
    }
  }
  if (is.peek() != std::char_traits<char>::eof()) {
    throw DataError(DataErrorKind::CountMismatch, path.string() + ": trailing bytes");
  }
  return net;
}

}  // namespace oplixnet
