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

#include "oplixnet/netlist.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "oplixnet/errors.hpp"

namespace oplixnet {
namespace {

using nlohmann::json;

json mesh_json(const MziMesh& mesh) {
  json stages = json::array();
  for (const MziSetting& s : mesh.stages) {
    stages.push_back({{"i", s.top}, {"theta", s.theta}, {"phi", s.phi}});
  }
  return {{"width", mesh.width},
          {"stages", std::move(stages)},
          {"phase_screen", mesh.phase_screen}};
}

MziMesh mesh_from(const json& j) {
  MziMesh mesh;
  mesh.width = j.at("width").get<int>();
  for (const json& s : j.at("stages")) {
    mesh.stages.push_back({s.at("i").get<int>(), s.at("theta").get<double>(),
                           s.at("phi").get<double>()});
  }
  mesh.phase_screen = j.at("phase_screen").get<std::vector<double>>();
  mesh.validate();
  return mesh;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("netlist: malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string mesh_to_json(const MziMesh& mesh) { return mesh_json(mesh).dump(1); }

MziMesh mesh_from_json(const std::string& text) {
  try {
    return mesh_from(parse(text));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("netlist: bad mesh: ") + e.what());
  }
}

std::string netlist_to_json(const PhotonicLayer& layer) {
  json j = {{"format", "oplixnet-netlist"},
            {"version", 1},
            {"rows", layer.rows},
            {"cols", layer.cols},
            {"global_scale", layer.global_scale},
            {"attenuators", layer.attenuators},
            {"v_mesh", mesh_json(layer.v_mesh)},
            {"u_mesh", mesh_json(layer.u_mesh)}};
  return j.dump(1);
}

PhotonicLayer netlist_from_json(const std::string& text) {
  const json j = parse(text);
  try {
    if (j.value("format", "") != "oplixnet-netlist") {
      throw ConfigError("netlist: missing format tag");
    }
    if (j.at("version").get<int>() != 1) {
      throw ConfigError("netlist: unsupported version " +
                        j.at("version").dump());
    }
    PhotonicLayer layer;
    layer.rows = j.at("rows").get<int>();
    layer.cols = j.at("cols").get<int>();
    layer.global_scale = j.at("global_scale").get<double>();
    layer.attenuators = j.at("attenuators").get<std::vector<double>>();
    layer.v_mesh = mesh_from(j.at("v_mesh"));
    layer.u_mesh = mesh_from(j.at("u_mesh"));
    layer.validate();
    return layer;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("netlist: ") + e.what());
  }
}

void write_netlist(const std::filesystem::path& path, const PhotonicLayer& layer) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write netlist " + path.string());
  out << netlist_to_json(layer) << '\n';
}

PhotonicLayer read_netlist(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read netlist " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return netlist_from_json(ss.str());
}

}  // namespace oplixnet
