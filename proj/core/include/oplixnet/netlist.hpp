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

#include <filesystem>
#include <string>

#include "oplixnet/photonic.hpp"

namespace oplixnet {

// Netlist JSON for one compiled layer:
//   {"format": "oplixnet-netlist", "version": 1, "rows": m, "cols": n,
//    "global_scale": s, "attenuators": [...],
//    "v_mesh": {"width": n, "stages": [{"i": k, "theta": t, "phi": p}, ...],
//               "phase_screen": [...]},
//    "u_mesh": {...}}
// Doubles are written with round-trip precision.

std::string mesh_to_json(const MziMesh& mesh);
MziMesh mesh_from_json(const std::string& text);

std::string netlist_to_json(const PhotonicLayer& layer);
PhotonicLayer netlist_from_json(const std::string& text);

void write_netlist(const std::filesystem::path& path, const PhotonicLayer& layer);
PhotonicLayer read_netlist(const std::filesystem::path& path);

}  // namespace oplixnet
