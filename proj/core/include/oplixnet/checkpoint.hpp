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

#include "oplixnet/model_spec.hpp"
#include "oplixnet/network.hpp"

namespace oplixnet {

/// ModelSpec as a JSON document (architecture inline, layers as strings).
std::string model_spec_to_json(const ModelSpec& spec);
ModelSpec model_spec_from_json(const std::string& text);

/// Binary container: magic "OPLXCKPT", u32 version, u64 metadata length,
/// JSON metadata (model spec, tensor names and sizes, `note`), u64 value
/// count, then the parameters as little-endian doubles.
void save_checkpoint(const Network& net, const std::filesystem::path& path,
                     const std::string& note = {});

/// Rebuilds the network from the stored spec and parameters. Throws
/// DataError for missing, truncated, or mismatched files.
Network load_checkpoint(const std::filesystem::path& path);

}  // namespace oplixnet
