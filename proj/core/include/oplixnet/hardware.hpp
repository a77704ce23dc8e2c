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

#include <optional>
#include <string>
#include <vector>

#include "oplixnet/network.hpp"
#include "oplixnet/photonic.hpp"

namespace oplixnet {

/// Optical realisation of one weight layer of a Network. Dense and conv
/// weights go through SVD compilation; a unitary decoder already is a mesh.
struct CompiledLayer {
  std::size_t index = 0;  // position in the network
  std::string label;
  OpKind kind = OpKind::Dense;
  std::optional<PhotonicLayer> optics;
  std::optional<MziMesh> mesh;
};

struct CompiledNetwork {
  std::vector<CompiledLayer> layers;
};

CompiledNetwork compile_network(const Network& net);

/// Logits with every weight layer evaluated through its compiled optics.
/// Activations, pooling, bias and detection stay electronic.
RealMatrix hardware_logits(const Network& net, const CompiledNetwork& hw,
                           const ComplexMatrix& x);

/// Where a compiled layer departs from the weights it should realise.
struct LayerMismatch {
  std::string label;
  double max_abs_error = 0.0;
  int stage = -1;  // first differing MZI stage of a freshly compiled mesh, -1 if none
  std::string mesh;  // "v", "u", "attenuators", "mesh"
};

/// Checks each compiled layer's transfer against the network weights and
/// returns the layers whose entries differ by more than `tolerance`.
std::vector<LayerMismatch> check_compiled(const Network& net, const CompiledNetwork& hw,
                                          double tolerance);

}  // namespace oplixnet
