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
#include <vector>

#include "oplixnet/complex_core.hpp"

namespace oplixnet {

/// One Mach-Zehnder interferometer acting on waveguides (top, top + 1).
struct MziSetting {
  int top = 0;
  double theta = 0.0;  // internal phase, radians in [0, 2pi)
  double phi = 0.0;    // external phase, radians in [0, 2pi)

  friend bool operator==(const MziSetting&, const MziSetting&) = default;
};

/// Ordered MZI stages (stage 0 sees the light first) followed by a
/// per-waveguide output phase screen.
struct MziMesh {
  int width = 0;
  std::vector<MziSetting> stages;
  std::vector<double> phase_screen;

  /// Throws ConfigError for out-of-range waveguide pairs or a phase screen of
  /// the wrong length.
  void validate() const;
};

/// Directional coupler, phase theta, coupler, phase phi (applied right to
/// left), with the 50:50 coupler [[1, i], [i, 1]]/sqrt(2).
ComplexMatrix mzi_transfer(double theta, double phi);

/// Factors a unitary into n(n-1)/2 MZIs by nulling the lower triangle row by
/// row from the bottom, plus an output phase screen. Throws NumericalError if
/// U^H U deviates from I by more than `tolerance` (Frobenius).
MziMesh decompose_unitary(const ComplexMatrix& u, double tolerance = 1e-8);

ComplexMatrix mesh_to_matrix(const MziMesh& mesh);
ComplexVector mesh_forward(const MziMesh& mesh, const ComplexVector& x);
/// Batched form: each column of `x` is one input field.
ComplexMatrix mesh_forward(const MziMesh& mesh, const ComplexMatrix& x);

/// A weight matrix realised as V-mesh -> attenuators -> U-mesh. The optics
/// compute W / global_scale; software multiplies global_scale back.
struct PhotonicLayer {
  int rows = 0;  // m, output width
  int cols = 0;  // n, input width
  MziMesh v_mesh;                   // n x n
  std::vector<double> attenuators;  // min(m, n) values in [0, 1]
  MziMesh u_mesh;                   // m x m
  double global_scale = 1.0;

  void validate() const;
};

/// SVD W = U diag(s) V^H, both unitaries decomposed into meshes.
PhotonicLayer compile_matrix(const ComplexMatrix& w);

/// Optical transfer of a compiled layer on a batch of columns: (W/scale) x.
ComplexMatrix simulate(const PhotonicLayer& layer, const ComplexMatrix& x);
/// The matrix W / global_scale realised by the layer.
ComplexMatrix layer_to_matrix(const PhotonicLayer& layer);

/// MZIs for an m x n weight: n(n-1)/2 + min(m, n) + m(m-1)/2.
std::int64_t count_mzis(std::int64_t m, std::int64_t n);
/// MZIs for a bare n x n unitary mesh: n(n-1)/2.
std::int64_t count_unitary_mzis(std::int64_t n);

}  // namespace oplixnet
