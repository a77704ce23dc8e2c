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
#include <string_view>

#include <Eigen/Dense>

#include "oplixnet/tensor.hpp"

namespace oplixnet {

enum class SchemeKind {
  SpatialInterlace,
  SpatialHalfHalf,
  SpatialSymmetric,
  ChannelLossless,
  ChannelRemapping,
};

/// Which neighbours SpatialInterlace pairs. Vertical pairs rows 2r and 2r+1.
enum class PairAxis { Vertical, Horizontal };

using RemapMatrix = Eigen::Matrix<double, 2, 3>;

/// Luminance row (1/3, 1/3, 1/3) and opponent-chroma row (1/2, -1/2, 0).
RemapMatrix default_remap();

/// How real pixels are packed into complex values. `remap` is present
/// exactly when kind is ChannelRemapping.
struct AssignmentScheme {
  SchemeKind kind = SchemeKind::SpatialInterlace;
  std::optional<RemapMatrix> remap;
  PairAxis interlace_axis = PairAxis::Vertical;

  /// Builds a valid scheme, attaching default_remap() for ChannelRemapping.
  static AssignmentScheme of(SchemeKind kind);

  bool is_spatial() const;
  bool is_channel() const { return !is_spatial(); }
  /// Throws ConfigError if the remap invariant is broken.
  void validate() const;
};

/// Short CLI codes: si, sh, ss, cl, cr.
std::string scheme_code(SchemeKind kind);
std::string scheme_name(SchemeKind kind);
SchemeKind parse_scheme(std::string_view code);

struct AssignedInput {
  ComplexTensor data;
  Shape3 source_shape;
  AssignmentScheme scheme;
};

/// Output shape of `assign` for an image of shape `source`. Throws
/// ConfigError for odd spatial extents or a channel count the scheme cannot
/// take.
Shape3 assigned_shape(Shape3 source, const AssignmentScheme& scheme);

AssignedInput assign(const RealImage& image, const AssignmentScheme& scheme);

/// Inverse of `assign` for the lossless schemes. ChannelRemapping throws
/// ConfigError because its rank-2 projection discards information.
RealImage reconstruct(const AssignedInput& input);

/// Conventional encoding: every pixel goes to the real part of its own
/// complex value, shape unchanged.
ComplexTensor encode_real_part(const RealImage& image);

}  // namespace oplixnet
