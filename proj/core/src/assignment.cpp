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

#include "oplixnet/assignment.hpp"

#include <string>

#include "oplixnet/errors.hpp"

namespace oplixnet {

RemapMatrix default_remap() {
  RemapMatrix m;
  m << 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0,
       0.5, -0.5, 0.0;
  return m;
}

AssignmentScheme AssignmentScheme::of(SchemeKind kind) {
  AssignmentScheme s;
  s.kind = kind;
  if (kind == SchemeKind::ChannelRemapping) s.remap = default_remap();
  return s;
}

bool AssignmentScheme::is_spatial() const {
  return kind == SchemeKind::SpatialInterlace ||
         kind == SchemeKind::SpatialHalfHalf ||
         kind == SchemeKind::SpatialSymmetric;
}

void AssignmentScheme::validate() const {
  const bool needs_remap = kind == SchemeKind::ChannelRemapping;
  if (needs_remap && !remap) {
    throw ConfigError("channel remapping requires a 2x3 remap matrix");
  }
  if (!needs_remap && remap) {
    throw ConfigError("remap matrix given for scheme " + scheme_code(kind));
  }
  if (remap && !remap->allFinite()) {
    throw ConfigError("remap matrix has non-finite entries");
  }
}

std::string scheme_code(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::SpatialInterlace: return "si";
    case SchemeKind::SpatialHalfHalf: return "sh";
    case SchemeKind::SpatialSymmetric: return "ss";
    case SchemeKind::ChannelLossless: return "cl";
    case SchemeKind::ChannelRemapping: return "cr";
  }
  return "?";
}

std::string scheme_name(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::SpatialInterlace: return "spatial-interlace";
    case SchemeKind::SpatialHalfHalf: return "spatial-half-half";
    case SchemeKind::SpatialSymmetric: return "spatial-symmetric";
    case SchemeKind::ChannelLossless: return "channel-lossless";
    case SchemeKind::ChannelRemapping: return "channel-remapping";
  }
  return "?";
}

SchemeKind parse_scheme(std::string_view code) {
  for (auto k : {SchemeKind::SpatialInterlace, SchemeKind::SpatialHalfHalf,
                 SchemeKind::SpatialSymmetric, SchemeKind::ChannelLossless,
                 SchemeKind::ChannelRemapping}) {
    if (code == scheme_code(k) || code == scheme_name(k)) return k;
  }
  throw ConfigError("unknown assignment scheme '" + std::string(code) +
                    "' (expected si|sh|ss|cl|cr)");
}

Shape3 assigned_shape(Shape3 source, const AssignmentScheme& scheme) {
  scheme.validate();
  if (source.height <= 0 || source.width <= 0 || source.channels <= 0) {
    throw ConfigError("empty image shape " + source.str());
  }
  switch (scheme.kind) {
    case SchemeKind::SpatialInterlace:
      if (scheme.interlace_axis == PairAxis::Horizontal) {
        if (source.width % 2 != 0) {
          throw ConfigError("spatial interlace (horizontal) needs even width, got " +
                            source.str());
        }
        return {source.height, source.width / 2, source.channels};
      }
      [[fallthrough]];
    case SchemeKind::SpatialHalfHalf:
    case SchemeKind::SpatialSymmetric:
      if (source.height % 2 != 0) {
        throw ConfigError("spatial assignment needs even height, got " +
                          source.str());
      }
      return {source.height / 2, source.width, source.channels};
    case SchemeKind::ChannelLossless:
      return {source.height, source.width, (source.channels + 1) / 2};
    case SchemeKind::ChannelRemapping:
      if (source.channels != 3) {
        throw ConfigError("channel remapping needs 3 channels, got " +
                          source.str());
      }
      return {source.height, source.width, 1};
  }
  throw ConfigError("unhandled scheme");
}

AssignedInput assign(const RealImage& image, const AssignmentScheme& scheme) {
  const Shape3 src = image.shape;
  if (static_cast<int>(image.data.size()) != src.size()) {
    throw ConfigError("image data length does not match shape " + src.str());
  }
  const Shape3 dst = assigned_shape(src, scheme);
  ComplexTensor out(dst);
  const int H = src.height;
  const int W = src.width;

  switch (scheme.kind) {
    case SchemeKind::SpatialInterlace:
      for (int c = 0; c < dst.channels; ++c)
        for (int h = 0; h < dst.height; ++h)
          for (int w = 0; w < dst.width; ++w) {
            if (scheme.interlace_axis == PairAxis::Vertical) {
              out.at(h, w, c) = {image.at(2 * h, w, c), image.at(2 * h + 1, w, c)};
            } else {
              out.at(h, w, c) = {image.at(h, 2 * w, c), image.at(h, 2 * w + 1, c)};
            }
          }
      break;
    case SchemeKind::SpatialHalfHalf:
      for (int c = 0; c < dst.channels; ++c)
        for (int h = 0; h < dst.height; ++h)
          for (int w = 0; w < W; ++w)
            out.at(h, w, c) = {image.at(h, w, c), image.at(h + H / 2, w, c)};
      break;
    case SchemeKind::SpatialSymmetric:
      // Point reflection: (r, c) pairs with (H-1-r, W-1-c).
      for (int c = 0; c < dst.channels; ++c)
        for (int h = 0; h < dst.height; ++h)
          for (int w = 0; w < W; ++w)
            out.at(h, w, c) = {image.at(h, w, c),
                               image.at(H - 1 - h, W - 1 - w, c)};
      break;
    case SchemeKind::ChannelLossless:
      for (int k = 0; k < dst.channels; ++k)
        for (int h = 0; h < H; ++h)
          for (int w = 0; w < W; ++w) {
            const double re = image.at(h, w, 2 * k);
            const double im =
                2 * k + 1 < src.channels ? image.at(h, w, 2 * k + 1) : 0.0;
            out.at(h, w, k) = {re, im};
          }
      break;
    case SchemeKind::ChannelRemapping: {
      const RemapMatrix& m = *scheme.remap;
      for (int h = 0; h < H; ++h)
        for (int w = 0; w < W; ++w) {
          const Eigen::Vector3d rgb(image.at(h, w, 0), image.at(h, w, 1),
                                    image.at(h, w, 2));
          const Eigen::Vector2d uv = m * rgb;
          out.at(h, w, 0) = {uv(0), uv(1)};
        }
      break;
    }
  }
  return {std::move(out), src, scheme};
}

RealImage reconstruct(const AssignedInput& input) {
  const Shape3 src = input.source_shape;
  const ComplexTensor& t = input.data;
  RealImage img(src);
  const int H = src.height;
  const int W = src.width;
  switch (input.scheme.kind) {
    case SchemeKind::SpatialInterlace:
      for (int c = 0; c < t.shape.channels; ++c)
        for (int h = 0; h < t.shape.height; ++h)
          for (int w = 0; w < t.shape.width; ++w) {
            const Complex z = t.at(h, w, c);
            if (input.scheme.interlace_axis == PairAxis::Vertical) {
              img.at(2 * h, w, c) = z.real();
              img.at(2 * h + 1, w, c) = z.imag();
            } else {
              img.at(h, 2 * w, c) = z.real();
              img.at(h, 2 * w + 1, c) = z.imag();
            }
          }
      break;
    case SchemeKind::SpatialHalfHalf:
      for (int c = 0; c < t.shape.channels; ++c)
        for (int h = 0; h < t.shape.height; ++h)
          for (int w = 0; w < W; ++w) {
            img.at(h, w, c) = t.at(h, w, c).real();
            img.at(h + H / 2, w, c) = t.at(h, w, c).imag();
          }
      break;
    case SchemeKind::SpatialSymmetric:
      for (int c = 0; c < t.shape.channels; ++c)
        for (int h = 0; h < t.shape.height; ++h)
          for (int w = 0; w < W; ++w) {
            img.at(h, w, c) = t.at(h, w, c).real();
            img.at(H - 1 - h, W - 1 - w, c) = t.at(h, w, c).imag();
          }
      break;
    case SchemeKind::ChannelLossless:
      for (int k = 0; k < t.shape.channels; ++k)
        for (int h = 0; h < H; ++h)
          for (int w = 0; w < W; ++w) {
            img.at(h, w, 2 * k) = t.at(h, w, k).real();
            if (2 * k + 1 < src.channels) {
              img.at(h, w, 2 * k + 1) = t.at(h, w, k).imag();
            }
          }
      break;
    case SchemeKind::ChannelRemapping:
      throw ConfigError("channel remapping is not invertible");
  }
  return img;
}

ComplexTensor encode_real_part(const RealImage& image) {
  ComplexTensor out(image.shape);
  for (int c = 0; c < image.shape.channels; ++c)
    for (int h = 0; h < image.shape.height; ++h)
      for (int w = 0; w < image.shape.width; ++w)
        out.at(h, w, c) = {image.at(h, w, c), 0.0};
  return out;
}

}  // namespace oplixnet
