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

#include <string>
#include <vector>

#include "oplixnet/complex_core.hpp"

namespace oplixnet {

struct Shape3 {
  int height = 0;
  int width = 0;
  int channels = 0;

  int size() const { return height * width * channels; }
  std::string str() const;
  friend bool operator==(const Shape3&, const Shape3&) = default;
};

/// Real image in height x width x channel order (HWC, channel fastest).
struct RealImage {
  Shape3 shape;
  std::vector<double> data;

  RealImage() = default;
  explicit RealImage(Shape3 s) : shape(s), data(s.size(), 0.0) {}

  double& at(int h, int w, int c) {
    return data[(h * shape.width + w) * shape.channels + c];
  }
  double at(int h, int w, int c) const {
    return data[(h * shape.width + w) * shape.channels + c];
  }
};

/// Complex feature map in channel-major order (CHW), which is also the
/// flattening order fed to dense layers.
struct ComplexTensor {
  Shape3 shape;
  std::vector<Complex> data;

  ComplexTensor() = default;
  explicit ComplexTensor(Shape3 s) : shape(s), data(s.size(), Complex(0, 0)) {}

  Complex& at(int h, int w, int c) {
    return data[(c * shape.height + h) * shape.width + w];
  }
  const Complex& at(int h, int w, int c) const {
    return data[(c * shape.height + h) * shape.width + w];
  }

  ComplexVector flatten() const;
};

}  // namespace oplixnet
