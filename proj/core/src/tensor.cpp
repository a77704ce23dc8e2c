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

#include "oplixnet/tensor.hpp"

namespace oplixnet {

std::string Shape3::str() const {
  return std::to_string(height) + "x" + std::to_string(width) + "x" +
         std::to_string(channels);
}

ComplexVector ComplexTensor::flatten() const {
  ComplexVector v(static_cast<Eigen::Index>(data.size()));
  for (std::size_t i = 0; i < data.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = data[i];
  }
  return v;
}

}  // namespace oplixnet
