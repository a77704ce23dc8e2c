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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "oplixnet/tensor.hpp"

namespace oplixnet {

/// Fully resident labelled image set. Pixels keep their raw bytes (HWC per
/// image); values are read back scaled by 1/255 into [0, 1].
struct Dataset {
  std::string name;
  std::string split;
  Shape3 shape;
  int classes = 0;
  std::vector<std::uint8_t> pixels;
  std::vector<int> labels;

  std::size_t size() const { return labels.size(); }
  RealImage image(std::size_t i) const;
  /// Throws DataError if counts disagree or a label is out of range.
  void validate() const;
};

/// MNIST IDX pair: images magic 0x00000803, labels 0x00000801, big-endian
/// dimension fields.
Dataset load_idx(const std::filesystem::path& images,
                 const std::filesystem::path& labels,
                 const std::string& name = "mnist",
                 const std::string& split = "");

enum class CifarVariant { Cifar10, Cifar100 };

/// CIFAR binary batches: per row a label byte (cifar10) or coarse+fine label
/// bytes (cifar100, fine used), then 3072 channel-planar RGB bytes.
Dataset load_cifar(const std::vector<std::filesystem::path>& batches,
                   CifarVariant variant, const std::string& split = "");

/// Class-balanced subset: the first `n_per_class` samples of each class in
/// the seeded permutation, emitted in permutation order.
Dataset subset(const Dataset& data, int n_per_class, std::uint64_t seed);

/// Samples at the given indices, in order.
Dataset take(const Dataset& data, const std::vector<std::size_t>& indices);

/// Box-filter downsampling by an integer factor (mean of each block, rounded
/// to the nearest byte). Throws ConfigError unless the factor divides both
/// spatial extents.
Dataset downsample(const Dataset& data, int factor);

/// $OPLIXNET_DATA when set, else "data".
std::filesystem::path default_data_dir();

/// Looks for the MNIST IDX files in `dir` or `dir/mnist`; split is "train"
/// or "test". Throws DataError(Missing) naming the paths tried.
Dataset load_mnist(const std::filesystem::path& dir, const std::string& split);

/// Looks for cifar-10-batches-bin (or cifar-100-binary) under `dir`.
Dataset load_cifar_dir(const std::filesystem::path& dir, CifarVariant variant,
                       const std::string& split);

/// True when load_cifar_dir would find the files.
bool cifar_available(const std::filesystem::path& dir, CifarVariant variant);
bool mnist_available(const std::filesystem::path& dir);

}  // namespace oplixnet
