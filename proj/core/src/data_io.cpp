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

#include "oplixnet/data_io.hpp"

#include <cstdlib>
#include <fstream>
#include <iterator>

#include "oplixnet/errors.hpp"
#include "oplixnet/random.hpp"

namespace oplixnet {
namespace {

namespace fs = std::filesystem;

std::vector<std::uint8_t> read_bytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(DataErrorKind::Missing, "cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::uint32_t read_be32(const std::vector<std::uint8_t>& b, std::size_t off,
                        const fs::path& path, const char* field) {
  if (b.size() < off + 4) {
    throw DataError(DataErrorKind::Truncated,
                    path.string() + ": truncated header, missing " + field);
  }
  return (std::uint32_t{b[off]} << 24) | (std::uint32_t{b[off + 1]} << 16) |
         (std::uint32_t{b[off + 2]} << 8) | std::uint32_t{b[off + 3]};
}

std::string hex(std::uint32_t v) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%08X", v);
  return buf;
}

void check_payload(const std::vector<std::uint8_t>& b, std::size_t header,
                   std::size_t expected, const fs::path& path) {
  const std::size_t have = b.size() - header;
  if (have < expected) {
    throw DataError(DataErrorKind::Truncated,
                    path.string() + ": truncated payload, expected " +
                        std::to_string(expected) + " bytes, found " +
                        std::to_string(have));
  }
  if (have > expected) {
    throw DataError(DataErrorKind::CountMismatch,
                    path.string() + ": " + std::to_string(have - expected) +
                        " bytes beyond the declared item count");
  }
}

std::optional<fs::path> first_existing(const std::vector<fs::path>& candidates) {
  for (const auto& c : candidates) {
    if (fs::exists(c)) return c;
  }
  return std::nullopt;
}

std::vector<fs::path> mnist_candidates(const fs::path& dir, const std::string& stem) {
  std::vector<fs::path> out;
  for (const fs::path& d : {dir, dir / "mnist", dir / "MNIST" / "raw"}) {
    out.push_back(d / stem);
    std::string dotted = stem;
    const auto dash = dotted.rfind("-idx");
    if (dash != std::string::npos) dotted[dash] = '.';
    out.push_back(d / dotted);
  }
  return out;
}

std::vector<fs::path> cifar_files(const fs::path& dir, CifarVariant variant,
                                  const std::string& split) {
  std::vector<fs::path> files;
  if (variant == CifarVariant::Cifar10) {
    for (const fs::path& d : {dir / "cifar-10-batches-bin", dir / "cifar10", dir}) {
      std::vector<fs::path> f;
      if (split == "test") {
        f.push_back(d / "test_batch.bin");
      } else {
        for (int i = 1; i <= 5; ++i) f.push_back(d / ("data_batch_" + std::to_string(i) + ".bin"));
      }
      bool all = true;
      for (const auto& p : f) all = all && fs::exists(p);
      if (all) return f;
    }
  } else {
    for (const fs::path& d : {dir / "cifar-100-binary", dir / "cifar100", dir}) {
      const fs::path p = d / (split == "test" ? "test.bin" : "train.bin");
      if (fs::exists(p)) return {p};
    }
  }
  return files;
}

}  // namespace

RealImage Dataset::image(std::size_t i) const {
  RealImage img(shape);
  const std::size_t n = static_cast<std::size_t>(shape.size());
  const std::uint8_t* src = pixels.data() + i * n;
  for (std::size_t k = 0; k < n; ++k) img.data[k] = src[k] / 255.0;
  return img;
}

void Dataset::validate() const {
  const std::size_t n = static_cast<std::size_t>(shape.size());
  if (pixels.size() != labels.size() * n) {
    throw DataError(DataErrorKind::CountMismatch,
                    name + ": " + std::to_string(pixels.size()) +
                        " pixel bytes for " + std::to_string(labels.size()) +
                        " labels of shape " + shape.str());
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0 || labels[i] >= classes) {
      throw DataError(DataErrorKind::LabelOutOfRange,
                      name + ": label " + std::to_string(labels[i]) +
                          " at index " + std::to_string(i) + " outside [0, " +
                          std::to_string(classes) + ")");
    }
  }
}

Dataset load_idx(const fs::path& images, const fs::path& labels,
                 const std::string& name, const std::string& split) {
  const auto ib = read_bytes(images);
  const auto lb = read_bytes(labels);

  const std::uint32_t imagic = read_be32(ib, 0, images, "magic number");
  if (imagic != 0x00000803u) {
    throw DataError(DataErrorKind::BadMagic, images.string() +
                                                 ": bad image magic " + hex(imagic) +
                                                 " (expected 0x00000803)");
  }
  const std::uint32_t n_images = read_be32(ib, 4, images, "image count");
  const std::uint32_t rows = read_be32(ib, 8, images, "row count");
  const std::uint32_t cols = read_be32(ib, 12, images, "column count");

  const std::uint32_t lmagic = read_be32(lb, 0, labels, "magic number");
  if (lmagic != 0x00000801u) {
    throw DataError(DataErrorKind::BadMagic, labels.string() +
                                                 ": bad label magic " + hex(lmagic) +
                                                 " (expected 0x00000801)");
  }
  const std::uint32_t n_labels = read_be32(lb, 4, labels, "label count");
  if (n_images != n_labels) {
    throw DataError(DataErrorKind::CountMismatch,
                    "image count " + std::to_string(n_images) +
                        " does not match label count " + std::to_string(n_labels));
  }
  check_payload(ib, 16, std::size_t{n_images} * rows * cols, images);
  check_payload(lb, 8, n_labels, labels);
  if (n_images == 0) throw DataError(DataErrorKind::Empty, images.string() + ": zero samples");

  Dataset d;
  d.name = name;
  d.split = split;
  d.shape = {static_cast<int>(rows), static_cast<int>(cols), 1};
  d.classes = 10;
  d.pixels.assign(ib.begin() + 16, ib.end());
  d.labels.assign(lb.begin() + 8, lb.end());
  d.validate();
  return d;
}

Dataset load_cifar(const std::vector<fs::path>& batches, CifarVariant variant,
                   const std::string& split) {
  constexpr std::size_t kPlane = 32 * 32;
  constexpr std::size_t kImage = 3 * kPlane;
  const std::size_t label_bytes = variant == CifarVariant::Cifar10 ? 1 : 2;
  const std::size_t row = label_bytes + kImage;

  Dataset d;
  d.name = variant == CifarVariant::Cifar10 ? "cifar10" : "cifar100";
  d.split = split;
  d.shape = {32, 32, 3};
  d.classes = variant == CifarVariant::Cifar10 ? 10 : 100;
  if (batches.empty()) throw DataError(DataErrorKind::Missing, d.name + ": no batch files");

  for (const fs::path& p : batches) {
    const auto b = read_bytes(p);
    if (b.empty()) throw DataError(DataErrorKind::Empty, p.string() + ": zero samples");
    if (b.size() % row != 0) {
      throw DataError(DataErrorKind::RowSize,
                      p.string() + ": size " + std::to_string(b.size()) +
                          " is not a multiple of the " + std::to_string(row) +
                          "-byte row");
    }
    const std::size_t n = b.size() / row;
    const std::size_t base = d.pixels.size();
    d.pixels.resize(base + n * kImage);
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint8_t* r = b.data() + i * row;
      const int label = r[label_bytes - 1];  // fine label for cifar100
      if (label >= d.classes) {
        throw DataError(DataErrorKind::LabelOutOfRange,
                        p.string() + ": label " + std::to_string(label) +
                            " at row " + std::to_string(i));
      }
      d.labels.push_back(label);
      const std::uint8_t* planes = r + label_bytes;
      std::uint8_t* dst = d.pixels.data() + base + i * kImage;
      for (std::size_t px = 0; px < kPlane; ++px) {
        for (std::size_t c = 0; c < 3; ++c) dst[px * 3 + c] = planes[c * kPlane + px];
      }
    }
  }
  d.validate();
  return d;
}

Dataset take(const Dataset& data, const std::vector<std::size_t>& indices) {
  Dataset out;
  out.name = data.name;
  out.split = data.split;
  out.shape = data.shape;
  out.classes = data.classes;
  const std::size_t n = static_cast<std::size_t>(data.shape.size());
  out.pixels.reserve(indices.size() * n);
  out.labels.reserve(indices.size());
  for (std::size_t idx : indices) {
    if (idx >= data.size()) {
      throw DataError(DataErrorKind::Insufficient, "sample index out of range");
    }
    out.pixels.insert(out.pixels.end(), data.pixels.begin() + idx * n,
                      data.pixels.begin() + (idx + 1) * n);
    out.labels.push_back(data.labels[idx]);
  }
  return out;
}

Dataset subset(const Dataset& data, int n_per_class, std::uint64_t seed) {
  if (n_per_class <= 0) return data;
  std::vector<int> taken(data.classes, 0);
  std::vector<std::size_t> chosen;
  for (std::size_t idx : permutation(seed, data.size())) {
    const int label = data.labels[idx];
    if (taken[label] < n_per_class) {
      ++taken[label];
      chosen.push_back(idx);
    }
  }
  for (int c = 0; c < data.classes; ++c) {
    if (taken[c] < n_per_class) {
      throw DataError(DataErrorKind::Insufficient,
                      data.name + ": class " + std::to_string(c) + " has only " +
                          std::to_string(taken[c]) + " samples, " +
                          std::to_string(n_per_class) + " requested");
    }
  }
  return take(data, chosen);
}

fs::path default_data_dir() {
  if (const char* env = std::getenv("OPLIXNET_DATA"); env && *env) return env;
  return "data";
}

Dataset load_mnist(const fs::path& dir, const std::string& split) {
  const std::string prefix = split == "test" ? "t10k" : "train";
  const auto imgs = mnist_candidates(dir, prefix + "-images-idx3-ubyte");
  const auto lbls = mnist_candidates(dir, prefix + "-labels-idx1-ubyte");
  const auto ip = first_existing(imgs);
  const auto lp = first_existing(lbls);
  if (!ip || !lp) {
    throw DataError(DataErrorKind::Missing,
                    "MNIST " + split + " files not found under " + dir.string() +
                        " (looked for " + imgs.front().filename().string() + ")");
  }
  return load_idx(*ip, *lp, "mnist", split);
}

Dataset load_cifar_dir(const fs::path& dir, CifarVariant variant,
                       const std::string& split) {
  const auto files = cifar_files(dir, variant, split);
  if (files.empty()) {
    throw DataError(DataErrorKind::Missing,
                    std::string(variant == CifarVariant::Cifar10 ? "CIFAR-10" : "CIFAR-100") +
                        " binary batches not found under " + dir.string());
  }
  return load_cifar(files, variant, split);
}

bool cifar_available(const fs::path& dir, CifarVariant variant) {
  return !cifar_files(dir, variant, "train").empty() &&
         !cifar_files(dir, variant, "test").empty();
}

bool mnist_available(const fs::path& dir) {
  for (const char* stem : {"train-images-idx3-ubyte", "train-labels-idx1-ubyte",
                           "t10k-images-idx3-ubyte", "t10k-labels-idx1-ubyte"}) {
    if (!first_existing(mnist_candidates(dir, stem))) return false;
  }
  return true;
}

Dataset downsample(const Dataset& data, int factor) {
  if (factor < 1 || data.shape.height % factor != 0 || data.shape.width % factor != 0) {
    throw ConfigError("downsample: factor " + std::to_string(factor) +
                      " does not divide " + data.shape.str());
  }
  if (factor == 1) return data;
  Dataset out = data;
  const Shape3 in = data.shape;
  out.shape = {in.height / factor, in.width / factor, in.channels};
  const std::size_t in_size = static_cast<std::size_t>(in.size());
  const std::size_t out_size = static_cast<std::size_t>(out.shape.size());
  out.pixels.assign(out_size * data.size(), 0);
  const int area = factor * factor;
  for (std::size_t n = 0; n < data.size(); ++n) {
    const std::uint8_t* src = data.pixels.data() + n * in_size;
    std::uint8_t* dst = out.pixels.data() + n * out_size;
    for (int h = 0; h < out.shape.height; ++h) {
      for (int w = 0; w < out.shape.width; ++w) {
        for (int c = 0; c < in.channels; ++c) {
          int sum = 0;
          for (int i = 0; i < factor; ++i) {
            for (int j = 0; j < factor; ++j) {
              sum += src[((h * factor + i) * in.width + w * factor + j) * in.channels + c];
            }
          }
          dst[(h * out.shape.width + w) * in.channels + c] =
              static_cast<std::uint8_t>((sum + area / 2) / area);
        }
      }
    }
  }
  return out;
}

}  // namespace oplixnet
