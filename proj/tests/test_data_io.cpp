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


#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "oplixnet/data_io.hpp"
#include "oplixnet/errors.hpp"
#include "oplixnet/random.hpp"
#include "test_support.hpp"

namespace oplixnet {
namespace {

namespace fs = std::filesystem;
using Bytes = std::vector<std::uint8_t>;

void put_be32(Bytes& b, std::uint32_t v) {
  b.push_back(static_cast<std::uint8_t>(v >> 24));
  b.push_back(static_cast<std::uint8_t>(v >> 16));
  b.push_back(static_cast<std::uint8_t>(v >> 8));
  b.push_back(static_cast<std::uint8_t>(v));
}

class DataFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("oplixnet_data_" + std::string(::testing::UnitTest::GetInstance()
                                                ->current_test_info()
                                                ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const Bytes& bytes) {
    const fs::path p = dir_ / name;
    std::ofstream out(p, std::ios::binary);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    return p;
  }

  static Bytes idx_images(std::uint32_t n, std::uint32_t rows, std::uint32_t cols) {
    Bytes b;
    put_be32(b, 0x00000803u);
    put_be32(b, n);
    put_be32(b, rows);
    put_be32(b, cols);
    for (std::uint32_t i = 0; i < n * rows * cols; ++i) b.push_back(static_cast<std::uint8_t>(i * 7));
    return b;
  }

  static Bytes idx_labels(std::uint32_t n) {
    Bytes b;
    put_be32(b, 0x00000801u);
    put_be32(b, n);
    for (std::uint32_t i = 0; i < n; ++i) b.push_back(static_cast<std::uint8_t>(i % 10));
    return b;
  }

  fs::path dir_;
};

DataErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const DataError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no DataError thrown";
  return DataErrorKind::Missing;
}

// ---------------------------------------------------------------- IDX

TEST_F(DataFiles, IdxRoundTrip) {
  const auto img = write("img", idx_images(12, 3, 2));
  const auto lbl = write("lbl", idx_labels(12));
  const Dataset d = load_idx(img, lbl, "mnist", "train");
  EXPECT_EQ(d.size(), 12u);
  EXPECT_EQ(d.shape.height, 3);
  EXPECT_EQ(d.shape.width, 2);
  EXPECT_EQ(d.shape.channels, 1);
  EXPECT_EQ(d.classes, 10);
  EXPECT_EQ(d.labels[11], 1);
  const RealImage x = d.image(1);
  for (int k = 0; k < 6; ++k) {
    EXPECT_DOUBLE_EQ(x.data[k], static_cast<std::uint8_t>((6 + k) * 7) / 255.0);
  }
}

TEST_F(DataFiles, IdxWrongMagicNamesBothValues) {
  Bytes img = idx_images(2, 2, 2);
  img[3] = 0x01;
  const auto ip = write("img", img);
  const auto lp = write("lbl", idx_labels(2));
  try {
    load_idx(ip, lp);
    FAIL() << "accepted a label magic in the image file";
  } catch (const DataError& e) {
    EXPECT_EQ(e.kind(), DataErrorKind::BadMagic);
    const std::string msg = e.what();
    EXPECT_NE(msg.find("0x00000801"), std::string::npos) << msg;
    EXPECT_NE(msg.find("0x00000803"), std::string::npos) << msg;
  }
}

TEST_F(DataFiles, IdxTruncationAtEveryHeaderBoundary) {
  const Bytes full = idx_images(2, 2, 2);
  const auto lp = write("lbl", idx_labels(2));
  for (std::size_t cut : {0u, 2u, 4u, 6u, 8u, 12u, 15u}) {
    const auto ip = write("img", Bytes(full.begin(), full.begin() + cut));
    EXPECT_EQ(kind_of([&] { load_idx(ip, lp); }), DataErrorKind::Truncated) << "cut " << cut;
  }
  const auto ip = write("img", full);
  const Bytes labels = idx_labels(2);
  for (std::size_t cut : {0u, 3u, 4u, 7u}) {
    const auto cut_lp = write("lbl", Bytes(labels.begin(), labels.begin() + cut));
    EXPECT_EQ(kind_of([&] { load_idx(ip, cut_lp); }), DataErrorKind::Truncated) << "cut " << cut;
  }
}

TEST_F(DataFiles, IdxTruncatedPayload) {
  Bytes img = idx_images(3, 2, 2);
  img.pop_back();
  const auto ip = write("img", img);
  const auto lp = write("lbl", idx_labels(3));
  EXPECT_EQ(kind_of([&] { load_idx(ip, lp); }), DataErrorKind::Truncated);
}

TEST_F(DataFiles, IdxExtraBytesAndCountMismatch) {
  Bytes img = idx_images(3, 2, 2);
  img.push_back(0);
  auto ip = write("img", img);
  auto lp = write("lbl", idx_labels(3));
  EXPECT_EQ(kind_of([&] { load_idx(ip, lp); }), DataErrorKind::CountMismatch);
  ip = write("img", idx_images(3, 2, 2));
  lp = write("lbl", idx_labels(4));
  EXPECT_EQ(kind_of([&] { load_idx(ip, lp); }), DataErrorKind::CountMismatch);
}

TEST_F(DataFiles, IdxLabelOutOfRangeAndEmpty) {
  Bytes lbl = idx_labels(2);
  lbl.back() = 10;
  auto ip = write("img", idx_images(2, 2, 2));
  auto lp = write("lbl", lbl);
  EXPECT_EQ(kind_of([&] { load_idx(ip, lp); }), DataErrorKind::LabelOutOfRange);
  ip = write("img", idx_images(0, 2, 2));
  lp = write("lbl", idx_labels(0));
  EXPECT_EQ(kind_of([&] { load_idx(ip, lp); }), DataErrorKind::Empty);
}

TEST_F(DataFiles, MissingFiles) {
  EXPECT_EQ(kind_of([&] { load_idx(dir_ / "nope", dir_ / "nope2"); }), DataErrorKind::Missing);
  EXPECT_EQ(kind_of([&] { load_mnist(dir_, "train"); }), DataErrorKind::Missing);
  EXPECT_EQ(kind_of([&] { load_cifar_dir(dir_, CifarVariant::Cifar10, "test"); }),
            DataErrorKind::Missing);
  EXPECT_FALSE(mnist_available(dir_));
  EXPECT_FALSE(cifar_available(dir_, CifarVariant::Cifar100));
}

TEST_F(DataFiles, MnistDirectoryLayoutsAreFound) {
  fs::create_directories(dir_ / "mnist");
  write("mnist/train-images-idx3-ubyte", idx_images(4, 2, 2));
  write("mnist/train-labels-idx1-ubyte", idx_labels(4));
  write("mnist/t10k-images.idx3-ubyte", idx_images(2, 2, 2));
  write("mnist/t10k-labels.idx1-ubyte", idx_labels(2));
  EXPECT_TRUE(mnist_available(dir_));
  EXPECT_EQ(load_mnist(dir_, "train").size(), 4u);
  EXPECT_EQ(load_mnist(dir_, "test").size(), 2u);
}

// ---------------------------------------------------------------- CIFAR

Bytes cifar_row(int coarse, int fine, bool hundred, std::uint8_t base) {
  Bytes r;
  if (hundred) r.push_back(static_cast<std::uint8_t>(coarse));
  r.push_back(static_cast<std::uint8_t>(fine));
  for (int c = 0; c < 3; ++c) {
    for (int px = 0; px < 1024; ++px) {
      r.push_back(static_cast<std::uint8_t>(base + 50 * c + px % 7));
    }
  }
  return r;
}

TEST_F(DataFiles, CifarPlanarToInterleaved) {
  Bytes b = cifar_row(0, 3, false, 10);
  const Bytes r2 = cifar_row(0, 9, false, 20);
  b.insert(b.end(), r2.begin(), r2.end());
  ASSERT_EQ(b.size(), 2u * 3073u);
  const auto p = write("batch.bin", b);
  const Dataset d = load_cifar({p}, CifarVariant::Cifar10);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d.labels[0], 3);
  EXPECT_EQ(d.labels[1], 9);
  EXPECT_EQ(d.shape.height, 32);
  EXPECT_EQ(d.shape.channels, 3);
  const std::size_t img = 3072;
  for (int px : {0, 1, 500, 1023}) {
    for (int c = 0; c < 3; ++c) {
      EXPECT_EQ(d.pixels[img + px * 3 + c], 20 + 50 * c + px % 7);
    }
  }
}

TEST_F(DataFiles, Cifar100UsesFineLabel) {
  const auto p = write("train.bin", cifar_row(4, 77, true, 0));
  const Dataset d = load_cifar({p}, CifarVariant::Cifar100);
  EXPECT_EQ(d.classes, 100);
  EXPECT_EQ(d.labels.at(0), 77);
  EXPECT_EQ(d.pixels[3 * 5 + 2], 100 + 5);
}

TEST_F(DataFiles, CifarRowSizeEmptyAndLabelErrors) {
  Bytes b = cifar_row(0, 1, false, 0);
  b.pop_back();
  auto p = write("bad.bin", b);
  EXPECT_EQ(kind_of([&] { load_cifar({p}, CifarVariant::Cifar10); }), DataErrorKind::RowSize);
  p = write("empty.bin", {});
  EXPECT_EQ(kind_of([&] { load_cifar({p}, CifarVariant::Cifar10); }), DataErrorKind::Empty);
  p = write("lab.bin", cifar_row(0, 12, false, 0));
  EXPECT_EQ(kind_of([&] { load_cifar({p}, CifarVariant::Cifar10); }),
            DataErrorKind::LabelOutOfRange);
  EXPECT_EQ(kind_of([&] { load_cifar({}, CifarVariant::Cifar10); }), DataErrorKind::Missing);
}

TEST_F(DataFiles, CifarDirectoryLayout) {
  fs::create_directories(dir_ / "cifar-10-batches-bin");
  for (int i = 1; i <= 5; ++i) {
    write("cifar-10-batches-bin/data_batch_" + std::to_string(i) + ".bin",
          cifar_row(0, i, false, 0));
  }
  write("cifar-10-batches-bin/test_batch.bin", cifar_row(0, 0, false, 0));
  EXPECT_TRUE(cifar_available(dir_, CifarVariant::Cifar10));
  const Dataset train = load_cifar_dir(dir_, CifarVariant::Cifar10, "train");
  EXPECT_EQ(train.labels, (std::vector<int>{1, 2, 3, 4, 5}));
}

// ---------------------------------------------------------------- subsets

Dataset synthetic(int per_class, int classes) {
  Dataset d;
  d.name = "synthetic";
  d.shape = {2, 2, 1};
  d.classes = classes;
  for (int i = 0; i < per_class * classes; ++i) {
    d.labels.push_back(i % classes);
    for (int k = 0; k < 4; ++k) d.pixels.push_back(static_cast<std::uint8_t>(i));
  }
  return d;
}

TEST(Subset, ClassBalancedAndDeterministic) {
  const Dataset d = synthetic(20, 4);
  const Dataset a = subset(d, 5, 99);
  const Dataset b = subset(d, 5, 99);
  ASSERT_EQ(a.size(), 20u);
  std::vector<int> counts(4, 0);
  for (int l : a.labels) ++counts[l];
  for (int c : counts) EXPECT_EQ(c, 5);
  EXPECT_EQ(a.labels, b.labels);
  EXPECT_EQ(a.pixels, b.pixels);
  EXPECT_NE(subset(d, 5, 100).pixels, a.pixels);
  for (std::size_t i = 0; i < a.size(); ++i) {
    // Pixel value encodes the source index, which fixes the label.
    EXPECT_EQ(a.pixels[i * 4] % 4, a.labels[i]);
  }
}

TEST(Subset, NonPositiveIsIdentityAndShortfallThrows) {
  const Dataset d = synthetic(3, 2);
  EXPECT_EQ(subset(d, 0, 1).pixels, d.pixels);
  EXPECT_EQ(subset(d, -1, 1).labels, d.labels);
  EXPECT_EQ(kind_of([&] { subset(d, 4, 1); }), DataErrorKind::Insufficient);
}

TEST(Subset, TakeKeepsOrderAndChecksRange) {
  const Dataset d = synthetic(3, 2);
  const Dataset t = take(d, {5, 0, 2});
  EXPECT_EQ(t.labels, (std::vector<int>{1, 0, 0}));
  EXPECT_EQ(t.pixels[0], 5);
  EXPECT_EQ(kind_of([&] { take(d, {6}); }), DataErrorKind::Insufficient);
}

TEST(Permutation, PureFunctionOfSeedAndSize) {
  for (std::size_t n : {0u, 1u, 17u, 1000u}) {
    const auto p = permutation(7, n);
    EXPECT_EQ(p, permutation(7, n));
    std::vector<std::size_t> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> iota(n);
    std::iota(iota.begin(), iota.end(), 0);
    EXPECT_EQ(sorted, iota);
  }
  EXPECT_NE(permutation(7, 1000), permutation(8, 1000));
  EXPECT_NE(derive_seed(1, 2), derive_seed(1, 3));
  EXPECT_EQ(derive_seed(1, 2), derive_seed(1, 2));
}

TEST(Downsample, BoxMeanRounded) {
  Dataset d;
  d.name = "t";
  d.shape = {2, 4, 1};
  d.classes = 1;
  d.pixels = {0, 1, 10, 20, 2, 2, 30, 41};
  d.labels = {0};
  const Dataset s = downsample(d, 2);
  EXPECT_EQ(s.shape.height, 1);
  EXPECT_EQ(s.shape.width, 2);
  EXPECT_EQ(s.pixels, (std::vector<std::uint8_t>{1, 25}));
  EXPECT_THROW(downsample(d, 3), ConfigError);
  EXPECT_EQ(downsample(d, 1).pixels, d.pixels);
}

// ---------------------------------------------------------------- real data

TEST(RealData, MnistSizes) {
  const std::string dir = testing::data_dir();
  if (!mnist_available(dir)) GTEST_SKIP() << "MNIST not found under " << dir;
  const Dataset train = load_mnist(dir, "train");
  const Dataset test = load_mnist(dir, "test");
  EXPECT_EQ(train.size(), 60000u);
  EXPECT_EQ(test.size(), 10000u);
  EXPECT_EQ(train.shape.height, 28);
  EXPECT_EQ(train.shape.width, 28);
  const Dataset s = subset(train, 100, 3);
  EXPECT_EQ(s.size(), 1000u);
}

TEST(RealData, CifarSizes) {
  const std::string dir = testing::data_dir();
  if (!cifar_available(dir, CifarVariant::Cifar10)) {
    GTEST_SKIP() << "CIFAR-10 not found under " << dir;
  }
  EXPECT_EQ(load_cifar_dir(dir, CifarVariant::Cifar10, "train").size(), 50000u);
  EXPECT_EQ(load_cifar_dir(dir, CifarVariant::Cifar10, "test").size(), 10000u);
}

}  // namespace
}  // namespace oplixnet
