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

#include "oplixnet/area.hpp"
#include "oplixnet/codec.hpp"
#include "oplixnet/complex_core.hpp"
#include "oplixnet/errors.hpp"
#include "oplixnet/model_spec.hpp"
#include "oplixnet/photonic.hpp"
#include "test_support.hpp"

namespace oplixnet {
namespace {

TEST(EncodeDc, Examples) {
  EXPECT_EQ(encode_dc(1, 0), Complex(1, 0));
  EXPECT_EQ(encode_dc(0, 1), Complex(0, 1));
  const Complex z = encode_dc(0.3, 0.4);
  EXPECT_EQ(z, Complex(0.3, 0.4));
  EXPECT_NEAR(std::norm(z), 0.25, 1e-15);
  EXPECT_NEAR(encoder_output_intensity(0.3, 0.4), 0.25, 1e-15);
}

TEST(EncodeDc, PortsSplitInjectedEnergy) {
  Rng rng(41);
  for (int i = 0; i < 50; ++i) {
    const double a1 = rng.uniform(), a2 = rng.uniform();
    const auto [top, bottom] = encode_dc_ports(a1, a2);
    EXPECT_EQ(top, Complex(a1, a2));
    EXPECT_EQ(bottom, Complex(a2, a1));
    // Each port carries half of 2(A1^2 + A2^2).
    EXPECT_NEAR(std::norm(top) + std::norm(bottom), 2 * (a1 * a1 + a2 * a2), 1e-15);
  }
}

TEST(CoherentDecode, HandExpandedExamples) {
  EXPECT_EQ(coherent_decode(0, 1, 1, 1), Complex(0, 0));
  EXPECT_EQ(coherent_decode(25, 32, 34, 1), Complex(3, 4));
  EXPECT_EQ(coherent_decode(1, 5, 9, 2), Complex(0, 1));
  const CoherentReadings r = coherent_measure(Complex(3, 4), 1.0);
  EXPECT_DOUBLE_EQ(r.i_z, 25);
  EXPECT_DOUBLE_EQ(r.i_zr, 32);
  EXPECT_DOUBLE_EQ(r.i_zjr, 34);
}

TEST(CoherentDecode, Errors) {
  EXPECT_THROW(coherent_decode(1, 1, 1, 0), ConfigError);
  EXPECT_THROW(coherent_decode(-1, 1, 1, 1), ConfigError);
}

TEST(CoherentDecode, RecoversEncoderOutput) {
  Rng rng(42);
  for (int i = 0; i < 500; ++i) {
    const double a1 = rng.uniform(), a2 = rng.uniform();
    const double ref = 0.1 + 3 * rng.uniform();
    const Complex z = coherent_decode(coherent_measure(encode_dc(a1, a2), ref), ref);
    EXPECT_NEAR(z.real(), a1, 1e-12);
    EXPECT_NEAR(z.imag(), a2, 1e-12);
  }
}

TEST(BuildHead, ShapesPerDecoder) {
  const HeadSpec merge = build_head(5, 10, {DecoderKind::Merge, 1});
  EXPECT_EQ(merge.last_layer_out, 10);
  EXPECT_FALSE(merge.has_extra_layer());
  EXPECT_EQ(merge.rule, LogitRule::Intensity);

  const HeadSpec linear = build_head(5, 10, {DecoderKind::Linear, 1});
  EXPECT_EQ(linear.last_layer_out, 5);
  EXPECT_EQ(linear.extra_in, 5);
  EXPECT_EQ(linear.extra_out, 10);
  EXPECT_FALSE(linear.extra_is_unitary);

  const HeadSpec unitary = build_head(5, 10, {DecoderKind::Unitary, 1});
  EXPECT_EQ(unitary.last_layer_out, 10);
  EXPECT_EQ(unitary.extra_in, 10);
  EXPECT_EQ(unitary.extra_out, 10);
  EXPECT_TRUE(unitary.extra_is_unitary);

  const HeadSpec coherent = build_head(5, 10, {DecoderKind::Coherent, 1});
  EXPECT_EQ(coherent.last_layer_out, 5);
  EXPECT_EQ(coherent.rule, LogitRule::CoherentPairs);
  EXPECT_TRUE(coherent.needs_reference);
  EXPECT_TRUE(coherent.needs_post_processing);

  EXPECT_THROW(build_head(4, 10, {DecoderKind::Merge, 1}), ConfigError);
  EXPECT_THROW(build_head(5, 10, {DecoderKind::Coherent, 0}), ConfigError);
  // Odd class counts round k up.
  EXPECT_EQ(build_head(3, 5, {DecoderKind::Coherent, 1}).last_layer_out, 3);
}

TEST(DecoderDelta, FcnnValues) {
  EXPECT_EQ(decoder_area_delta(DecoderKind::Coherent, 5, 10, 50), 0);
  EXPECT_EQ(decoder_area_delta(DecoderKind::Merge, 5, 10, 50), count_mzis(10, 50) - count_mzis(5, 50));
  EXPECT_EQ(decoder_area_delta(DecoderKind::Merge, 5, 10, 50), 40);
  EXPECT_EQ(decoder_area_delta(DecoderKind::Linear, 5, 10, 50), 60);
  EXPECT_EQ(decoder_area_delta(DecoderKind::Unitary, 5, 10, 50), 40 + 45);
}

ModelSpec scvnn(const std::string& model, SchemeKind scheme, DecoderKind decoder) {
  ModelSpec s = conventional_spec(zoo_architecture(model));
  s.flavor = Flavor::SCVNN;
  s.scheme = AssignmentScheme::of(scheme);
  s.decoder.kind = decoder;
  return s;
}

TEST(AreaReport, FcnnConventionalAndSplit) {
  const AreaReport base = area_report(conventional_spec(zoo_architecture("fcnn")));
  EXPECT_EQ(base.mzi_count, 316991);
  EXPECT_EQ(base.baseline_mzi_count, 316991);
  EXPECT_EQ(base.reduction_ratio, 0.0);
  EXPECT_EQ(format_e4(base.mzi_count), "31.7");

  const AreaReport si = area_report(scvnn("fcnn", SchemeKind::SpatialInterlace, DecoderKind::Merge));
  EXPECT_EQ(si.mzi_count, 79191);
  EXPECT_EQ(format_e4(si.mzi_count), "7.9");
  EXPECT_NEAR(si.reduction_ratio, 1.0 - 79191.0 / 316991.0, 1e-15);
  EXPECT_EQ(si.mzi_count_without_merge_doubling, 79151);
  EXPECT_EQ(si.encoder_dcs, 392);
}

TEST(AreaReport, DeviceCompositionAndProfiles) {
  for (const char* p : {"2dc2ps", "2dc1ps"}) {
    const DeviceProfile prof = DeviceProfile::parse(p);
    const AreaReport r = area_report(scvnn("lenet5", SchemeKind::ChannelLossless, DecoderKind::Merge), prof);
    EXPECT_EQ(r.dc_count, r.mzi_count * prof.dc_per_mzi + r.encoder_dcs);
    EXPECT_GE(r.ps_count, r.mzi_count * prof.ps_per_mzi);
    std::int64_t sum = 0;
    for (const LayerArea& l : r.layers) sum += l.mzis;
    EXPECT_EQ(sum, r.mzi_count);
  }
  EXPECT_THROW(DeviceProfile::parse("3dc"), ConfigError);
}

TEST(AreaReport, LenetAndResnets) {
  const AreaReport lenet = area_report(scvnn("lenet5", SchemeKind::ChannelLossless, DecoderKind::Merge));
  EXPECT_EQ(lenet.baseline_mzi_count, 115418);
  EXPECT_EQ(lenet.mzi_count, 29361);
  const AreaReport r20 = area_report(scvnn("resnet20", SchemeKind::ChannelLossless, DecoderKind::Merge));
  EXPECT_EQ(r20.baseline_mzi_count, 1170238);
  EXPECT_EQ(r20.mzi_count, 292036);
  const AreaReport r32 = area_report(scvnn("resnet32", SchemeKind::ChannelLossless, DecoderKind::Merge));
  EXPECT_EQ(r32.baseline_mzi_count, 2055069);
  EXPECT_EQ(r32.mzi_count, 516483);
}

TEST(AreaReport, SpatialSchemesShareArea) {
  const AreaReport a = area_report(scvnn("fcnn", SchemeKind::SpatialInterlace, DecoderKind::Merge));
  for (SchemeKind k : {SchemeKind::SpatialHalfHalf, SchemeKind::SpatialSymmetric}) {
    EXPECT_EQ(area_report(scvnn("fcnn", k, DecoderKind::Merge)).mzi_count, a.mzi_count);
  }
}

TEST(AreaReport, MergeBeatsLearnableDecodersAcrossZoo) {
  for (const std::string& name : zoo_names()) {
    const SchemeKind k = zoo_architecture(name).input.channels == 1 ? SchemeKind::SpatialInterlace
                                                                     : SchemeKind::ChannelLossless;
    const std::int64_t coherent = area_report(scvnn(name, k, DecoderKind::Coherent)).mzi_count;
    const std::int64_t merge = area_report(scvnn(name, k, DecoderKind::Merge)).mzi_count;
    const std::int64_t linear = area_report(scvnn(name, k, DecoderKind::Linear)).mzi_count;
    const std::int64_t unitary = area_report(scvnn(name, k, DecoderKind::Unitary)).mzi_count;
    EXPECT_LT(merge - coherent, linear - coherent) << name;
    EXPECT_LT(merge - coherent, unitary - coherent) << name;
    EXPECT_LT(static_cast<double>(merge - coherent) / static_cast<double>(merge), 0.01) << name;
  }
}

TEST(AreaReport, CsvAndJsonCarryTotals) {
  const AreaReport r = area_report(scvnn("fcnn", SchemeKind::SpatialInterlace, DecoderKind::Merge));
  const std::string csv = to_csv(r);
  EXPECT_NE(csv.find("79191"), std::string::npos);
  EXPECT_NE(csv.find("316991"), std::string::npos);
  EXPECT_NE(to_json(r).find("\"mzi_count\": 79191"), std::string::npos);
}

}  // namespace
}  // namespace oplixnet
