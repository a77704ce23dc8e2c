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
#include <string>
#include <string_view>
#include <utility>

#include "oplixnet/complex_core.hpp"

namespace oplixnet {

// Optical input encoder and output decoders.

/// Directional-coupler encoder: amplitudes A1, A2 enter a 50:50 coupler with
/// the lower arm shifted by 90 degrees; the top port carries A1 + jA2.
Complex encode_dc(double a1, double a2);

/// Both coupler outputs (top, bottom). The bottom port, j*A1 + A2, is
/// discarded in hardware.
std::pair<Complex, Complex> encode_dc_ports(double a1, double a2);

/// Power at the used port, A1^2 + A2^2 (half of the injected 2(A1^2 + A2^2)).
double encoder_output_intensity(double a1, double a2);

/// Three photodiode readings against a reference of amplitude R:
/// |z|^2, |z + R|^2, |z + jR|^2.
struct CoherentReadings {
  double i_z = 0.0;
  double i_zr = 0.0;
  double i_zjr = 0.0;
};

CoherentReadings coherent_measure(Complex z, double reference_amplitude);

/// Recovers z from its readings:
///   Re z = (I_zr - I_z - R^2) / 2R,  Im z = (I_zjr - I_z - R^2) / 2R.
/// Throws ConfigError for R <= 0 or negative intensities.
Complex coherent_decode(double i_z, double i_zr, double i_zjr, double r);
inline Complex coherent_decode(const CoherentReadings& m, double r) {
  return coherent_decode(m.i_z, m.i_zr, m.i_zjr, r);
}

enum class DecoderKind { Merge, Linear, Unitary, Coherent };

std::string decoder_name(DecoderKind kind);
DecoderKind parse_decoder(std::string_view name);

struct DecoderConfig {
  DecoderKind kind = DecoderKind::Merge;
  double reference_amplitude = 1.0;  // used by Coherent only

  void validate() const;
};

enum class LogitRule {
  Intensity,      // logits = |z|^2 of the final complex outputs
  CoherentPairs,  // logits = interleaved (Re, Im) of the final outputs
};

/// Shape of the network head for a given decoder.
struct HeadSpec {
  DecoderKind kind = DecoderKind::Merge;
  int classes = 0;
  int base_out = 0;       // k = ceil(classes / 2)
  int last_layer_out = 0; // complex outputs of the network's last layer
  int extra_in = 0;       // extra decoder layer (0 when absent)
  int extra_out = 0;
  bool extra_is_unitary = false;
  LogitRule rule = LogitRule::Intensity;
  bool needs_reference = false;
  bool needs_post_processing = false;

  bool has_extra_layer() const { return extra_out > 0; }
};

/// Throws ConfigError unless base_out == ceil(classes / 2).
HeadSpec build_head(int base_out, int classes, const DecoderConfig& decoder);

/// Extra MZIs of the chosen head relative to the Coherent head, whose last
/// layer maps last_in -> k with no extra layer.
std::int64_t decoder_area_delta(DecoderKind kind, int base_out, int classes,
                                int last_in);

}  // namespace oplixnet
