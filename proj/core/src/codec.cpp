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

#include "oplixnet/codec.hpp"

#include <cmath>

#include "oplixnet/errors.hpp"
#include "oplixnet/photonic.hpp"

namespace oplixnet {

Complex encode_dc(double a1, double a2) { return {a1, a2}; }

std::pair<Complex, Complex> encode_dc_ports(double a1, double a2) {
  return {Complex(a1, a2), Complex(a2, a1)};
}

double encoder_output_intensity(double a1, double a2) {
  return a1 * a1 + a2 * a2;
}

CoherentReadings coherent_measure(Complex z, double reference_amplitude) {
  const double r = reference_amplitude;
  return {std::norm(z), std::norm(z + r), std::norm(z + Complex(0.0, r))};
}

Complex coherent_decode(double i_z, double i_zr, double i_zjr, double r) {
  if (!(r > 0.0)) {
    throw ConfigError("coherent_decode: reference amplitude must be positive");
  }
  if (i_z < 0.0 || i_zr < 0.0 || i_zjr < 0.0) {
    throw ConfigError("coherent_decode: negative intensity reading");
  }
  const double r2 = r * r;
  return {(i_zr - i_z - r2) / (2.0 * r), (i_zjr - i_z - r2) / (2.0 * r)};
}

std::string decoder_name(DecoderKind kind) {
  switch (kind) {
    case DecoderKind::Merge: return "merge";
    case DecoderKind::Linear: return "linear";
    case DecoderKind::Unitary: return "unitary";
    case DecoderKind::Coherent: return "coherent";
  }
  return "?";
}

DecoderKind parse_decoder(std::string_view name) {
  for (auto k : {DecoderKind::Merge, DecoderKind::Linear, DecoderKind::Unitary,
                 DecoderKind::Coherent}) {
    if (name == decoder_name(k)) return k;
  }
  throw ConfigError("unknown decoder '" + std::string(name) +
                    "' (expected merge|linear|unitary|coherent)");
}

void DecoderConfig::validate() const {
  if (kind == DecoderKind::Coherent && !(reference_amplitude > 0.0)) {
    throw ConfigError("coherent decoder needs a positive reference amplitude");
  }
}

HeadSpec build_head(int base_out, int classes, const DecoderConfig& decoder) {
  decoder.validate();
  if (classes < 1) throw ConfigError("build_head: class count must be positive");
  if (base_out != (classes + 1) / 2) {
    throw ConfigError("build_head: base output " + std::to_string(base_out) +
                      " does not pair " + std::to_string(classes) + " classes");
  }
  HeadSpec h;
  h.kind = decoder.kind;
  h.classes = classes;
  h.base_out = base_out;
  switch (decoder.kind) {
    case DecoderKind::Merge:
      h.last_layer_out = classes;
      break;
    case DecoderKind::Linear:
      h.last_layer_out = base_out;
      h.extra_in = base_out;
      h.extra_out = classes;
      break;
    case DecoderKind::Unitary:
      h.last_layer_out = classes;
      h.extra_in = classes;
      h.extra_out = classes;
      h.extra_is_unitary = true;
      break;
    case DecoderKind::Coherent:
      h.last_layer_out = base_out;
      h.rule = LogitRule::CoherentPairs;
      h.needs_reference = true;
      h.needs_post_processing = true;
      break;
  }
  return h;
}

std::int64_t decoder_area_delta(DecoderKind kind, int base_out, int classes,
                                int last_in) {
  const HeadSpec h = build_head(base_out, classes, {kind, 1.0});
  const std::int64_t coherent = count_mzis(base_out, last_in);
  std::int64_t head = count_mzis(h.last_layer_out, last_in);
  if (h.has_extra_layer()) {
    head += h.extra_is_unitary ? count_unitary_mzis(h.extra_out)
                               : count_mzis(h.extra_out, h.extra_in);
  }
  return head - coherent;
}

}  // namespace oplixnet
