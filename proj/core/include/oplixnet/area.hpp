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
#include <vector>

#include "oplixnet/model_spec.hpp"

namespace oplixnet {

/// Optical devices per MZI. 2dc2ps follows the two-heater MZI; 2dc1ps is
/// the single-heater variant used for cross-architecture comparisons.
struct DeviceProfile {
  std::string name = "2dc2ps";
  int dc_per_mzi = 2;
  int ps_per_mzi = 2;

  static DeviceProfile parse(std::string_view name);
};

struct LayerArea {
  std::string label;
  int rows = 0;
  int cols = 0;
  bool unitary = false;
  std::int64_t mzis = 0;
  std::int64_t dcs = 0;
  std::int64_t pss = 0;
};

struct AreaReport {
  std::string model;
  std::string flavor;
  std::string scheme;   // "none" for the conventional network
  std::string decoder;  // "photodiode" for the conventional network
  DeviceProfile profile;
  std::vector<LayerArea> layers;
  std::int64_t encoder_dcs = 0;
  std::int64_t mzi_count = 0;
  std::int64_t dc_count = 0;
  std::int64_t ps_count = 0;
  std::int64_t baseline_mzi_count = 0;
  std::int64_t baseline_dc_count = 0;
  std::int64_t baseline_ps_count = 0;
  double reduction_ratio = 0.0;  // 1 - mzi_count / baseline_mzi_count
  /// Merge decoder only: totals if the last layer kept k outputs instead of
  /// doubling to one per class. Equal to the primary numbers otherwise.
  std::int64_t mzi_count_without_merge_doubling = 0;
  double reduction_without_merge_doubling = 0.0;
  bool needs_reference = false;
  bool needs_post_processing = false;
  std::vector<std::string> notes;
};

/// Device counts for `spec` and for its conventional baseline.
AreaReport area_report(const ModelSpec& spec, const DeviceProfile& profile = {});

std::string to_csv(const AreaReport& report);
std::string to_json(const AreaReport& report);

/// Count formatted in units of 10^4 with one decimal, e.g. "31.7".
std::string format_e4(std::int64_t count);

}  // namespace oplixnet
