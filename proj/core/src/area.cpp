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

#include "oplixnet/area.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "oplixnet/errors.hpp"
#include "oplixnet/photonic.hpp"

namespace oplixnet {
namespace {

struct Totals {
  std::vector<LayerArea> layers;
  std::int64_t mzis = 0;
  std::int64_t dcs = 0;
  std::int64_t pss = 0;
};

Totals tally(const ResolvedModel& m, const DeviceProfile& p) {
  Totals t;
  for (const ResolvedLayer& l : m.layers) {
    for (std::size_t g = 0; g < l.gemms.size(); ++g) {
      const GemmDims& d = l.gemms[g];
      LayerArea a;
      a.label = l.label;
      if (l.gemms.size() > 1) {
        static const char* const parts[] = {".conv_a", ".conv_b", ".proj"};
        a.label += parts[g];
      }
      a.rows = d.rows;
      a.cols = d.cols;
      a.unitary = d.unitary;
      if (d.unitary) {
        a.mzis = count_unitary_mzis(d.rows);
        a.pss = a.mzis * p.ps_per_mzi + d.rows;
      } else {
        a.mzis = count_mzis(d.rows, d.cols);
        a.pss = a.mzis * p.ps_per_mzi + d.rows + d.cols;
      }
      a.dcs = a.mzis * p.dc_per_mzi;
      t.mzis += a.mzis;
      t.dcs += a.dcs;
      t.pss += a.pss;
      t.layers.push_back(std::move(a));
    }
  }
  t.dcs += m.encoder_dcs;
  return t;
}

std::string fmt_pct(double ratio) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", 100.0 * ratio);
  return buf;
}

}  // namespace

DeviceProfile DeviceProfile::parse(std::string_view name) {
  if (name == "2dc2ps") return {"2dc2ps", 2, 2};
  if (name == "2dc1ps") return {"2dc1ps", 2, 1};
  throw ConfigError("unknown device profile '" + std::string(name) +
                    "' (expected 2dc2ps|2dc1ps)");
}

std::string format_e4(std::int64_t count) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", static_cast<double>(count) / 1e4);
  return buf;
}

AreaReport area_report(const ModelSpec& spec, const DeviceProfile& profile) {
  const ResolvedModel model = resolve(spec);
  const ResolvedModel base = resolve(conventional_spec(spec.arch));
  const Totals t = tally(model, profile);
  const Totals b = tally(base, profile);

  AreaReport r;
  r.model = spec.arch.name;
  r.flavor = flavor_name(spec.flavor);
  r.scheme = spec.scheme ? scheme_code(spec.scheme->kind) : "none";
  r.decoder = model.conventional_head ? "photodiode" : decoder_name(spec.decoder.kind);
  r.profile = profile;
  r.layers = t.layers;
  r.encoder_dcs = model.encoder_dcs;
  r.mzi_count = t.mzis;
  r.dc_count = t.dcs;
  r.ps_count = t.pss;
  r.baseline_mzi_count = b.mzis;
  r.baseline_dc_count = b.dcs;
  r.baseline_ps_count = b.pss;
  r.reduction_ratio = 1.0 - static_cast<double>(t.mzis) / static_cast<double>(b.mzis);
  r.needs_reference = model.head.needs_reference;
  r.needs_post_processing = model.head.needs_post_processing;

  r.mzi_count_without_merge_doubling = t.mzis;
  if (!model.conventional_head && spec.decoder.kind == DecoderKind::Merge &&
      model.head.base_out != model.head.classes) {
    // The last weight layer is the final dense layer.
    for (auto it = model.layers.rbegin(); it != model.layers.rend(); ++it) {
      if (it->kind == OpKind::Dense) {
        const GemmDims& d = it->gemms.front();
        r.mzi_count_without_merge_doubling =
            t.mzis - count_mzis(d.rows, d.cols) +
            count_mzis(model.head.base_out, d.cols);
        break;
      }
    }
  }
  r.reduction_without_merge_doubling =
      1.0 - static_cast<double>(r.mzi_count_without_merge_doubling) /
                static_cast<double>(b.mzis);

  r.notes.push_back("device profile " + profile.name + ": " +
                    std::to_string(profile.dc_per_mzi) + " DC + " +
                    std::to_string(profile.ps_per_mzi) +
                    " PS per MZI; attenuator sites counted as MZIs; each "
                    "mesh adds one output phase shifter per waveguide");
  if (model.encoder_dcs > 0) {
    r.notes.push_back("encoder: one directional coupler per complex input (" +
                      std::to_string(model.encoder_dcs) + ")");
  }
  if (!spec.arch.notes.empty()) r.notes.push_back(spec.arch.notes);
  if (r.needs_reference) {
    r.notes.push_back("coherent detection: needs a reference signal, two extra "
                      "detection passes and post-processing");
  }
  return r;
}

std::string to_csv(const AreaReport& r) {
  std::ostringstream o;
  o << "# model=" << r.model << " flavor=" << r.flavor << " assignment=" << r.scheme
    << " decoder=" << r.decoder << " profile=" << r.profile.name << '\n';
  for (const auto& n : r.notes) o << "# " << n << '\n';
  o << "layer,rows,cols,unitary,mzi,dc,ps\n";
  for (const auto& l : r.layers) {
    o << l.label << ',' << l.rows << ',' << l.cols << ',' << (l.unitary ? 1 : 0)
      << ',' << l.mzis << ',' << l.dcs << ',' << l.pss << '\n';
  }
  if (r.encoder_dcs > 0) o << "encoder,,,0,0," << r.encoder_dcs << ",0\n";
  o << "total,,,," << r.mzi_count << ',' << r.dc_count << ',' << r.ps_count << '\n';
  o << "baseline,,,," << r.baseline_mzi_count << ',' << r.baseline_dc_count << ','
    << r.baseline_ps_count << '\n';
  o << "\nmetric,value\n";
  o << "mzi_total," << r.mzi_count << '\n';
  o << "mzi_total_e4," << format_e4(r.mzi_count) << '\n';
  o << "mzi_baseline," << r.baseline_mzi_count << '\n';
  o << "mzi_baseline_e4," << format_e4(r.baseline_mzi_count) << '\n';
  o << "mzi_reduction," << fmt_pct(r.reduction_ratio) << '\n';
  o << "mzi_total_without_merge_doubling," << r.mzi_count_without_merge_doubling << '\n';
  o << "mzi_reduction_without_merge_doubling,"
    << fmt_pct(r.reduction_without_merge_doubling) << '\n';
  o << "dc_ratio_to_baseline,"
    << fmt_pct(static_cast<double>(r.dc_count) / static_cast<double>(r.baseline_dc_count))
    << '\n';
  o << "ps_ratio_to_baseline,"
    << fmt_pct(static_cast<double>(r.ps_count) / static_cast<double>(r.baseline_ps_count))
    << '\n';
  return o.str();
}

std::string to_json(const AreaReport& r) {
  using nlohmann::ordered_json;
  ordered_json layers = ordered_json::array();
  for (const auto& l : r.layers) {
    layers.push_back({{"layer", l.label}, {"rows", l.rows}, {"cols", l.cols},
                      {"unitary", l.unitary}, {"mzi", l.mzis}, {"dc", l.dcs},
                      {"ps", l.pss}});
  }
  ordered_json j = {
      {"model", r.model},
      {"flavor", r.flavor},
      {"assignment", r.scheme},
      {"decoder", r.decoder},
      {"device_profile", {{"name", r.profile.name},
                          {"dc_per_mzi", r.profile.dc_per_mzi},
                          {"ps_per_mzi", r.profile.ps_per_mzi}}},
      {"layers", std::move(layers)},
      {"encoder_dc", r.encoder_dcs},
      {"mzi_count", r.mzi_count},
      {"mzi_count_e4", format_e4(r.mzi_count)},
      {"dc_count", r.dc_count},
      {"ps_count", r.ps_count},
      {"baseline_mzi_count", r.baseline_mzi_count},
      {"baseline_mzi_count_e4", format_e4(r.baseline_mzi_count)},
      {"baseline_dc_count", r.baseline_dc_count},
      {"baseline_ps_count", r.baseline_ps_count},
      {"reduction_ratio", r.reduction_ratio},
      {"mzi_count_without_merge_doubling", r.mzi_count_without_merge_doubling},
      {"reduction_without_merge_doubling", r.reduction_without_merge_doubling},
      {"needs_reference", r.needs_reference},
      {"needs_post_processing", r.needs_post_processing},
      {"notes", r.notes},
  };
  return j.dump(2);
}

}  // namespace oplixnet
