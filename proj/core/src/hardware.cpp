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

#include "oplixnet/hardware.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "oplixnet/errors.hpp"

namespace oplixnet {

namespace {

const ComplexMatrix* weight_of(const Layer& l) {
  if (const auto* d = dynamic_cast<const DenseOp*>(&l)) return &d->weight();
  if (const auto* c = dynamic_cast<const ConvOp*>(&l)) return &c->kernel();
  return nullptr;
}

double angle_gap(double a, double b) {
  double d = std::fmod(std::abs(a - b), 2 * std::numbers::pi);
  return std::min(d, 2 * std::numbers::pi - d);
}

int first_stage_diff(const MziMesh& a, const MziMesh& b) {
  const std::size_t n = std::min(a.stages.size(), b.stages.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.stages[i].top != b.stages[i].top ||
        angle_gap(a.stages[i].theta, b.stages[i].theta) > 1e-9 ||
        angle_gap(a.stages[i].phi, b.stages[i].phi) > 1e-9) {
      return static_cast<int>(i);
    }
  }
  if (a.stages.size() != b.stages.size()) return static_cast<int>(n);
  return -1;
}

bool screen_differs(const MziMesh& a, const MziMesh& b) {
  if (a.phase_screen.size() != b.phase_screen.size()) return true;
  for (std::size_t i = 0; i < a.phase_screen.size(); ++i) {
    if (angle_gap(a.phase_screen[i], b.phase_screen[i]) > 1e-9) return true;
  }
  return false;
}

}  // namespace

CompiledNetwork compile_network(const Network& net) {
  CompiledNetwork hw;
  for (std::size_t i = 0; i < net.size(); ++i) {
    const Layer& l = net.layer(i);
    CompiledLayer c;
    c.index = i;
    c.label = l.label();
    c.kind = l.kind();
    if (const ComplexMatrix* w = weight_of(l)) {
      c.optics = compile_matrix(*w);
    } else if (const auto* u = dynamic_cast<const UnitaryMeshOp*>(&l)) {
      c.mesh = u->mesh();
    } else {
      continue;
    }
    hw.layers.push_back(std::move(c));
  }
  return hw;
}

RealMatrix hardware_logits(const Network& net, const CompiledNetwork& hw,
                           const ComplexMatrix& x) {
  if (x.rows() != net.input_size()) {
    throw ConfigError("batch has " + std::to_string(x.rows()) +
                      " features, model expects " + std::to_string(net.input_size()));
  }
  std::size_t next = 0;
  ComplexMatrix h = x;
  for (std::size_t i = 0; i < net.size(); ++i) {
    const Layer& l = net.layer(i);
    const CompiledLayer* c =
        next < hw.layers.size() && hw.layers[next].index == i ? &hw.layers[next] : nullptr;
    if (c) ++next;
    if (const auto* d = dynamic_cast<const DenseOp*>(&l)) {
      if (!c || !c->optics) throw ConfigError(l.label() + " has no compiled optics");
      ComplexMatrix y = simulate(*c->optics, h) * c->optics->global_scale;
      if (d->has_bias()) y.colwise() += d->bias();
      h = std::move(y);
    } else if (const auto* cv = dynamic_cast<const ConvOp*>(&l)) {
      if (!c || !c->optics) throw ConfigError(l.label() + " has no compiled optics");
      const ComplexMatrix q = cv->im2col(h);
      const ComplexMatrix yt =
          (simulate(*c->optics, q.transpose()) * c->optics->global_scale).transpose();
      h = cv->to_columns(yt, h.cols());
    } else if (dynamic_cast<const UnitaryMeshOp*>(&l)) {
      if (!c || !c->mesh) throw ConfigError(l.label() + " has no compiled mesh");
      h = mesh_forward(*c->mesh, h);
    } else {
      h = l.infer(h);
    }
  }
  if (next != hw.layers.size()) {
    throw ConfigError("compiled network does not match the model's weight layers");
  }
  return net.readout(h);
}

std::vector<LayerMismatch> check_compiled(const Network& net, const CompiledNetwork& hw,
                                          double tolerance) {
  std::vector<LayerMismatch> out;
  for (const CompiledLayer& c : hw.layers) {
    if (c.index >= net.size()) throw ConfigError("compiled layer index out of range");
    const Layer& l = net.layer(c.index);
    LayerMismatch m;
    m.label = c.label;
    if (const ComplexMatrix* w = weight_of(l)) {
      if (!c.optics) throw ConfigError(c.label + " has no compiled optics");
      if (c.optics->rows != w->rows() || c.optics->cols != w->cols()) {
        m.max_abs_error = std::numeric_limits<double>::infinity();
        m.mesh = "shape";
        out.push_back(m);
        continue;
      }
      const ComplexMatrix got = layer_to_matrix(*c.optics) * c.optics->global_scale;
      m.max_abs_error = (got - *w).cwiseAbs().maxCoeff();
      if (m.max_abs_error > tolerance) {
        const PhotonicLayer fresh = compile_matrix(*w);
        if ((m.stage = first_stage_diff(c.optics->v_mesh, fresh.v_mesh)) >= 0) {
          m.mesh = "v";
        } else if ((m.stage = first_stage_diff(c.optics->u_mesh, fresh.u_mesh)) >= 0) {
          m.mesh = "u";
        } else if (screen_differs(c.optics->v_mesh, fresh.v_mesh)) {
          m.mesh = "v-phase-screen";
        } else if (screen_differs(c.optics->u_mesh, fresh.u_mesh)) {
          m.mesh = "u-phase-screen";
        } else {
          m.mesh = "attenuators";
        }
        out.push_back(m);
      }
    } else if (const auto* u = dynamic_cast<const UnitaryMeshOp*>(&l)) {
      if (!c.mesh) throw ConfigError(c.label + " has no compiled mesh");
      const MziMesh ref = u->mesh();
      m.max_abs_error = (mesh_to_matrix(*c.mesh) - mesh_to_matrix(ref)).cwiseAbs().maxCoeff();
      if (m.max_abs_error > tolerance) {
        m.stage = first_stage_diff(*c.mesh, ref);
        m.mesh = m.stage >= 0 ? "mesh" : "phase-screen";
        out.push_back(m);
      }
    }
  }
  return out;
}

}  // namespace oplixnet
