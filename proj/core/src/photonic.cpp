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

#include "oplixnet/photonic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "oplixnet/errors.hpp"

namespace oplixnet {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
  double w = std::fmod(a, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

// Closed form of mzi_transfer: i e^{i theta/2} [[e^{i phi} s, c], [e^{i phi} c, -s]]
// with s = sin(theta/2), c = cos(theta/2).
struct Transfer2 {
  Complex t00, t01, t10, t11;
};

Transfer2 closed_form(double theta, double phi) {
  const Complex pre = Complex(0.0, 1.0) * std::polar(1.0, theta / 2.0);
  const Complex ephi = std::polar(1.0, phi);
  const double s = std::sin(theta / 2.0);
  const double c = std::cos(theta / 2.0);
  return {pre * ephi * s, pre * c, pre * ephi * c, -pre * s};
}

using RowMajorC =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

void apply_mesh(const MziMesh& mesh, RowMajorC& x) {
  const Eigen::Index cols = x.cols();
  for (const MziSetting& st : mesh.stages) {
    const Transfer2 t = closed_form(st.theta, st.phi);
    Complex* top = x.row(st.top).data();
    Complex* bot = x.row(st.top + 1).data();
    for (Eigen::Index j = 0; j < cols; ++j) {
      const Complex a = top[j];
      const Complex b = bot[j];
      top[j] = t.t00 * a + t.t01 * b;
      bot[j] = t.t10 * a + t.t11 * b;
    }
  }
  for (int k = 0; k < mesh.width; ++k) {
    x.row(k) *= std::polar(1.0, mesh.phase_screen[k]);
  }
}

}  // namespace

void MziMesh::validate() const {
  if (width < 0) throw ConfigError("mesh width is negative");
  if (static_cast<int>(phase_screen.size()) != width) {
    throw ConfigError("phase screen has " + std::to_string(phase_screen.size()) +
                      " entries for mesh width " + std::to_string(width));
  }
  for (std::size_t s = 0; s < stages.size(); ++s) {
    if (stages[s].top < 0 || stages[s].top + 1 >= width) {
      throw ConfigError("stage " + std::to_string(s) + " targets waveguides (" +
                        std::to_string(stages[s].top) + ", " +
                        std::to_string(stages[s].top + 1) +
                        ") outside width " + std::to_string(width));
    }
  }
}

ComplexMatrix mzi_transfer(double theta, double phi) {
  const Transfer2 t = closed_form(theta, phi);
  ComplexMatrix m(2, 2);
  m << t.t00, t.t01, t.t10, t.t11;
  return m;
}

MziMesh decompose_unitary(const ComplexMatrix& u, double tolerance) {
  if (u.rows() != u.cols()) {
    throw ConfigError("decompose_unitary: matrix is " + std::to_string(u.rows()) +
                      "x" + std::to_string(u.cols()) + ", not square");
  }
  require_finite(u, "decompose_unitary");
  const int n = static_cast<int>(u.rows());
  const double deviation =
      (u.adjoint() * u - ComplexMatrix::Identity(n, n)).norm();
  if (deviation > tolerance) {
    throw NumericalError("decompose_unitary: ||U^H U - I||_F = " +
                         std::to_string(deviation) + " exceeds " +
                         std::to_string(tolerance));
  }

  MziMesh mesh;
  mesh.width = n;
  mesh.stages.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
  ComplexMatrix a = u;

  // Right-multiplying by T^H mixes columns (c, c+1). Nulling row r left to
  // right leaves rows below untouched because their entries in columns <= r
  // are already zero. Afterwards U T_1^H ... T_K^H = D, i.e. U = D T_K ... T_1.
  for (int r = n - 1; r >= 1; --r) {
    for (int c = 0; c < r; ++c) {
      const Complex x = a(r, c);
      const Complex y = a(r, c + 1);
      const double mag = std::hypot(std::abs(x), std::abs(y));
      double theta = 0.0;
      double phi = 0.0;
      if (mag >= std::numeric_limits<double>::min()) {
        theta = 2.0 * std::atan2(std::abs(y), std::abs(x));
        phi = std::numbers::pi + std::arg(x) - std::arg(y);
      }
      theta = wrap_angle(theta);
      phi = wrap_angle(phi);
      const Transfer2 t = closed_form(theta, phi);
      // [col_c, col_c1] <- [col_c, col_c1] * T^H
      const Complex h00 = std::conj(t.t00), h01 = std::conj(t.t10);
      const Complex h10 = std::conj(t.t01), h11 = std::conj(t.t11);
      // Rows below r are zero in these columns.
      for (int i = 0; i <= r; ++i) {
        const Complex p = a(i, c);
        const Complex q = a(i, c + 1);
        a(i, c) = p * h00 + q * h10;
        a(i, c + 1) = p * h01 + q * h11;
      }
      if (std::abs(a(r, c)) > 1e-6) {
        throw NumericalError("decompose_unitary: nulling failed at stage " +
                             std::to_string(mesh.stages.size()) + " (row " +
                             std::to_string(r) + ", column " +
                             std::to_string(c) + ")");
      }
      a(r, c) = Complex(0.0, 0.0);
      mesh.stages.push_back({c, theta, phi});
    }
  }

  mesh.phase_screen.resize(n);
  for (int k = 0; k < n; ++k) {
    if (std::abs(std::abs(a(k, k)) - 1.0) > 1e-6) {
      throw NumericalError("decompose_unitary: residual diagonal entry " +
                           std::to_string(k) + " is not unit modulus");
    }
    mesh.phase_screen[k] = wrap_angle(std::arg(a(k, k)));
  }
  return mesh;
}

ComplexMatrix mesh_forward(const MziMesh& mesh, const ComplexMatrix& x) {
  mesh.validate();
  if (x.rows() != mesh.width) {
    throw ConfigError("mesh_forward: input has " + std::to_string(x.rows()) +
                      " rows for mesh width " + std::to_string(mesh.width));
  }
  RowMajorC buf = x;
  apply_mesh(mesh, buf);
  return buf;
}

ComplexVector mesh_forward(const MziMesh& mesh, const ComplexVector& x) {
  return mesh_forward(mesh, ComplexMatrix(x)).col(0);
}

ComplexMatrix mesh_to_matrix(const MziMesh& mesh) {
  return mesh_forward(mesh, ComplexMatrix(ComplexMatrix::Identity(mesh.width, mesh.width)));
}

void PhotonicLayer::validate() const {
  v_mesh.validate();
  u_mesh.validate();
  if (v_mesh.width != cols || u_mesh.width != rows) {
    throw ConfigError("photonic layer mesh widths do not match " +
                      std::to_string(rows) + "x" + std::to_string(cols));
  }
  if (static_cast<int>(attenuators.size()) != std::min(rows, cols)) {
    throw ConfigError("photonic layer needs min(m, n) attenuators");
  }
  if (!(global_scale > 0.0) || !std::isfinite(global_scale)) {
    throw ConfigError("photonic layer global scale must be positive");
  }
}

PhotonicLayer compile_matrix(const ComplexMatrix& w) {
  require_finite(w, "compile_matrix");
  if (w.rows() == 0 || w.cols() == 0) {
    throw ConfigError("compile_matrix: empty matrix");
  }
  Eigen::BDCSVD<ComplexMatrix> svd(w, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success) {
    throw NumericalError("compile_matrix: SVD did not converge");
  }
  const RealVector& sigma = svd.singularValues();
  PhotonicLayer layer;
  layer.rows = static_cast<int>(w.rows());
  layer.cols = static_cast<int>(w.cols());
  const double smax = sigma.size() > 0 ? sigma(0) : 0.0;
  layer.global_scale = std::max(smax, 1.0);
  layer.attenuators.resize(sigma.size());
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    layer.attenuators[i] = std::clamp(sigma(i) / layer.global_scale, 0.0, 1.0);
  }
  layer.v_mesh = decompose_unitary(svd.matrixV().adjoint());
  layer.u_mesh = decompose_unitary(svd.matrixU());
  return layer;
}

ComplexMatrix simulate(const PhotonicLayer& layer, const ComplexMatrix& x) {
  layer.validate();
  if (x.rows() != layer.cols) {
    throw ConfigError("simulate: input has " + std::to_string(x.rows()) +
                      " rows for a layer with " + std::to_string(layer.cols) +
                      " inputs");
  }
  RowMajorC v = x;
  apply_mesh(layer.v_mesh, v);
  RowMajorC mid = RowMajorC::Zero(layer.rows, x.cols());
  for (std::size_t i = 0; i < layer.attenuators.size(); ++i) {
    mid.row(i) = v.row(i) * layer.attenuators[i];
  }
  apply_mesh(layer.u_mesh, mid);
  return mid;
}

ComplexMatrix layer_to_matrix(const PhotonicLayer& layer) {
  return simulate(layer, ComplexMatrix::Identity(layer.cols, layer.cols));
}

std::int64_t count_mzis(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) {
    throw ConfigError("count_mzis: dimensions must be positive");
  }
  return n * (n - 1) / 2 + std::min(m, n) + m * (m - 1) / 2;
}

std::int64_t count_unitary_mzis(std::int64_t n) {
  if (n < 1) throw ConfigError("count_unitary_mzis: width must be positive");
  return n * (n - 1) / 2;
}

}  // namespace oplixnet
