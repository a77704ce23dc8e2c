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

#include <complex>

#include <Eigen/Dense>

namespace oplixnet {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Throws ConfigError naming `what` if any entry is NaN or infinite.
void require_finite(const ComplexMatrix& m, const char* what);
void require_finite(const RealMatrix& m, const char* what);
void require_finite(const ComplexVector& v, const char* what);
void require_finite(const RealVector& v, const char* what);

/// Structured real form of a complex matrix: entry a+jb at (r, c) becomes the
/// block [[a, -b], [b, a]] at rows 2r..2r+1, cols 2c..2c+1.
RealMatrix realify(const ComplexMatrix& w);

/// Real at even index, imaginary at odd index.
RealVector interleave(const ComplexVector& x);
/// Column-wise interleave of a batch (features x batch).
RealMatrix interleave_columns(const ComplexMatrix& x);

/// Inverse of interleave. Throws ConfigError on odd length.
ComplexVector deinterleave(const RealVector& x);
ComplexMatrix deinterleave_columns(const RealMatrix& x);

/// Plain complex matrix-vector product with a dimension check.
ComplexVector complex_mvm(const ComplexMatrix& w, const ComplexVector& x);

enum class ActivationKind { SplitRelu, ModRelu };

/// ReLU on the real and imaginary parts independently.
ComplexMatrix split_relu(const ComplexMatrix& x);
ComplexVector split_relu(const ComplexVector& x);

/// modReLU: (|z| + offset) z/|z| where |z| + offset > 0, else 0.
ComplexMatrix mod_relu(const ComplexMatrix& x, double offset);

/// Photodiode reading |z|^2, element-wise.
RealVector detect_intensity(const ComplexVector& x);
RealMatrix detect_intensity(const ComplexMatrix& x);

/// Amplitude reading |z|, the alternative detector nonlinearity.
RealMatrix detect_magnitude(const ComplexMatrix& x);

}  // namespace oplixnet
