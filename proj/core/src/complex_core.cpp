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

#include "oplixnet/complex_core.hpp"

#include <cmath>
#include <string>

#include "oplixnet/errors.hpp"

namespace oplixnet {

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite()) {
    throw ConfigError(std::string(what) + ": non-finite entry");
  }
}

void require_finite(const RealMatrix& m, const char* what) {
  if (!m.allFinite()) {
    throw ConfigError(std::string(what) + ": non-finite entry");
  }
}

void require_finite(const ComplexVector& v, const char* what) {
  if (!v.allFinite()) {
    throw ConfigError(std::string(what) + ": non-finite entry");
  }
}

void require_finite(const RealVector& v, const char* what) {
  if (!v.allFinite()) {
    throw ConfigError(std::string(what) + ": non-finite entry");
  }
}

RealMatrix realify(const ComplexMatrix& w) {
  require_finite(w, "realify");
  RealMatrix out(2 * w.rows(), 2 * w.cols());
  for (Eigen::Index c = 0; c < w.cols(); ++c) {
    for (Eigen::Index r = 0; r < w.rows(); ++r) {
      const double a = w(r, c).real();
      const double b = w(r, c).imag();
      out(2 * r, 2 * c) = a;
      out(2 * r, 2 * c + 1) = -b;
      out(2 * r + 1, 2 * c) = b;
      out(2 * r + 1, 2 * c + 1) = a;
    }
  }
  return out;
}

RealVector interleave(const ComplexVector& x) {
  require_finite(x, "interleave");
  RealVector out(2 * x.size());
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    out(2 * k) = x(k).real();
    out(2 * k + 1) = x(k).imag();
  }
  return out;
}

RealMatrix interleave_columns(const ComplexMatrix& x) {
  RealMatrix out(2 * x.rows(), x.cols());
  for (Eigen::Index c = 0; c < x.cols(); ++c) {
    for (Eigen::Index k = 0; k < x.rows(); ++k) {
      out(2 * k, c) = x(k, c).real();
      out(2 * k + 1, c) = x(k, c).imag();
    }
  }
  return out;
}

ComplexVector deinterleave(const RealVector& x) {
  if (x.size() % 2 != 0) {
    throw ConfigError("deinterleave: odd length " + std::to_string(x.size()));
  }
  ComplexVector out(x.size() / 2);
  for (Eigen::Index k = 0; k < out.size(); ++k) {
    out(k) = Complex(x(2 * k), x(2 * k + 1));
  }
  return out;
}

ComplexMatrix deinterleave_columns(const RealMatrix& x) {
  if (x.rows() % 2 != 0) {
    throw ConfigError("deinterleave: odd row count " +
                      std::to_string(x.rows()));
  }
  ComplexMatrix out(x.rows() / 2, x.cols());
  for (Eigen::Index c = 0; c < x.cols(); ++c) {
    for (Eigen::Index k = 0; k < out.rows(); ++k) {
      out(k, c) = Complex(x(2 * k, c), x(2 * k + 1, c));
    }
  }
  return out;
}

ComplexVector complex_mvm(const ComplexMatrix& w, const ComplexVector& x) {
  if (w.cols() != x.size()) {
    throw ConfigError("complex_mvm: matrix has " + std::to_string(w.cols()) +
                      " columns but vector has " + std::to_string(x.size()) +
                      " entries");
  }
  return w * x;
}

ComplexMatrix split_relu(const ComplexMatrix& x) {
  return x.unaryExpr([](const Complex& z) {
    return Complex(z.real() > 0.0 ? z.real() : 0.0,
                   z.imag() > 0.0 ? z.imag() : 0.0);
  });
}

ComplexVector split_relu(const ComplexVector& x) {
  return x.unaryExpr([](const Complex& z) {
    return Complex(z.real() > 0.0 ? z.real() : 0.0,
                   z.imag() > 0.0 ? z.imag() : 0.0);
  });
}

ComplexMatrix mod_relu(const ComplexMatrix& x, double offset) {
  return x.unaryExpr([offset](const Complex& z) {
    const double r = std::abs(z);
    if (r == 0.0 || r + offset <= 0.0) return Complex(0.0, 0.0);
    return z * ((r + offset) / r);
  });
}

RealVector detect_intensity(const ComplexVector& x) {
  return x.cwiseAbs2();
}

RealMatrix detect_intensity(const ComplexMatrix& x) {
  return x.cwiseAbs2();
}

RealMatrix detect_magnitude(const ComplexMatrix& x) {
  return x.cwiseAbs();
}

}  // namespace oplixnet
