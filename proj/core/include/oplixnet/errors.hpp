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

#include <stdexcept>
#include <string>

namespace oplixnet {

/// Bad user input: malformed model spec, unknown names, inconsistent
/// dimensions, invalid flag values.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class DataErrorKind {
  Missing,
  BadMagic,
  Truncated,
  CountMismatch,
  LabelOutOfRange,
  RowSize,
  Empty,
  Insufficient,
};

/// Dataset files that are missing, truncated, or carry a wrong header.
class DataError : public std::runtime_error {
 public:
  DataError(DataErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  DataErrorKind kind() const { return kind_; }

 private:
  DataErrorKind kind_;
};

/// Numerical failures: non-unitary input to a mesh decomposition, SVD
/// non-convergence, a diverging training run.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A compiled netlist that no longer reproduces its software weights.
class VerificationError : public std::runtime_error {
 public:
  VerificationError(const std::string& what, int layer, int stage)
      : std::runtime_error(what), layer_(layer), stage_(stage) {}

  int layer() const { return layer_; }
  /// -1 when the deviation could not be pinned to a single MZI stage.
  int stage() const { return stage_; }

 private:
  int layer_;
  int stage_;
};

}  // namespace oplixnet
