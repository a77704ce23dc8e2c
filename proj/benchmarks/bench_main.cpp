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


#include <benchmark/benchmark.h>

#include <vector>

#include "oplixnet/area.hpp"
#include "oplixnet/losses.hpp"
#include "oplixnet/network.hpp"
#include "oplixnet/optimizer.hpp"
#include "oplixnet/photonic.hpp"
#include "oplixnet/random.hpp"

namespace oplixnet {
namespace {

ComplexMatrix gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < m.size(); ++i) m(i) = Complex(rng.normal(), rng.normal());
  return m;
}

ComplexMatrix unitary(int n, Rng& rng) {
  Eigen::HouseholderQR<ComplexMatrix> qr(gaussian(n, n, rng));
  return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

void BM_DecomposeUnitary(benchmark::State& state) {
  Rng rng(1);
  const ComplexMatrix u = unitary(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(decompose_unitary(u));
}
BENCHMARK(BM_DecomposeUnitary)->RangeMultiplier(2)->Range(4, 64);

void BM_CompileMatrix(benchmark::State& state) {
  Rng rng(2);
  const ComplexMatrix w = gaussian(state.range(0), state.range(1), rng);
  for (auto _ : state) benchmark::DoNotOptimize(compile_matrix(w));
}
BENCHMARK(BM_CompileMatrix)->Args({50, 392})->Args({5, 50});

void BM_MeshForward(benchmark::State& state) {
  Rng rng(3);
  const int n = static_cast<int>(state.range(0));
  const MziMesh mesh = decompose_unitary(unitary(n, rng));
  const ComplexMatrix x = gaussian(n, 64, rng);
  for (auto _ : state) benchmark::DoNotOptimize(mesh_forward(mesh, x));
  state.SetItemsProcessed(state.iterations() * 64);
}
BENCHMARK(BM_MeshForward)->RangeMultiplier(2)->Range(8, 64);

void BM_AreaReportZoo(benchmark::State& state) {
  std::vector<ModelSpec> specs;
  for (const std::string& name : zoo_names()) {
    ModelSpec s = conventional_spec(zoo_architecture(name));
    s.flavor = Flavor::SCVNN;
    s.scheme = AssignmentScheme::of(zoo_architecture(name).input.channels == 1
                                        ? SchemeKind::SpatialInterlace
                                        : SchemeKind::ChannelLossless);
    specs.push_back(s);
  }
  for (auto _ : state) {
    for (const ModelSpec& s : specs) benchmark::DoNotOptimize(area_report(s));
  }
}
BENCHMARK(BM_AreaReportZoo);

// One Adam step of the FCNN on a batch of 64: forward, loss, backward, update.
void BM_TrainStepFcnn(benchmark::State& state) {
  ModelSpec spec = conventional_spec(zoo_architecture("fcnn"));
  if (state.range(0) == 1) {
    spec.flavor = Flavor::SCVNN;
    spec.scheme = AssignmentScheme::of(SchemeKind::SpatialInterlace);
  }
  Network net(spec, 1);
  Rng rng(4);
  ComplexMatrix x = gaussian(net.input_size(), 64, rng);
  std::vector<int> y(64);
  for (int& v : y) v = static_cast<int>(rng.below(10));
  Optimizer opt(OptimizerConfig{});
  for (auto _ : state) {
    RealMatrix g;
    cross_entropy(net.forward(x), y, &g);
    net.zero_grad();
    net.backward(g);
    opt.step(net.params());
  }
  state.SetLabel(state.range(0) == 1 ? "scvnn-si" : "cvnn");
  state.SetItemsProcessed(state.iterations() * 64);
}
BENCHMARK(BM_TrainStepFcnn)->Arg(0)->Arg(1);

}  // namespace
}  // namespace oplixnet
