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

#include "oplixnet/layers.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "oplixnet/errors.hpp"

namespace oplixnet {

namespace {

std::span<double> as_reals(ComplexMatrix& m) {
  return {reinterpret_cast<double*>(m.data()),
          static_cast<std::size_t>(2 * m.size())};
}
std::span<double> as_reals(ComplexVector& v) {
  return {reinterpret_cast<double*>(v.data()),
          static_cast<std::size_t>(2 * v.size())};
}

void check_rows(const ComplexMatrix& x, Eigen::Index rows, const std::string& who) {
  if (x.rows() != rows) {
    throw ConfigError(who + ": expected " + std::to_string(rows) +
                      " input features, got " + std::to_string(x.rows()));
  }
}

void glorot(ComplexMatrix& w, Rng& rng, double fan_in, double fan_out,
            bool real_only) {
  double sd = std::sqrt((real_only ? 2.0 : 1.0) / (fan_in + fan_out));
  for (Eigen::Index j = 0; j < w.cols(); ++j) {
    for (Eigen::Index i = 0; i < w.rows(); ++i) {
      double re = sd * rng.normal();
      double im = real_only ? 0.0 : sd * rng.normal();
      w(i, j) = Complex(re, im);
    }
  }
}

double wrap(double a) {
  double t = std::fmod(a, 2 * std::numbers::pi);
  return t < 0 ? t + 2 * std::numbers::pi : t;
}

}  // namespace

// ---------------------------------------------------------------- dense

DenseOp::DenseOp(std::string label, int in, int out, bool bias, bool real_only)
    : label_(std::move(label)), has_bias_(bias), real_only_(real_only) {
  if (in <= 0 || out <= 0) throw ConfigError(label_ + ": empty dense layer");
  w_ = ComplexMatrix::Zero(out, in);
  dw_ = ComplexMatrix::Zero(out, in);
  b_ = ComplexVector::Zero(has_bias_ ? out : 0);
  db_ = ComplexVector::Zero(has_bias_ ? out : 0);
}

std::unique_ptr<Layer> DenseOp::clone() const {
  return std::make_unique<DenseOp>(*this);
}

void DenseOp::init(Rng& rng) {
  glorot(w_, rng, static_cast<double>(w_.cols()), static_cast<double>(w_.rows()),
         real_only_);
  b_.setZero();
}

ComplexMatrix DenseOp::infer(const ComplexMatrix& x) const {
  check_rows(x, w_.cols(), label_);
  ComplexMatrix y = w_ * x;
  if (has_bias_) y.colwise() += b_;
  return y;
}

ComplexMatrix DenseOp::forward(const ComplexMatrix& x) {
  x_ = x;
  return infer(x);
}

ComplexMatrix DenseOp::backward(const ComplexMatrix& grad) {
  ComplexMatrix g = grad * x_.adjoint();
  if (real_only_) g = g.real().cast<Complex>();
  dw_ += g;
  if (has_bias_) {
    ComplexVector gb = grad.rowwise().sum();
    if (real_only_) gb = gb.real().cast<Complex>();
    db_ += gb;
  }
  return w_.adjoint() * grad;
}

std::vector<ParamView> DenseOp::params() {
  std::vector<ParamView> out{{label_ + ".weight", as_reals(w_), as_reals(dw_)}};
  if (has_bias_) out.push_back({label_ + ".bias", as_reals(b_), as_reals(db_)});
  return out;
}

// ---------------------------------------------------------------- conv

ConvOp::ConvOp(std::string label, Shape3 in, int c_out, int kernel, int stride,
               int pad, bool bias, bool real_only)
    : label_(std::move(label)),
      in_(in),
      kernel_size_(kernel),
      stride_(stride),
      pad_(pad),
      has_bias_(bias),
      real_only_(real_only) {
  if (c_out <= 0 || kernel <= 0 || stride <= 0 || pad < 0) {
    throw ConfigError(label_ + ": bad convolution geometry");
  }
  int ho = (in.height + 2 * pad - kernel) / stride + 1;
  int wo = (in.width + 2 * pad - kernel) / stride + 1;
  if (ho <= 0 || wo <= 0) throw ConfigError(label_ + ": kernel larger than input");
  out_ = Shape3{ho, wo, c_out};
  int cols = in.channels * kernel * kernel;
  k_ = ComplexMatrix::Zero(c_out, cols);
  dk_ = ComplexMatrix::Zero(c_out, cols);
  b_ = ComplexVector::Zero(has_bias_ ? c_out : 0);
  db_ = ComplexVector::Zero(has_bias_ ? c_out : 0);
}

std::unique_ptr<Layer> ConvOp::clone() const {
  return std::make_unique<ConvOp>(*this);
}

void ConvOp::init(Rng& rng) {
  double kk = static_cast<double>(kernel_size_ * kernel_size_);
  glorot(k_, rng, in_.channels * kk, out_.channels * kk, real_only_);
  b_.setZero();
}

ComplexMatrix ConvOp::im2col(const ComplexMatrix& x) const {
  check_rows(x, in_.size(), label_);
  const int k = kernel_size_;
  const Eigen::Index positions = static_cast<Eigen::Index>(out_.height) * out_.width;
  ComplexMatrix q = ComplexMatrix::Zero(x.cols() * positions, k_.cols());
  for (Eigen::Index s = 0; s < x.cols(); ++s) {
    const Complex* src = x.col(s).data();
    for (int ci = 0; ci < in_.channels; ++ci) {
      for (int ki = 0; ki < k; ++ki) {
        for (int kj = 0; kj < k; ++kj) {
          Eigen::Index col = (static_cast<Eigen::Index>(ci) * k + ki) * k + kj;
          Complex* dst = q.col(col).data() + s * positions;
          for (int ho = 0; ho < out_.height; ++ho) {
            int h = ho * stride_ + ki - pad_;
            if (h < 0 || h >= in_.height) continue;
            for (int wo = 0; wo < out_.width; ++wo) {
              int w = wo * stride_ + kj - pad_;
              if (w < 0 || w >= in_.width) continue;
              dst[ho * out_.width + wo] =
                  src[(static_cast<Eigen::Index>(ci) * in_.height + h) * in_.width + w];
            }
          }
        }
      }
    }
  }
  return q;
}

ComplexMatrix ConvOp::to_columns(const ComplexMatrix& yt, Eigen::Index batch) const {
  const Eigen::Index positions = static_cast<Eigen::Index>(out_.height) * out_.width;
  ComplexMatrix y(out_.size(), batch);
  for (Eigen::Index s = 0; s < batch; ++s) {
    for (int c = 0; c < out_.channels; ++c) {
      auto seg = y.col(s).segment(c * positions, positions);
      seg = yt.col(c).segment(s * positions, positions);
      if (has_bias_) seg.array() += b_(c);
    }
  }
  return y;
}

ComplexMatrix ConvOp::infer(const ComplexMatrix& x) const {
  ComplexMatrix q = im2col(x);
  ComplexMatrix yt = q * k_.transpose();
  return to_columns(yt, x.cols());
}

ComplexMatrix ConvOp::forward(const ComplexMatrix& x) {
  patches_ = im2col(x);
  batch_ = x.cols();
  ComplexMatrix yt = patches_ * k_.transpose();
  return to_columns(yt, batch_);
}

ComplexMatrix ConvOp::backward(const ComplexMatrix& grad) {
  const Eigen::Index positions = static_cast<Eigen::Index>(out_.height) * out_.width;
  ComplexMatrix gt(batch_ * positions, out_.channels);
  for (Eigen::Index s = 0; s < batch_; ++s) {
    for (int c = 0; c < out_.channels; ++c) {
      gt.col(c).segment(s * positions, positions) =
          grad.col(s).segment(c * positions, positions);
    }
  }
  ComplexMatrix g = gt.transpose() * patches_.conjugate();
  if (real_only_) g = g.real().cast<Complex>();
  dk_ += g;
  if (has_bias_) {
    ComplexVector gb = gt.colwise().sum().transpose();
    if (real_only_) gb = gb.real().cast<Complex>();
    db_ += gb;
  }
  ComplexMatrix dq = gt * k_.conjugate();

  const int k = kernel_size_;
  ComplexMatrix dx = ComplexMatrix::Zero(in_.size(), batch_);
  for (Eigen::Index s = 0; s < batch_; ++s) {
    Complex* dst = dx.col(s).data();
    for (int ci = 0; ci < in_.channels; ++ci) {
      for (int ki = 0; ki < k; ++ki) {
        for (int kj = 0; kj < k; ++kj) {
          Eigen::Index col = (static_cast<Eigen::Index>(ci) * k + ki) * k + kj;
          const Complex* src = dq.col(col).data() + s * positions;
          for (int ho = 0; ho < out_.height; ++ho) {
            int h = ho * stride_ + ki - pad_;
            if (h < 0 || h >= in_.height) continue;
            for (int wo = 0; wo < out_.width; ++wo) {
              int w = wo * stride_ + kj - pad_;
              if (w < 0 || w >= in_.width) continue;
              dst[(static_cast<Eigen::Index>(ci) * in_.height + h) * in_.width + w] +=
                  src[ho * out_.width + wo];
            }
          }
        }
      }
    }
  }
  return dx;
}

std::vector<ParamView> ConvOp::params() {
  std::vector<ParamView> out{{label_ + ".weight", as_reals(k_), as_reals(dk_)}};
  if (has_bias_) out.push_back({label_ + ".bias", as_reals(b_), as_reals(db_)});
  return out;
}

// ---------------------------------------------------------------- pooling

MaxPoolOp::MaxPoolOp(Shape3 in, int size, int stride)
    : in_(in), size_(size), stride_(stride) {
  if (size <= 0 || stride <= 0) throw ConfigError("maxpool: bad window");
  int ho = (in.height - size) / stride + 1;
  int wo = (in.width - size) / stride + 1;
  if (ho <= 0 || wo <= 0) throw ConfigError("maxpool: window larger than input");
  out_ = Shape3{ho, wo, in.channels};
}

std::unique_ptr<Layer> MaxPoolOp::clone() const {
  return std::make_unique<MaxPoolOp>(*this);
}

ComplexMatrix MaxPoolOp::run(const ComplexMatrix& x, std::vector<int>* arg_re,
                             std::vector<int>* arg_im) const {
  check_rows(x, in_.size(), "maxpool");
  ComplexMatrix y(out_.size(), x.cols());
  if (arg_re) {
    arg_re->assign(static_cast<std::size_t>(y.size()), 0);
    arg_im->assign(static_cast<std::size_t>(y.size()), 0);
  }
  for (Eigen::Index s = 0; s < x.cols(); ++s) {
    const Complex* src = x.col(s).data();
    for (int c = 0; c < out_.channels; ++c) {
      for (int ho = 0; ho < out_.height; ++ho) {
        for (int wo = 0; wo < out_.width; ++wo) {
          double best_re = -std::numeric_limits<double>::infinity();
          double best_im = best_re;
          int at_re = 0, at_im = 0;
          for (int i = 0; i < size_; ++i) {
            for (int j = 0; j < size_; ++j) {
              int idx = (c * in_.height + ho * stride_ + i) * in_.width +
                        wo * stride_ + j;
              if (src[idx].real() > best_re) {
                best_re = src[idx].real();
                at_re = idx;
              }
              if (src[idx].imag() > best_im) {
                best_im = src[idx].imag();
                at_im = idx;
              }
            }
          }
          Eigen::Index o = (c * out_.height + ho) * out_.width + wo;
          y(o, s) = Complex(best_re, best_im);
          if (arg_re) {
            std::size_t flat = static_cast<std::size_t>(s * y.rows() + o);
            (*arg_re)[flat] = at_re;
            (*arg_im)[flat] = at_im;
          }
        }
      }
    }
  }
  return y;
}

ComplexMatrix MaxPoolOp::infer(const ComplexMatrix& x) const {
  return run(x, nullptr, nullptr);
}

ComplexMatrix MaxPoolOp::forward(const ComplexMatrix& x) {
  in_rows_ = x.rows();
  batch_ = x.cols();
  return run(x, &arg_re_, &arg_im_);
}

ComplexMatrix MaxPoolOp::backward(const ComplexMatrix& grad) {
  ComplexMatrix dx = ComplexMatrix::Zero(in_rows_, batch_);
  for (Eigen::Index s = 0; s < batch_; ++s) {
    for (Eigen::Index o = 0; o < grad.rows(); ++o) {
      std::size_t flat = static_cast<std::size_t>(s * grad.rows() + o);
      dx(arg_re_[flat], s) += Complex(grad(o, s).real(), 0.0);
      dx(arg_im_[flat], s) += Complex(0.0, grad(o, s).imag());
    }
  }
  return dx;
}

std::unique_ptr<Layer> GlobalAvgPoolOp::clone() const {
  return std::make_unique<GlobalAvgPoolOp>(*this);
}

ComplexMatrix GlobalAvgPoolOp::infer(const ComplexMatrix& x) const {
  check_rows(x, in_.size(), "gap");
  const Eigen::Index hw = static_cast<Eigen::Index>(in_.height) * in_.width;
  ComplexMatrix y(in_.channels, x.cols());
  for (Eigen::Index s = 0; s < x.cols(); ++s) {
    for (int c = 0; c < in_.channels; ++c) {
      y(c, s) = x.col(s).segment(c * hw, hw).mean();
    }
  }
  return y;
}

ComplexMatrix GlobalAvgPoolOp::backward(const ComplexMatrix& grad) {
  const Eigen::Index hw = static_cast<Eigen::Index>(in_.height) * in_.width;
  ComplexMatrix dx(in_.size(), grad.cols());
  for (Eigen::Index s = 0; s < grad.cols(); ++s) {
    for (int c = 0; c < in_.channels; ++c) {
      dx.col(s).segment(c * hw, hw).setConstant(grad(c, s) / static_cast<double>(hw));
    }
  }
  return dx;
}

std::unique_ptr<Layer> FlattenOp::clone() const {
  return std::make_unique<FlattenOp>(*this);
}

// ---------------------------------------------------------------- activation

std::unique_ptr<Layer> ActivationOp::clone() const {
  return std::make_unique<ActivationOp>(*this);
}

ComplexMatrix ActivationOp::infer(const ComplexMatrix& x) const {
  return act_ == ActivationKind::SplitRelu ? split_relu(x) : mod_relu(x, offset_);
}

ComplexMatrix ActivationOp::forward(const ComplexMatrix& x) {
  x_ = x;
  return infer(x);
}

ComplexMatrix ActivationOp::backward(const ComplexMatrix& grad) {
  ComplexMatrix dx(grad.rows(), grad.cols());
  if (act_ == ActivationKind::SplitRelu) {
    for (Eigen::Index i = 0; i < grad.size(); ++i) {
      const Complex z = x_(i);
      dx(i) = Complex(z.real() > 0 ? grad(i).real() : 0.0,
                      z.imag() > 0 ? grad(i).imag() : 0.0);
    }
    return dx;
  }
  // y = (1 + b/r) z for r = |z| > -b. Writing u = z/r, the Jacobian acting on
  // a packed gradient g is g (1 + b/r) - (b/r) u Re(conj(u) g).
  for (Eigen::Index i = 0; i < grad.size(); ++i) {
    const Complex z = x_(i);
    const double r = std::abs(z);
    if (r + offset_ <= 0.0 || r == 0.0) {
      dx(i) = 0.0;
      continue;
    }
    const Complex u = z / r;
    const Complex g = grad(i);
    dx(i) = g * (1.0 + offset_ / r) - (offset_ / r) * u * std::real(std::conj(u) * g);
  }
  return dx;
}

// ---------------------------------------------------------------- unitary mesh

UnitaryMeshOp::UnitaryMeshOp(std::string label, int width)
    : label_(std::move(label)), width_(width) {
  if (width < 1) throw ConfigError(label_ + ": mesh width must be positive");
  // Same stage order as decompose_unitary: rows n-1..1, pairs 0..r-1.
  for (int r = width - 1; r >= 1; --r) {
    for (int c = 0; c < r; ++c) tops_.push_back(c);
  }
  theta_.assign(tops_.size(), 0.0);
  phi_.assign(tops_.size(), 0.0);
  screen_.assign(static_cast<std::size_t>(width), 0.0);
  dtheta_.assign(tops_.size(), 0.0);
  dphi_.assign(tops_.size(), 0.0);
  dscreen_.assign(static_cast<std::size_t>(width), 0.0);
}

std::unique_ptr<Layer> UnitaryMeshOp::clone() const {
  return std::make_unique<UnitaryMeshOp>(*this);
}

void UnitaryMeshOp::init(Rng& rng) {
  const double two_pi = 2 * std::numbers::pi;
  for (std::size_t i = 0; i < tops_.size(); ++i) {
    theta_[i] = two_pi * rng.uniform();
    phi_[i] = two_pi * rng.uniform();
  }
  for (double& p : screen_) p = two_pi * rng.uniform();
}

MziMesh UnitaryMeshOp::mesh() const {
  MziMesh m;
  m.width = width_;
  for (std::size_t i = 0; i < tops_.size(); ++i) {
    m.stages.push_back({tops_[i], wrap(theta_[i]), wrap(phi_[i])});
  }
  for (double p : screen_) m.phase_screen.push_back(wrap(p));
  return m;
}

ComplexMatrix UnitaryMeshOp::infer(const ComplexMatrix& x) const {
  check_rows(x, width_, label_);
  ComplexMatrix y = x;
  for (std::size_t i = 0; i < tops_.size(); ++i) {
    ComplexMatrix t = mzi_transfer(theta_[i], phi_[i]);
    ComplexMatrix pair = t * y.middleRows(tops_[i], 2);
    y.middleRows(tops_[i], 2) = pair;
  }
  for (int k = 0; k < width_; ++k) {
    y.row(k) *= std::polar(1.0, screen_[static_cast<std::size_t>(k)]);
  }
  return y;
}

ComplexMatrix UnitaryMeshOp::forward(const ComplexMatrix& x) {
  check_rows(x, width_, label_);
  stage_inputs_.resize(tops_.size());
  ComplexMatrix y = x;
  for (std::size_t i = 0; i < tops_.size(); ++i) {
    stage_inputs_[i] = y.middleRows(tops_[i], 2);
    ComplexMatrix t = mzi_transfer(theta_[i], phi_[i]);
    y.middleRows(tops_[i], 2) = t * stage_inputs_[i];
  }
  for (int k = 0; k < width_; ++k) {
    y.row(k) *= std::polar(1.0, screen_[static_cast<std::size_t>(k)]);
  }
  out_ = y;
  return y;
}

ComplexMatrix UnitaryMeshOp::backward(const ComplexMatrix& grad) {
  const Complex i1(0.0, 1.0);
  ComplexMatrix g = grad;
  for (int k = 0; k < width_; ++k) {
    auto kk = static_cast<std::size_t>(k);
    // d y_k / d psi_k = i y_k
    dscreen_[kk] += (g.row(k).conjugate().cwiseProduct(i1 * out_.row(k))).sum().real();
    g.row(k) *= std::polar(1.0, -screen_[kk]);
  }
  for (std::size_t s = tops_.size(); s-- > 0;) {
    const double th = theta_[s], ph = phi_[s];
    const double sn = std::sin(th / 2), cs = std::cos(th / 2);
    const Complex pre = i1 * std::polar(1.0, th / 2);
    const Complex ep = std::polar(1.0, ph);
    ComplexMatrix t(2, 2), dt_th(2, 2), dt_ph(2, 2);
    t << pre * ep * sn, pre * cs, pre * ep * cs, -pre * sn;
    dt_th << pre * ep * cs * 0.5, -pre * sn * 0.5, -pre * ep * sn * 0.5, -pre * cs * 0.5;
    dt_th += 0.5 * i1 * t;
    dt_ph << i1 * pre * ep * sn, 0.0, i1 * pre * ep * cs, 0.0;

    const ComplexMatrix& xin = stage_inputs_[s];
    ComplexMatrix gy = g.middleRows(tops_[s], 2);
    dtheta_[s] += (gy.conjugate().cwiseProduct(dt_th * xin)).sum().real();
    dphi_[s] += (gy.conjugate().cwiseProduct(dt_ph * xin)).sum().real();
    g.middleRows(tops_[s], 2) = t.adjoint() * gy;
  }
  return g;
}

std::vector<ParamView> UnitaryMeshOp::params() {
  return {{label_ + ".theta", theta_, dtheta_},
          {label_ + ".phi", phi_, dphi_},
          {label_ + ".screen", screen_, dscreen_}};
}

}  // namespace oplixnet
