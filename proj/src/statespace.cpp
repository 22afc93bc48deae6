// Copyright 2026 The schmidt-bounds Authors.
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

#include "schmidt/statespace.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace schmidt {

namespace {

std::vector<Index> flip_permutation(Index k) {
  std::vector<Index> perm(static_cast<std::size_t>(k * k));
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j) perm[i * k + j] = j * k + i;
  return perm;
}

void require_order(const Matrix& x, Dims dims, const char* what) {
  if (x.rows() != dims.total() || x.cols() != dims.total()) {
    std::ostringstream msg;
    msg << what << ": expected a " << dims.total() << "x" << dims.total()
        << " matrix for dims (" << dims.left << ", " << dims.right
        << "), got " << x.rows() << "x" << x.cols();
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
}

void require_dims(Dims dims) {
  if (dims.left < 1 || dims.right < 1)
    throw Error(ErrorCode::InvalidArgument,
                "factor dimensions must be positive");
}

}  // namespace

// --- PureVector -------------------------------------------------------------

PureVector::PureVector(Dims dims, Vector entries)
    : dims_(dims), entries_(std::move(entries)) {
  require_dims(dims_);
  if (entries_.size() != dims_.total()) {
    std::ostringstream msg;
    msg << "pure vector of length " << entries_.size()
        << " does not match dims (" << dims_.left << ", " << dims_.right << ")";
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
}

PureVector PureVector::product(const Vector& a, const Vector& b) {
  Vector w(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i)
    w.segment(i * b.size(), b.size()) = a(i) * b;
  return PureVector({a.size(), b.size()}, std::move(w));
}

Matrix PureVector::reshaped() const {
  Matrix w(dims_.left, dims_.right);
  for (Index i = 0; i < dims_.left; ++i)
    for (Index j = 0; j < dims_.right; ++j)
      w(i, j) = entries_(i * dims_.right + j);
  return w;
}

// --- BipartiteState ---------------------------------------------------------

BipartiteState::BipartiteState(Dims dims, Matrix matrix,
                               const ToleranceConfig& cfg)
    : dims_(dims) {
  require_dims(dims);
  require_order(matrix, dims, "BipartiteState");
  matrix_ = hermitize(matrix, cfg);
  const RealVector eig = hermitian_eigenvalues(matrix_, cfg);
  if (eig.size() > 0 && eig(0) < psd_floor(eig, cfg)) {
    std::ostringstream msg;
    msg << "matrix is not positive semidefinite (min eigenvalue " << eig(0)
        << ")";
    throw Error(ErrorCode::NotPositive, msg.str());
  }
}

BipartiteState::BipartiteState(Trusted, Dims dims, Matrix matrix)
    : dims_(dims), matrix_(std::move(matrix)) {
  require_dims(dims);
  require_order(matrix_, dims, "BipartiteState");
  matrix_ = (matrix_ + matrix_.adjoint()).eval() * 0.5;
}

BipartiteState BipartiteState::from_trusted(Dims dims, Matrix matrix) {
  return BipartiteState(Trusted{}, dims, std::move(matrix));
}

BipartiteState BipartiteState::pure(const PureVector& w) {
  return from_trusted(w.dims(), w.entries() * w.entries().adjoint());
}

// --- structural maps --------------------------------------------------------

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix flip_operator(Index k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  Matrix f = Matrix::Zero(k * k, k * k);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j) f(j * k + i, i * k + j) = 1.0;
  return f;
}

Vector apply_flip(const Vector& w, Index k) {
  if (w.size() != k * k)
    throw Error(ErrorCode::InvalidArgument, "apply_flip: length is not k^2");
  const auto perm = flip_permutation(k);
  Vector out(w.size());
  for (Index t = 0; t < w.size(); ++t) out(t) = w(perm[t]);
  return out;
}

BipartiteState symmetrize(const BipartiteState& gamma, Sign sign) {
  const Dims dims = gamma.dims();
  if (!dims.square())
    throw Error(ErrorCode::NonSquareFactors,
                "symmetrize requires equal factor dimensions");
  const auto perm = flip_permutation(dims.left);
  const Matrix& g = gamma.matrix();
  const Matrix fg = g(perm, Eigen::all);
  const Matrix gf = g(Eigen::all, perm);
  const Matrix fgf = fg(Eigen::all, perm);
  const double s = static_cast<double>(static_cast<int>(sign));
  return BipartiteState::from_trusted(dims, g + s * (fg + gf) + fgf);
}

Matrix partial_transpose(const Matrix& x, Dims dims) {
  require_order(x, dims, "partial_transpose");
  const Index k = dims.left, m = dims.right;
  Matrix out(x.rows(), x.cols());
  for (Index i = 0; i < k; ++i)
    for (Index ip = 0; ip < k; ++ip)
      out.block(i * m, ip * m, m, m) = x.block(i * m, ip * m, m, m).transpose();
  return out;
}

Matrix partial_transpose(const BipartiteState& gamma) {
  return partial_transpose(gamma.matrix(), gamma.dims());
}

Matrix marginal(const Matrix& x, Dims dims, Side side) {
  require_order(x, dims, "marginal");
  const Index k = dims.left, m = dims.right;
  if (side == Side::Left) {
    Matrix out(k, k);
    for (Index i = 0; i < k; ++i)
      for (Index ip = 0; ip < k; ++ip)
        out(i, ip) = x.block(i * m, ip * m, m, m).trace();
    return out;
  }
  Matrix out = Matrix::Zero(m, m);
  for (Index i = 0; i < k; ++i) out += x.block(i * m, i * m, m, m);
  return out;
}

Matrix marginal(const BipartiteState& gamma, Side side) {
  return marginal(gamma.matrix(), gamma.dims(), side);
}

// --- spectra and ranks ------------------------------------------------------

double hermitian_defect(const Matrix& h) {
  if (h.size() == 0) return 0.0;
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  return (h - h.adjoint()).cwiseAbs().maxCoeff() / scale;
}

Matrix hermitize(const Matrix& h, const ToleranceConfig& cfg) {
  if (h.rows() != h.cols())
    throw Error(ErrorCode::InvalidArgument, "matrix is not square");
  const double defect = hermitian_defect(h);
  if (defect > cfg.psd_tol) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian (relative defect " << defect << ")";
    throw Error(ErrorCode::NotHermitian, msg.str());
  }
  return (h + h.adjoint()) * 0.5;
}

RealVector hermitian_eigenvalues(const Matrix& h, const ToleranceConfig& cfg) {
  const Matrix herm = hermitize(h, cfg);
  if (herm.size() == 0) return RealVector();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

Index rank_from_spectrum(const RealVector& values, const ToleranceConfig& cfg) {
  if (values.size() == 0) return 0;
  const double top = values.cwiseAbs().maxCoeff();
  if (top <= cfg.rel_rank_tol) return 0;
  const double cut = cfg.rel_rank_tol * top;
  return (values.cwiseAbs().array() > cut).count();
}

Index numerical_rank(const Matrix& h, const ToleranceConfig& cfg) {
  return rank_from_spectrum(hermitian_eigenvalues(h, cfg), cfg);
}

double psd_floor(const RealVector& ascending, const ToleranceConfig& cfg) {
  if (ascending.size() == 0) return 0.0;
  const double top = ascending(ascending.size() - 1);
  const double magnitude = ascending.cwiseAbs().maxCoeff();
  const double scale = (magnitude <= cfg.psd_tol || top <= 0.0) ? 1.0 : top;
  return -cfg.psd_tol * scale;
}

SchmidtDecomposition schmidt_decompose(const PureVector& w,
                                       const ToleranceConfig& cfg) {
  SchmidtDecomposition out;
  const Matrix coeffs = w.reshaped();
  Eigen::JacobiSVD<Matrix> svd(coeffs, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector& s = svd.singularValues();
  if (s.size() == 0 || s(0) <= cfg.rel_rank_tol) return out;
  const double cut = cfg.rel_rank_tol * s(0);
  for (Index l = 0; l < s.size(); ++l) {
    out.coefficients.push_back(s(l));
    out.left_vectors.push_back(svd.matrixU().col(l));
    // W = U S V^dagger, so W(i, j) = sum_l s_l U(i, l) conj(V(j, l)).
    out.right_vectors.push_back(svd.matrixV().col(l).conjugate());
    if (s(l) > cut) ++out.numerical_rank;
  }
  return out;
}

Index schmidt_rank(const PureVector& w, const ToleranceConfig& cfg) {
  return schmidt_decompose(w, cfg).numerical_rank;
}

// --- validation -------------------------------------------------------------

StateValidation check_state(const Matrix& x, Dims dims,
                            const ToleranceConfig& cfg) {
  StateValidation v;
  if (dims.left < 1 || dims.right < 1 || x.rows() != dims.total() ||
      x.cols() != dims.total()) {
    v.square = false;
    v.hermitian = false;
    v.psd = false;
    std::ostringstream msg;
    msg << "matrix of shape " << x.rows() << "x" << x.cols()
        << " does not match dims (" << dims.left << ", " << dims.right << ")";
    v.message = msg.str();
    return v;
  }
  v.hermitian_defect = hermitian_defect(x);
  v.hermitian = v.hermitian_defect <= cfg.psd_tol;
  const Matrix herm = (x + x.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
  const RealVector& eig = solver.eigenvalues();
  v.min_eigenvalue = eig(0);
  v.max_eigenvalue = eig(eig.size() - 1);
  v.psd = v.min_eigenvalue >= psd_floor(eig, cfg);
  std::ostringstream msg;
  if (!v.hermitian)
    msg << "not Hermitian (relative defect " << v.hermitian_defect << ")";
  else if (!v.psd)
    msg << "not positive semidefinite (min eigenvalue " << v.min_eigenvalue
        << ")";
  else
    msg << "ok";
  v.message = msg.str();
  return v;
}

StateValidation check_state(const BipartiteState& gamma,
                            const ToleranceConfig& cfg) {
  return check_state(gamma.matrix(), gamma.dims(), cfg);
}

}  // namespace schmidt
