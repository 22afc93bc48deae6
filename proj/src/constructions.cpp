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

#include "schmidt/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace schmidt {

namespace {

using Rng = std::mt19937_64;

Vector basis_vector(Index k, Index i) {
  Vector e = Vector::Zero(k);
  e(i) = 1.0;
  return e;
}

Matrix gaussian_matrix(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(rows, cols);
  for (Index c = 0; c < cols; ++c)
    for (Index r = 0; r < rows; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = Complex(re, im);
    }
  return g;
}

/// Value in (0.1, 1].
double bounded_weight(Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return 1.0 - 0.9 * unit(rng);
}

Matrix orthonormal_columns(Index rows, Index cols, Rng& rng) {
  const Matrix g = gaussian_matrix(rows, cols, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  return qr.householderQ() * Matrix::Identity(rows, cols);
}

Vector unit_gaussian(Index n, Rng& rng) {
  Vector x = gaussian_matrix(n, 1, rng).col(0);
  return x / x.norm();
}

}  // namespace

// --- family ---------------------------------------------------------------

void FamilyParams::validate(const ToleranceConfig& cfg) const {
  std::ostringstream msg;
  if (n < 1 || 2 * n > k) {
    msg << "family requires 1 <= n <= floor(k/2), got k=" << k << ", n=" << n;
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
  if (static_cast<Index>(a_vectors.size()) != n ||
      static_cast<Index>(b_vectors.size()) != n) {
    msg << "family requires n=" << n << " vectors a_i and b_i";
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    msg << "epsilon must be positive and finite, got " << epsilon;
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
  Matrix stacked(k, 2 * n);
  for (Index i = 0; i < n; ++i) {
    if (a_vectors[i].size() != k || b_vectors[i].size() != k)
      throw Error(ErrorCode::InvalidArgument,
                  "family vectors must have dimension k");
    stacked.col(i) = a_vectors[i];
    stacked.col(n + i) = b_vectors[i];
  }
  const RealVector s = Eigen::JacobiSVD<Matrix>(stacked).singularValues();
  if (!(s(s.size() - 1) > cfg.rel_rank_tol * s(0))) {
    msg << "vectors a_1..a_n, b_1..b_n are linearly dependent (singular values "
        << s(0) << " .. " << s(s.size() - 1) << ")";
    throw Error(ErrorCode::DependentVectors, msg.str());
  }
}

FamilyParams FamilyParams::canonical(Index k, Index n, double epsilon) {
  FamilyParams p;
  p.k = k;
  p.n = n;
  p.epsilon = epsilon;
  if (n >= 1 && 2 * n <= k)
    for (Index i = 0; i < n; ++i) {
      p.a_vectors.push_back(basis_vector(k, i));
      p.b_vectors.push_back(basis_vector(k, n + i));
    }
  return p;
}

FamilyParams FamilyParams::random(Index k, Index n, std::uint64_t seed,
                                  double epsilon) {
  FamilyParams p;
  p.k = k;
  p.n = n;
  p.epsilon = epsilon;
  Rng rng(seed);
  if (n >= 1 && 2 * n <= k)
    for (Index i = 0; i < n; ++i) {
      p.a_vectors.push_back(gaussian_matrix(k, 1, rng).col(0));
      p.b_vectors.push_back(gaussian_matrix(k, 1, rng).col(0));
    }
  return p;
}

PureVector family_vector(const FamilyParams& p, const ToleranceConfig& cfg) {
  p.validate(cfg);
  Vector v = Vector::Zero(p.k * p.k);
  for (Index i = 0; i < p.n; ++i)
    v += PureVector::product(p.a_vectors[i], p.b_vectors[i]).entries();
  return PureVector({p.k, p.k}, std::move(v));
}

BipartiteState family_state(const FamilyParams& p, const ToleranceConfig& cfg) {
  const PureVector v = family_vector(p, cfg);
  const Index d = p.k * p.k;
  Matrix g = Matrix::Identity(d, d) + flip_operator(p.k);
  g += p.epsilon * (v.entries() * v.entries().adjoint());
  return BipartiteState::from_trusted({p.k, p.k}, std::move(g));
}

PureVector antisym_vector(const FamilyParams& p, const ToleranceConfig& cfg) {
  const PureVector v = family_vector(p, cfg);
  return PureVector({p.k, p.k},
                    v.entries() - apply_flip(v.entries(), p.k));
}

double auto_epsilon(const PureVector& v, const ToleranceConfig& cfg) {
  const Dims dims = v.dims();
  if (!dims.square())
    throw Error(ErrorCode::NonSquareFactors,
                "auto_epsilon requires equal factor dimensions");
  if (v.entries().cwiseAbs().maxCoeff() == 0.0)
    throw Error(ErrorCode::ZeroVector, "auto_epsilon: v is the zero vector");

  const Index d = dims.total();
  const Matrix pure_pt =
      partial_transpose(v.entries() * v.entries().adjoint(), dims);
  const RealVector eig = hermitian_eigenvalues(pure_pt, cfg);
  const double lambda_min = eig(0);
  // lambda_min((Id + F)^T_B) = lambda_min(Id + u u^T) = 1.
  double epsilon = lambda_min >= psd_floor(eig, cfg)
                       ? 1.0
                       : 1.0 / (2.0 * std::abs(lambda_min));

  const Matrix base =
      partial_transpose(Matrix::Identity(d, d) + flip_operator(dims.left), dims);
  for (int attempt = 0; attempt <= 60; ++attempt) {
    const RealVector check = hermitian_eigenvalues(base + epsilon * pure_pt, cfg);
    if (check(0) >= -cfg.psd_tol) return epsilon;
    epsilon *= 0.5;
  }
  throw Error(ErrorCode::EpsilonSearchFailed,
              "no epsilon passed positivity verification after 60 halvings");
}

// --- separable decomposition of Id + F -------------------------------------

Matrix ProductDecomposition::reconstruct() const {
  const Index d = dims.total();
  Matrix acc = Matrix::Zero(d, d);
  constexpr std::size_t kChunk = 2048;
  for (std::size_t start = 0; start < terms.size(); start += kChunk) {
    const std::size_t stop = std::min(terms.size(), start + kChunk);
    Matrix cols(d, static_cast<Index>(stop - start));
    for (std::size_t t = start; t < stop; ++t) {
      const ProductTerm& term = terms[t];
      cols.col(static_cast<Index>(t - start)) =
          std::sqrt(term.weight) *
          PureVector::product(term.left, term.right).entries();
    }
    acc.noalias() += cols * cols.adjoint();
  }
  return acc;
}

ProductDecomposition sym_separable_decomposition(Index k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  if (k > kMaxPhaseEnumerationDim) {
    std::ostringstream msg;
    msg << "phase enumeration is capped at k <= " << kMaxPhaseEnumerationDim
        << ", got k=" << k;
    throw Error(ErrorCode::DimensionTooLarge, msg.str());
  }
  ProductDecomposition out;
  out.dims = {k, k};
  out.target_label = "Id+F";
  if (k == 1) {
    out.terms.push_back({2.0, basis_vector(1, 0), basis_vector(1, 0)});
    return out;
  }

  static const Complex kPhases[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0},
                                     {0.0, -1.0}};
  const std::size_t count = std::size_t{1} << (2 * k);
  const double weight = std::ldexp(1.0, -2 * static_cast<int>(k));
  out.terms.reserve(count + static_cast<std::size_t>(k));
  for (std::size_t code = 0; code < count; ++code) {
    Vector phase(k);
    std::size_t digits = code;
    for (Index j = 0; j < k; ++j, digits >>= 2) phase(j) = kPhases[digits & 3];
    out.terms.push_back({weight, phase, phase});
  }
  // The phase average equals Id + F minus the diagonal projectors.
  for (Index j = 0; j < k; ++j)
    out.terms.push_back({1.0, basis_vector(k, j), basis_vector(k, j)});
  return out;
}

double relative_error(const Matrix& approx, const Matrix& target) {
  const double scale =
      std::max(target.norm(), std::numeric_limits<double>::min());
  return (approx - target).norm() / scale;
}

SchmidtNumberWitness sn_upper_certificate(const FamilyParams& p,
                                          const ToleranceConfig& cfg) {
  const PureVector v = family_vector(p, cfg);
  const ProductDecomposition sym = sym_separable_decomposition(p.k);
  const BipartiteState target = family_state(p, cfg);

  Matrix recon = sym.reconstruct();
  recon += p.epsilon * (v.entries() * v.entries().adjoint());

  SchmidtNumberWitness out;
  out.product_terms = sym.terms.size();
  out.entangled_terms.push_back({p.epsilon, v});
  out.value = std::max<Index>(1, schmidt_rank(v, cfg));
  out.reconstruction_error = relative_error(recon, target.matrix());
  if (!(out.reconstruction_error <= cfg.recon_tol)) {
    std::ostringstream msg;
    msg << "upper-certificate decomposition misses the state (relative error "
        << out.reconstruction_error << ")";
    throw Error(ErrorCode::ReconstructionFailed, msg.str());
  }
  return out;
}

// --- random ensembles -----------------------------------------------------

PureVector random_pure(Index k, Index m, Index target_sr, std::uint64_t seed) {
  if (k < 1 || m < 1 || target_sr < 1 || target_sr > std::min(k, m)) {
    std::ostringstream msg;
    msg << "target Schmidt rank " << target_sr << " outside [1, min(" << k
        << ", " << m << ")]";
    throw Error(ErrorCode::BadRank, msg.str());
  }
  Rng rng(seed);
  const Matrix x = orthonormal_columns(k, target_sr, rng);
  const Matrix y = orthonormal_columns(m, target_sr, rng);
  Vector w = Vector::Zero(k * m);
  for (Index i = 0; i < target_sr; ++i) {
    const double s = bounded_weight(rng);
    w += s * PureVector::product(x.col(i), y.col(i)).entries();
  }
  return PureVector({k, m}, std::move(w));
}

BipartiteState random_separable(Index k, Index m, Index num_terms,
                                std::uint64_t seed) {
  if (k < 1 || m < 1 || num_terms < 1)
    throw Error(ErrorCode::InvalidArgument,
                "random_separable requires positive dimensions and terms");
  Rng rng(seed);
  Matrix g = Matrix::Zero(k * m, k * m);
  for (Index t = 0; t < num_terms; ++t) {
    const Vector a = unit_gaussian(k, rng);
    const Vector b = unit_gaussian(m, rng);
    const double s = bounded_weight(rng);
    const Vector w = PureVector::product(a, b).entries();
    g.noalias() += s * (w * w.adjoint());
  }
  return BipartiteState::from_trusted({k, m}, std::move(g));
}

BipartiteState random_density(Index k, Index m, Index rank,
                              std::uint64_t seed) {
  if (k < 1 || m < 1 || rank < 1 || rank > k * m) {
    std::ostringstream msg;
    msg << "rank " << rank << " outside [1, " << k * m << "]";
    throw Error(ErrorCode::BadRank, msg.str());
  }
  Rng rng(seed);
  const Matrix factor = gaussian_matrix(k * m, rank, rng);
  return BipartiteState::from_trusted({k, m}, factor * factor.adjoint());
}

std::uint64_t splitmix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) noexcept {
  return splitmix64(master + (trial + 1) * 0x9E3779B97F4A7C15ULL);
}

}  // namespace schmidt
