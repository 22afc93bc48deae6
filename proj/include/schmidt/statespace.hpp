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

#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "schmidt/error.hpp"
#include "schmidt/tolerance.hpp"

namespace schmidt {

using Complex = std::complex<double>;
using Index = Eigen::Index;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Local dimensions (k, m) of C^k (x) C^m. Product basis vector e_i (x) e_j
/// (0-based) sits at index i*m + j.
struct Dims {
  Index left = 1;
  Index right = 1;

  Index total() const noexcept { return left * right; }
  bool square() const noexcept { return left == right; }
  friend bool operator==(const Dims&, const Dims&) = default;
};

enum class Side { Left, Right };
enum class Sign : int { Plus = 1, Minus = -1 };

/// Element of C^k (x) C^m.
class PureVector {
 public:
  PureVector(Dims dims, Vector entries);

  /// a (x) b
  static PureVector product(const Vector& a, const Vector& b);

  Dims dims() const noexcept { return dims_; }
  const Vector& entries() const noexcept { return entries_; }

  /// k x m coefficient matrix W with W(i, j) = entries[i*m + j].
  Matrix reshaped() const;

 private:
  Dims dims_;
  Vector entries_;
};

/// A non-normalized bipartite state: Hermitian positive semidefinite matrix
/// of order k*m with its factor dimensions. Immutable once built.
class BipartiteState {
 public:
  /// Validates squareness, Hermiticity and positivity against `cfg`; the
  /// stored matrix is the exact Hermitian part (M + M^dagger) / 2.
  BipartiteState(Dims dims, Matrix matrix, const ToleranceConfig& cfg = {});

  /// Skips the eigenvalue positivity check. For matrices that are PSD by
  /// construction (sums and congruences of PSD terms).
  static BipartiteState from_trusted(Dims dims, Matrix matrix);

  /// w w^dagger
  static BipartiteState pure(const PureVector& w);

  Dims dims() const noexcept { return dims_; }
  const Matrix& matrix() const noexcept { return matrix_; }

 private:
  struct Trusted {};
  BipartiteState(Trusted, Dims dims, Matrix matrix);

  Dims dims_;
  Matrix matrix_;
};

struct SchmidtDecomposition {
  std::vector<double> coefficients;  // nonincreasing
  std::vector<Vector> left_vectors;
  std::vector<Vector> right_vectors;
  Index numerical_rank = 0;
};

struct StateValidation {
  bool square = true;
  bool hermitian = true;
  bool psd = true;
  double hermitian_defect = 0.0;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  std::string message;

  bool valid() const noexcept { return square && hermitian && psd; }
};

Matrix kron(const Matrix& a, const Matrix& b);

/// F = sum_ij E_ij (x) E_ji on C^k (x) C^k.
Matrix flip_operator(Index k);

/// F w without forming F.
Vector apply_flip(const Vector& w, Index k);

/// (Id + s F) gamma (Id + s F). Throws NonSquareFactors when k != m.
BipartiteState symmetrize(const BipartiteState& gamma, Sign sign);

/// Transpose on the right factor: ((i,j),(i',j')) -> ((i,j'),(i',j)).
/// Works on any matrix of order k*m; an involution by construction.
Matrix partial_transpose(const Matrix& x, Dims dims);
Matrix partial_transpose(const BipartiteState& gamma);

/// Partial trace over the opposite factor: Side::Left keeps C^k.
Matrix marginal(const Matrix& x, Dims dims, Side side);
Matrix marginal(const BipartiteState& gamma, Side side);

/// max |M - M^dagger| relative to max(1, max |M|).
double hermitian_defect(const Matrix& h);

/// Returns (h + h^dagger)/2, or throws NotHermitian when the defect exceeds
/// cfg.psd_tol.
Matrix hermitize(const Matrix& h, const ToleranceConfig& cfg);

/// Ascending eigenvalues of a Hermitian matrix (checked, then hermitized).
RealVector hermitian_eigenvalues(const Matrix& h, const ToleranceConfig& cfg);

/// Counts |value| > rel_rank_tol * max|value|; zero when max|value| is at or
/// below the absolute floor rel_rank_tol.
Index rank_from_spectrum(const RealVector& values, const ToleranceConfig& cfg);

Index numerical_rank(const Matrix& h, const ToleranceConfig& cfg);

/// Lowest admissible eigenvalue for a PSD verdict on `ascending`:
/// -psd_tol * lambda_max, with lambda_max replaced by 1 when the spectrum is
/// numerically zero or has no positive part.
double psd_floor(const RealVector& ascending, const ToleranceConfig& cfg);

SchmidtDecomposition schmidt_decompose(const PureVector& w,
                                       const ToleranceConfig& cfg);
Index schmidt_rank(const PureVector& w, const ToleranceConfig& cfg);

/// Never throws on bad content; reports what failed.
StateValidation check_state(const Matrix& x, Dims dims,
                            const ToleranceConfig& cfg);
StateValidation check_state(const BipartiteState& gamma,
                            const ToleranceConfig& cfg);

}  // namespace schmidt
