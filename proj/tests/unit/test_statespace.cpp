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

#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "schmidt/constructions.hpp"
#include "schmidt/statespace.hpp"

using namespace schmidt;

namespace {

const ToleranceConfig kTol{};

BipartiteState random_state(Index k, Index m, std::mt19937_64& rng) {
  return BipartiteState({k, m}, oracle::random_psd(k * m, rng));
}

}  // namespace

TEST_SUITE("kron") {
  TEST_CASE("unit matrices and identities") {
    const Matrix e11 = oracle::unit_matrix(2, 0, 0);
    CHECK(kron(e11, e11) == oracle::unit_matrix(4, 0, 0));
    CHECK(kron(Matrix::Identity(2, 2), Matrix::Identity(2, 2)) ==
          Matrix(Matrix::Identity(4, 4)));
  }

  TEST_CASE("matches the entry formula on rectangular factors") {
    std::mt19937_64 rng(3);
    const Matrix a = oracle::random_complex(2, 3, rng);
    const Matrix b = oracle::random_complex(4, 2, rng);
    CHECK(kron(a, b) == oracle::kron(a, b));
  }

  TEST_CASE("left marginal of a product is A tr(B)") {
    std::mt19937_64 rng(11);
    const Matrix a = oracle::random_psd(3, rng);
    const Matrix b = oracle::random_psd(3, rng);
    const BipartiteState g({3, 3}, kron(a, b));
    CHECK(oracle::rel_diff(marginal(g, Side::Left), a * b.trace()) < 1e-12);
    CHECK(oracle::rel_diff(marginal(g, Side::Right), b * a.trace()) < 1e-12);
  }
}

TEST_SUITE("flip") {
  TEST_CASE("swaps e1 (x) e2") {
    const Matrix f = flip_operator(2);
    const Vector e12 = oracle::kron(oracle::basis(2, 0), oracle::basis(2, 1));
    const Vector e21 = oracle::kron(oracle::basis(2, 1), oracle::basis(2, 0));
    CHECK(f * e12 == e21);
  }

  TEST_CASE("involution and agreement with the definition") {
    for (Index k = 1; k <= 5; ++k) {
      const Matrix f = flip_operator(k);
      CHECK(f == oracle::flip(k));
      CHECK(f * f == Matrix(Matrix::Identity(k * k, k * k)));
      CHECK(f == f.adjoint());
    }
  }

  TEST_CASE("F (a (x) b) = b (x) a on random vectors") {
    std::mt19937_64 rng(5);
    for (Index k = 2; k <= 5; ++k) {
      const Matrix f = flip_operator(k);
      for (int t = 0; t < 100; ++t) {
        const Vector a = oracle::random_vector(k, rng);
        const Vector b = oracle::random_vector(k, rng);
        const Vector ab = oracle::kron(a, b), ba = oracle::kron(b, a);
        CHECK((f * ab - ba).norm() <= 1e-13 * ba.norm());
        CHECK((apply_flip(ab, k) - ba).norm() == 0.0);
      }
    }
  }

  TEST_CASE("Id + F and Id - F have the symmetric and antisymmetric dimensions") {
    for (Index k = 2; k <= 5; ++k) {
      const Matrix id = Matrix::Identity(k * k, k * k);
      const Matrix f = flip_operator(k);
      CHECK(numerical_rank(id + f, kTol) == oracle::flip_subspace_dimension(k, +1));
      CHECK(numerical_rank(id - f, kTol) == oracle::flip_subspace_dimension(k, -1));
    }
    const Matrix id3 = Matrix::Identity(9, 9);
    CHECK(numerical_rank(id3 + flip_operator(3), kTol) == 6);
    const Matrix id4 = Matrix::Identity(16, 16);
    CHECK(numerical_rank(id4 + flip_operator(4), kTol) == 10);
    CHECK(numerical_rank(id4 - flip_operator(4), kTol) == 6);
  }

  TEST_CASE("rejects k < 1") { CHECK_THROWS_AS(flip_operator(0), Error); }
}

TEST_SUITE("symmetrize") {
  TEST_CASE("symmetric inputs are annihilated by the antisymmetrizer") {
    const Vector e11 = oracle::kron(oracle::basis(2, 0), oracle::basis(2, 0));
    const auto g = BipartiteState::pure(PureVector({2, 2}, e11));
    CHECK(symmetrize(g, Sign::Minus).matrix().isZero(0.0));

    const Matrix id_f = Matrix::Identity(9, 9) + flip_operator(3);
    CHECK(symmetrize(BipartiteState({3, 3}, id_f), Sign::Minus).matrix().isZero(0.0));
  }

  TEST_CASE("agrees with (Id + sF) g (Id + sF)") {
    std::mt19937_64 rng(8);
    for (Index k = 2; k <= 4; ++k) {
      const BipartiteState g = random_state(k, k, rng);
      const Matrix id = Matrix::Identity(k * k, k * k), f = oracle::flip(k);
      for (int s : {1, -1}) {
        const Matrix p = id + double(s) * f;
        const Matrix expected = p * g.matrix() * p;
        const auto got = symmetrize(g, s == 1 ? Sign::Plus : Sign::Minus);
        CHECK(oracle::rel_diff(got.matrix(), expected) < 1e-12);
        CHECK(check_state(got, kTol).valid());
      }
    }
  }

  TEST_CASE("g_S + g_A = 2 (g + F g F)") {
    std::mt19937_64 rng(9);
    for (Index k = 2; k <= 5; ++k)
      for (int t = 0; t < 10; ++t) {
        const BipartiteState g = random_state(k, k, rng);
        const Matrix f = oracle::flip(k);
        const Matrix lhs = symmetrize(g, Sign::Plus).matrix() +
                           symmetrize(g, Sign::Minus).matrix();
        const Matrix rhs = 2.0 * (g.matrix() + f * g.matrix() * f);
        CHECK(oracle::rel_diff(lhs, rhs) <= 1e-12);
      }
  }

  TEST_CASE("requires square factors") {
    std::mt19937_64 rng(1);
    const BipartiteState g = random_state(2, 3, rng);
    try {
      (void)symmetrize(g, Sign::Plus);
      FAIL("expected NonSquareFactors");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NonSquareFactors);
    }
  }
}

TEST_SUITE("partial transpose") {
  TEST_CASE("(A (x) B)^T_B = A (x) B^T") {
    std::mt19937_64 rng(21);
    const Matrix a = oracle::random_hermitian(2, rng);
    const Matrix b = oracle::random_hermitian(3, rng);
    CHECK(oracle::rel_diff(partial_transpose(kron(a, b), {2, 3}),
                           kron(a, Matrix(b.transpose()))) < 1e-14);
  }

  TEST_CASE("maximally entangled k = 2 maps to the flip with spectrum {-1, 1, 1, 1}") {
    Vector u = Vector::Zero(4);
    u(0) = u(3) = 1.0;
    const Matrix pt = partial_transpose(BipartiteState::pure(PureVector({2, 2}, u)));
    CHECK(pt == flip_operator(2));
    const Eigen::VectorXd eig = oracle::generic_eigenvalues(pt);
    CHECK(eig(0) == doctest::Approx(-1.0));
    for (int i = 1; i < 4; ++i) CHECK(eig(i) == doctest::Approx(1.0));
  }

  TEST_CASE("(Id + F)^T_B = Id + u u^T") {
    for (Index k = 2; k <= 6; ++k) {
      Vector u = Vector::Zero(k * k);
      for (Index i = 0; i < k; ++i) u(i * k + i) = 1.0;
      const Matrix id = Matrix::Identity(k * k, k * k);
      CHECK(partial_transpose(id + flip_operator(k), {k, k}) ==
            Matrix(id + u * u.transpose()));
    }
  }

  TEST_CASE("agrees with the sandwich formula, is an involution, keeps the trace") {
    std::mt19937_64 rng(22);
    for (Index k = 1; k <= 3; ++k)
      for (Index m = 1; m <= 4; ++m) {
        const Matrix x = oracle::random_complex(k * m, k * m, rng);
        const Matrix pt = partial_transpose(x, {k, m});
        CHECK(oracle::rel_diff(pt, oracle::partial_transpose(x, k, m)) < 1e-14);
        CHECK(partial_transpose(pt, {k, m}) == x);
        CHECK(std::abs(pt.trace() - x.trace()) <= 1e-12 * std::abs(x.trace()));
      }
  }

  TEST_CASE("rejects shape mismatch") {
    CHECK_THROWS_AS(partial_transpose(Matrix::Identity(5, 5), {2, 2}), Error);
  }
}

TEST_SUITE("marginal") {
  TEST_CASE("product state") {
    std::mt19937_64 rng(31);
    const Vector a = oracle::random_vector(3, rng), b = oracle::random_vector(2, rng);
    const auto g = BipartiteState::pure(PureVector::product(a, b));
    const Matrix expected = b.squaredNorm() * (a * a.adjoint());
    CHECK(oracle::rel_diff(marginal(g, Side::Left), expected) < 1e-13);
  }

  TEST_CASE("identity") {
    const BipartiteState g({3, 3}, Matrix::Identity(9, 9));
    CHECK(marginal(g, Side::Left) == Matrix(3.0 * Matrix::Identity(3, 3)));
    CHECK(marginal(g, Side::Right) == Matrix(3.0 * Matrix::Identity(3, 3)));
  }

  TEST_CASE("agrees with partial-trace sandwiches and preserves the trace") {
    std::mt19937_64 rng(32);
    for (Index k = 1; k <= 4; ++k)
      for (Index m = 1; m <= 4; ++m) {
        const BipartiteState g = random_state(k, m, rng);
        const Matrix left = marginal(g, Side::Left);
        const Matrix right = marginal(g, Side::Right);
        CHECK(oracle::rel_diff(left, oracle::trace_right(g.matrix(), k, m)) < 1e-13);
        CHECK(oracle::rel_diff(right, oracle::trace_left(g.matrix(), k, m)) < 1e-13);
        const double tr = g.matrix().trace().real();
        CHECK(std::abs(left.trace().real() - tr) <= 1e-10 * tr);
        CHECK(std::abs(right.trace().real() - tr) <= 1e-10 * tr);
        CHECK(hermitian_eigenvalues(left, kTol)(0) >= -1e-10 * tr);
      }
  }
}

TEST_SUITE("numerical rank") {
  TEST_CASE("relative threshold and absolute floor") {
    Matrix d = Matrix::Zero(3, 3);
    d(0, 0) = 1.0;
    d(1, 1) = 1e-13;
    CHECK(numerical_rank(d, kTol) == 1);
    CHECK(numerical_rank(Matrix::Zero(4, 4), kTol) == 0);
    CHECK(numerical_rank(Matrix(1e-11 * Matrix::Identity(3, 3)), kTol) == 0);
    CHECK(numerical_rank(Matrix(1e6 * Matrix::Identity(3, 3)), kTol) == 3);
  }

  TEST_CASE("counts negative eigenvalues by magnitude") {
    Matrix d = Matrix::Zero(3, 3);
    d(0, 0) = 2.0;
    d(1, 1) = -1.0;
    CHECK(numerical_rank(d, kTol) == 2);
  }

  TEST_CASE("rejects non-Hermitian input") {
    Matrix x = Matrix::Zero(2, 2);
    x(0, 1) = 1.0;
    try {
      (void)numerical_rank(x, kTol);
      FAIL("expected NotHermitian");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotHermitian);
    }
  }
}

TEST_SUITE("schmidt decomposition") {
  TEST_CASE("canonical maximally entangled form") {
    Vector u = Vector::Zero(4);
    u(0) = u(3) = 1.0;
    const auto d = schmidt_decompose(PureVector({2, 2}, u), kTol);
    REQUIRE(d.coefficients.size() == 2);
    CHECK(d.coefficients[0] == doctest::Approx(1.0));
    CHECK(d.coefficients[1] == doctest::Approx(1.0));
    CHECK(d.numerical_rank == 2);
  }

  TEST_CASE("product, diagonal, symmetrized product and zero vectors") {
    std::mt19937_64 rng(41);
    const Vector a = oracle::random_vector(3, rng), b = oracle::random_vector(3, rng);
    CHECK(schmidt_rank(PureVector::product(a, b), kTol) == 1);

    Vector u = Vector::Zero(9);
    for (Index i = 0; i < 3; ++i) u(i * 3 + i) = 1.0;
    CHECK(schmidt_rank(PureVector({3, 3}, u), kTol) == 3);

    const Vector ab = oracle::kron(a, b), ba = oracle::kron(b, a);
    CHECK(schmidt_rank(PureVector({3, 3}, ab + ba), kTol) == 2);

    const auto zero = schmidt_decompose(PureVector({3, 2}, Vector::Zero(6)), kTol);
    CHECK(zero.numerical_rank == 0);
    CHECK(zero.coefficients.empty());
  }

  TEST_CASE("antisymmetric vector built from four independent vectors has rank 4") {
    const Index k = 5;
    Vector a = Vector::Zero(k * k);
    for (Index i = 0; i < 2; ++i) {
      const Vector ai = oracle::basis(k, i), bi = oracle::basis(k, 2 + i);
      a += oracle::kron(ai, bi) - oracle::kron(bi, ai);
    }
    CHECK(schmidt_rank(PureVector({k, k}, a), kTol) == 4);
  }

  TEST_CASE("reconstruction, ordering and agreement with marginal ranks") {
    std::mt19937_64 rng(42);
    for (Index k = 1; k <= 5; ++k)
      for (Index m = 1; m <= 5; ++m)
        for (int t = 0; t < 8; ++t) {
          const Index sr = 1 + Index(rng() % std::uint64_t(std::min(k, m)));
          const PureVector w = random_pure(k, m, sr, rng());
          const auto d = schmidt_decompose(w, kTol);
          Vector recon = Vector::Zero(k * m);
          for (std::size_t l = 0; l < d.coefficients.size(); ++l)
            recon += d.coefficients[l] *
                     oracle::kron(d.left_vectors[l], d.right_vectors[l]);
          CHECK((recon - w.entries()).norm() <= kTol.recon_tol * w.entries().norm());
          CHECK(std::is_sorted(d.coefficients.rbegin(), d.coefficients.rend()));
          CHECK(d.numerical_rank == sr);

          const auto g = BipartiteState::pure(w);
          CHECK(numerical_rank(marginal(g, Side::Left), kTol) == d.numerical_rank);
          CHECK(numerical_rank(marginal(g, Side::Right), kTol) == d.numerical_rank);
        }
  }

  TEST_CASE("SR((Id +- F) w) <= 2 SR(w)") {
    std::mt19937_64 rng(43);
    for (Index k = 2; k <= 6; ++k)
      for (int t = 0; t < 200; ++t) {
        const Index sr = 1 + Index(rng() % std::uint64_t(k));
        const PureVector w = random_pure(k, k, sr, rng());
        const Vector fw = apply_flip(w.entries(), k);
        const Index base = schmidt_rank(w, kTol);
        CHECK(schmidt_rank(PureVector({k, k}, w.entries() + fw), kTol) <= 2 * base);
        CHECK(schmidt_rank(PureVector({k, k}, w.entries() - fw), kTol) <= 2 * base);
      }
  }
}

TEST_SUITE("state validation") {
  TEST_CASE("identity is a valid 2 x 2 state") {
    const auto v = check_state(Matrix::Identity(4, 4), {2, 2}, kTol);
    CHECK(v.valid());
    CHECK(v.min_eigenvalue == doctest::Approx(1.0));
  }

  TEST_CASE("negative diagonal entry is reported") {
    Matrix d = Matrix::Identity(4, 4);
    d(1, 1) = -1.0;
    const auto v = check_state(d, {2, 2}, kTol);
    CHECK_FALSE(v.valid());
    CHECK(v.hermitian);
    CHECK_FALSE(v.psd);
    CHECK(v.min_eigenvalue == doctest::Approx(-1.0));
  }

  TEST_CASE("partial transpose of the maximally entangled state is not a state") {
    Vector u = Vector::Zero(4);
    u(0) = u(3) = 1.0;
    const Matrix pt = oracle::partial_transpose(u * u.adjoint(), 2, 2);
    const auto v = check_state(pt, {2, 2}, kTol);
    CHECK_FALSE(v.psd);
    CHECK(v.min_eigenvalue == doctest::Approx(oracle::generic_eigenvalues(pt)(0)));
  }

  TEST_CASE("shape and Hermiticity failures never throw") {
    CHECK_FALSE(check_state(Matrix::Identity(3, 3), {2, 2}, kTol).valid());
    Matrix x = Matrix::Identity(4, 4);
    x(0, 1) = 0.5;
    const auto v = check_state(x, {2, 2}, kTol);
    CHECK_FALSE(v.hermitian);
    CHECK(v.hermitian_defect == doctest::Approx(0.5));
  }

  TEST_CASE("constructor hermitizes small defects and rejects large ones") {
    Matrix x = Matrix::Identity(4, 4);
    x(0, 1) = 1e-13;
    const BipartiteState g({2, 2}, x);
    CHECK(g.matrix() == g.matrix().adjoint());

    x(0, 1) = 1e-3;
    CHECK_THROWS_AS(BipartiteState({2, 2}, x), Error);
    Matrix neg = -Matrix::Identity(4, 4);
    try {
      BipartiteState bad({2, 2}, neg);
      FAIL("expected NotPositive");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotPositive);
    }
  }

  TEST_CASE("zero matrix is a legal state of rank 0") {
    const BipartiteState g({2, 3}, Matrix::Zero(6, 6));
    CHECK(numerical_rank(g.matrix(), kTol) == 0);
    CHECK(check_state(g, kTol).valid());
  }

  TEST_CASE("tolerances must lie in (0, 1)") {
    CHECK_NOTHROW(ToleranceConfig{}.validate());
    CHECK_THROWS_AS((ToleranceConfig{0.0, 1e-10, 1e-10}.validate()), Error);
    CHECK_THROWS_AS((ToleranceConfig{1e-10, 1.0, 1e-10}.validate()), Error);
    CHECK_THROWS_AS(ToleranceConfig::uniform(-1.0), Error);
  }
}
