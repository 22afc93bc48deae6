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
#include "schmidt/bounds.hpp"
#include "schmidt/constructions.hpp"

using namespace schmidt;

namespace {

const ToleranceConfig kTol{};

FamilyParams with_auto_epsilon(FamilyParams p) {
  p.epsilon = auto_epsilon(family_vector(p, kTol), kTol);
  return p;
}

ErrorCode error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_SUITE("family parameters") {
  TEST_CASE("range and independence") {
    CHECK(error_of([] { FamilyParams::canonical(3, 2).validate(kTol); }) ==
          ErrorCode::InvalidArgument);
    CHECK(error_of([] { FamilyParams::canonical(4, 0).validate(kTol); }) ==
          ErrorCode::InvalidArgument);
    CHECK_NOTHROW(FamilyParams::canonical(9, 4).validate(kTol));

    FamilyParams same = FamilyParams::canonical(4, 1);
    same.b_vectors[0] = same.a_vectors[0];
    CHECK(error_of([&] { (void)antisym_vector(same, kTol); }) ==
          ErrorCode::DependentVectors);

    FamilyParams parallel = FamilyParams::canonical(6, 2);
    parallel.b_vectors[1] = Complex(0.0, 2.0) * parallel.a_vectors[0];
    CHECK(error_of([&] { parallel.validate(kTol); }) == ErrorCode::DependentVectors);

    FamilyParams bad_eps = FamilyParams::canonical(4, 1, -1.0);
    CHECK(error_of([&] { bad_eps.validate(kTol); }) == ErrorCode::InvalidArgument);
  }
}

TEST_SUITE("family state") {
  TEST_CASE("k = 5, n = 2 with automatic epsilon") {
    const FamilyParams p = with_auto_epsilon(FamilyParams::canonical(5, 2));
    const auto r = analyze(family_state(p, kTol), kTol);
    CHECK(r.best_bound == 2);
    CHECK(r.find(DetectorName::Ppt)->verdict == Verdict::Inconclusive);
  }

  TEST_CASE("k = 3, n = 1 is certified only to 1") {
    const FamilyParams p = with_auto_epsilon(FamilyParams::canonical(3, 1));
    CHECK(p.epsilon == 1.0);
    CHECK(analyze(family_state(p, kTol), kTol).best_bound == 1);
  }

  TEST_CASE("k = 2, n = 1, epsilon = 1: g_A = eps a a^dagger") {
    const FamilyParams p = FamilyParams::canonical(2, 1, 1.0);
    const BipartiteState g = family_state(p, kTol);
    const Matrix id = Matrix::Identity(4, 4), f = oracle::flip(2);
    const Matrix expected_state = id + f + oracle::kron(oracle::basis(2, 0), oracle::basis(2, 1)) *
                                               oracle::kron(oracle::basis(2, 0), oracle::basis(2, 1)).adjoint();
    CHECK(oracle::rel_diff(g.matrix(), expected_state) == 0.0);

    const Vector a = oracle::kron(oracle::basis(2, 0), oracle::basis(2, 1)) -
                     oracle::kron(oracle::basis(2, 1), oracle::basis(2, 0));
    const Matrix ga = (id - f) * g.matrix() * (id - f);
    CHECK(oracle::rel_diff(symmetrize(g, Sign::Minus).matrix(), ga) < 1e-15);
    CHECK(oracle::rel_diff(ga, a * a.adjoint()) < 1e-15);
    CHECK(schmidt_rank(PureVector({2, 2}, a), kTol) == 2);
  }

  TEST_CASE("g_A equals eps a a^dagger for random vectors") {
    for (Index k = 2; k <= 6; ++k)
      for (Index n = 1; 2 * n <= k; ++n) {
        const FamilyParams p = FamilyParams::random(k, n, std::uint64_t(k * 10 + n), 0.3);
        const Vector a = antisym_vector(p, kTol).entries();
        const Matrix ga = symmetrize(family_state(p, kTol), Sign::Minus).matrix();
        CHECK(oracle::rel_diff(ga, 0.3 * a * a.adjoint()) < 1e-12);
      }
  }
}

TEST_SUITE("antisymmetric vector") {
  TEST_CASE("canonical examples") {
    const PureVector a = antisym_vector(FamilyParams::canonical(2, 1), kTol);
    Vector expected = Vector::Zero(4);
    expected(1) = 1.0;
    expected(2) = -1.0;
    CHECK(a.entries() == expected);
    CHECK(schmidt_rank(a, kTol) == 2);
    CHECK(schmidt_rank(antisym_vector(FamilyParams::canonical(5, 2), kTol), kTol) == 4);
  }

  TEST_CASE("F a = -a and SR(a) = 2n") {
    for (Index k = 2; k <= 8; ++k)
      for (Index n = 1; 2 * n <= k; ++n)
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
          const PureVector a = antisym_vector(FamilyParams::random(k, n, seed), kTol);
          CHECK((oracle::flip(k) * a.entries() + a.entries()).norm() <=
                1e-13 * a.entries().norm());
          CHECK(schmidt_rank(a, kTol) == 2 * n);
        }
  }
}

TEST_SUITE("automatic epsilon") {
  TEST_CASE("product vector: partial transpose already PSD, epsilon = 1") {
    std::mt19937_64 rng(4);
    const PureVector v = PureVector::product(oracle::random_vector(3, rng), oracle::random_vector(3, rng));
    const Matrix pt = oracle::partial_transpose(v.entries() * v.entries().adjoint(), 3, 3);
    CHECK(oracle::generic_eigenvalues(pt)(0) >= -1e-12);
    CHECK(auto_epsilon(v, kTol) == 1.0);
  }

  TEST_CASE("Schmidt-rank-2 unit vector: lambda_min = -1/2 gives epsilon = 1") {
    Vector v = Vector::Zero(4);
    v(1) = v(2) = 1.0 / std::sqrt(2.0);
    const Matrix pt = oracle::partial_transpose(v * v.adjoint(), 2, 2);
    CHECK(oracle::generic_eigenvalues(pt)(0) == doctest::Approx(-0.5));
    CHECK(auto_epsilon(PureVector({2, 2}, v), kTol) == doctest::Approx(1.0));
  }

  TEST_CASE("canonical family: lambda_min = -1 gives epsilon = 1/2") {
    const PureVector v = family_vector(FamilyParams::canonical(5, 2), kTol);
    CHECK(auto_epsilon(v, kTol) == doctest::Approx(0.5));
  }

  TEST_CASE("returned epsilon always yields a PPT family state") {
    for (Index k = 2; k <= 7; ++k)
      for (Index n = 1; 2 * n <= k; ++n)
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
          const FamilyParams p = with_auto_epsilon(FamilyParams::random(k, n, seed));
          CHECK(p.epsilon > 0.0);
          CHECK(detect_ppt(family_state(p, kTol), kTol).verdict == Verdict::Inconclusive);
        }
  }

  TEST_CASE("errors") {
    CHECK(error_of([] { (void)auto_epsilon(PureVector({3, 3}, Vector::Zero(9)), kTol); }) ==
          ErrorCode::ZeroVector);
    CHECK(error_of([] { (void)auto_epsilon(PureVector({2, 3}, Vector::Ones(6)), kTol); }) ==
          ErrorCode::NonSquareFactors);
  }
}

TEST_SUITE("separable decomposition of Id + F") {
  TEST_CASE("k = 1 is a single term") {
    const auto d = sym_separable_decomposition(1);
    REQUIRE(d.terms.size() == 1);
    CHECK(d.terms[0].weight == 2.0);
    CHECK(std::abs(d.reconstruct()(0, 0) - Complex(2.0, 0.0)) <= 1e-14);
  }

  TEST_CASE("k = 3: 64 phase terms plus 3 diagonal terms") {
    const auto d = sym_separable_decomposition(3);
    CHECK(d.terms.size() == 67);
    // Brute-force accumulation, independent of reconstruct().
    Matrix sum = Matrix::Zero(9, 9);
    double trace = 0.0;
    for (const auto& t : d.terms) {
      const Vector x = oracle::kron(t.left, t.right);
      sum += t.weight * x * x.adjoint();
      trace += t.weight * t.left.squaredNorm() * t.right.squaredNorm();
    }
    const Matrix target = Matrix::Identity(9, 9) + oracle::flip(3);
    CHECK(oracle::rel_diff(sum, target) < 1e-10);
    CHECK(trace == doctest::Approx(12.0).epsilon(1e-12));
    CHECK(relative_error(d.reconstruct(), target) < 1e-10);
  }

  TEST_CASE("every term is a product and reconstruction holds for k <= 6") {
    for (Index k = 1; k <= 6; ++k) {
      const auto d = sym_separable_decomposition(k);
      for (const auto& t : d.terms) {
        CHECK(t.weight > 0.0);
        CHECK(schmidt_rank(PureVector::product(t.left, t.right), kTol) == 1);
      }
      const Matrix target = Matrix::Identity(k * k, k * k) + flip_operator(k);
      CHECK(relative_error(d.reconstruct(), target) <= 1e-10);
    }
  }

  TEST_CASE("enumeration is capped at k = 8") {
    CHECK(error_of([] { (void)sym_separable_decomposition(9); }) ==
          ErrorCode::DimensionTooLarge);
    CHECK(error_of([] { (void)sym_separable_decomposition(0); }) ==
          ErrorCode::InvalidArgument);
  }
}

TEST_SUITE("upper certificate") {
  TEST_CASE("canonical families") {
    const auto c52 = sn_upper_certificate(with_auto_epsilon(FamilyParams::canonical(5, 2)), kTol);
    CHECK(c52.value == 2);
    CHECK(c52.reconstruction_error <= 1e-10);
    CHECK(c52.product_terms == 1024 + 5);
    CHECK(sn_upper_certificate(with_auto_epsilon(FamilyParams::canonical(7, 3)), kTol).value == 3);
    CHECK(sn_upper_certificate(with_auto_epsilon(FamilyParams::canonical(2, 1)), kTol).value == 1);
  }

  TEST_CASE("k > 8 is rejected") {
    CHECK(error_of([] {
            (void)sn_upper_certificate(FamilyParams::canonical(9, 4, 0.5), kTol);
          }) == ErrorCode::DimensionTooLarge);
  }
}

TEST_SUITE("random generators") {
  TEST_CASE("random pure vectors hit the requested Schmidt rank") {
    for (Index k = 1; k <= 4; ++k)
      for (Index m = 1; m <= 4; ++m)
        for (Index sr = 1; sr <= std::min(k, m); ++sr)
          CHECK(schmidt_rank(random_pure(k, m, sr, std::uint64_t(sr * 7 + k)), kTol) == sr);
    CHECK(error_of([] { (void)random_pure(3, 2, 3, 0); }) == ErrorCode::BadRank);
    CHECK(error_of([] { (void)random_pure(3, 3, 0, 0); }) == ErrorCode::BadRank);
  }

  TEST_CASE("determinism per seed") {
    CHECK(random_pure(4, 3, 2, 99).entries() == random_pure(4, 3, 2, 99).entries());
    CHECK(random_pure(4, 3, 2, 99).entries() != random_pure(4, 3, 2, 100).entries());
    CHECK(random_separable(3, 3, 5, 7).matrix() == random_separable(3, 3, 5, 7).matrix());
    CHECK(random_density(2, 3, 4, 7).matrix() == random_density(2, 3, 4, 7).matrix());
  }

  TEST_CASE("separable ensemble ranks") {
    const auto one = random_separable(3, 4, 1, 1);
    CHECK(numerical_rank(one.matrix(), kTol) == 1);
    CHECK(numerical_rank(marginal(one, Side::Left), kTol) == 1);
    CHECK(numerical_rank(marginal(one, Side::Right), kTol) == 1);

    const auto full = random_separable(3, 4, 12, 2);
    CHECK(numerical_rank(full.matrix(), kTol) == 12);
    CHECK(numerical_rank(marginal(full, Side::Left), kTol) == 3);
    CHECK(numerical_rank(marginal(full, Side::Right), kTol) == 4);
    CHECK(check_state(full, kTol).valid());
  }

  TEST_CASE("density ensemble ranks") {
    const auto full = random_density(2, 3, 6, 5);
    CHECK(hermitian_eigenvalues(full.matrix(), kTol)(0) > 0.0);
    CHECK(numerical_rank(random_density(3, 3, 1, 5).matrix(), kTol) == 1);
    CHECK(numerical_rank(random_density(3, 3, 4, 5).matrix(), kTol) == 4);
    CHECK(error_of([] { (void)random_density(2, 2, 5, 0); }) == ErrorCode::BadRank);
  }

  TEST_CASE("SplitMix64 seed schedule") {
    // First outputs of a SplitMix64 stream seeded with 0.
    CHECK(trial_seed(0, 0) == 0xE220A8397B1DCDAFULL);
    CHECK(trial_seed(0, 1) == 0x6E789E6AA1B965F4ULL);
    CHECK(trial_seed(42, 2) == 0x47526757130F9F52ULL);
  }
}
