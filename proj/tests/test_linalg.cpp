// Copyright 2026 The qtower Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_util.hpp"

using namespace qtower;
using namespace qtower::testing;

TEST_CASE("direct_sum stacks blocks on the diagonal") {
  CHECK_CLOSE(direct_sum(mat(1, 1, {1}), mat(1, 1, {1})), eye(2), 0.0);
  CHECK_CLOSE(direct_sum(mat(1, 1, {2}), mat(1, 1, {3})), mat(2, 2, {2, 0, 0, 3}), 0.0);
  const ComplexMatrix b = mat(2, 1, {1, Complex(0, 2)});
  const ComplexMatrix s = direct_sum(ComplexMatrix(0, 0), b);
  CHECK(s.rows() == 2);
  CHECK(s.cols() == 1);
  CHECK_CLOSE(s, b, 0.0);
}

TEST_CASE("kron uses the row-major index convention") {
  CHECK_CLOSE(kron(eye(2), eye(2)), eye(4), 0.0);
  const ComplexMatrix b = mat(2, 3, {1, 2, 3, 4, 5, 6});
  CHECK_CLOSE(kron(mat(1, 1, {1}), b), b, 0.0);
  CHECK_CLOSE(kron(pauli_x(), mat(1, 1, {2})), mat(2, 2, {0, 2, 2, 0}), 0.0);

  Rng rng(7);
  const ComplexMatrix a = random_gaussian_matrix(rng, 2, 3);
  const ComplexMatrix c = random_gaussian_matrix(rng, 3, 2);
  const ComplexMatrix k = kron(a, c);
  for (Eigen::Index i1 = 0; i1 < 2; ++i1)
    for (Eigen::Index j1 = 0; j1 < 3; ++j1)
      for (Eigen::Index i2 = 0; i2 < 3; ++i2)
        for (Eigen::Index j2 = 0; j2 < 2; ++j2)
          CHECK(std::abs(k(i1 * 3 + i2, j1 * 2 + j2) - a(i1, j1) * c(i2, j2)) == 0.0);
}

TEST_CASE("hermitian_eig examples") {
  auto e = hermitian_eig(eye(2));
  CHECK(e.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(e.eigenvalues(1) == doctest::Approx(1.0));

  e = hermitian_eig(mat(2, 2, {3, 0, 0, 1}));
  CHECK(e.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(e.eigenvalues(1) == doctest::Approx(3.0));

  const ComplexMatrix h = mat(2, 2, {2, 1, 1, 2});
  e = hermitian_eig(h);
  CHECK(e.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.eigenvalues(1) == doctest::Approx(3.0).epsilon(1e-12));
  const ComplexMatrix back =
      e.eigenvectors * e.eigenvalues.cast<Complex>().asDiagonal() * e.eigenvectors.adjoint();
  CHECK_CLOSE(back, h, 1e-9);
}

TEST_CASE("hermitian_eig matches frozen oracle eigenvalues") {
  // numpy.linalg.eigvalsh
  const ComplexMatrix h =
      mat(3, 3, {2, Complex(1, -1), 0.5, Complex(1, 1), 3, 0, 0.5, 0, 1});
  const auto e = hermitian_eig(h);
  CHECK(std::abs(e.eigenvalues(0) - 0.579388964974969) < 1e-12);
  CHECK(std::abs(e.eigenvalues(1) - 1.392580881872036) < 1e-12);
  CHECK(std::abs(e.eigenvalues(2) - 4.028030153152995) < 1e-12);
}

TEST_CASE("hermitian_eig reconstructs random Hermitian matrices") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index n = rng.uniform_int(1, 12);
    const ComplexMatrix h = random_hermitian(rng, n);
    const auto e = hermitian_eig(h);
    CHECK(is_unitary(e.eigenvectors));
    const ComplexMatrix back =
        e.eigenvectors * e.eigenvalues.cast<Complex>().asDiagonal() * e.eigenvectors.adjoint();
    CHECK_CLOSE(back, h, 1e-9);
    for (Eigen::Index i = 1; i < n; ++i) CHECK(e.eigenvalues(i - 1) <= e.eigenvalues(i));
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> oracle(h);
    CHECK((e.eigenvalues - oracle.eigenvalues()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  CHECK_THROWS_KIND(hermitian_eig(mat(2, 2, {1, 1, 0, 1})), ErrorKind::NotHermitian);
  CHECK_THROWS_KIND(hermitian_eig(mat(2, 1, {1, 1})), ErrorKind::NotHermitian);
}

TEST_CASE("psd_sqrt examples") {
  CHECK_CLOSE(psd_sqrt(eye(2)), eye(2), 1e-12);
  CHECK_CLOSE(psd_sqrt(mat(2, 2, {4, 0, 0, 9})), mat(2, 2, {2, 0, 0, 3}), 1e-12);
  const ComplexMatrix h = mat(2, 2, {2, 1, 1, 2});
  const ComplexMatrix s = psd_sqrt(h);
  CHECK_CLOSE(s * s, h, 1e-8);
  // scipy.linalg.sqrtm
  CHECK_CLOSE(s, mat(2, 2, {1.3660254037844384, 0.3660254037844386, 0.3660254037844386,
                            1.3660254037844384}),
              1e-12);
  const ComplexMatrix h3 =
      mat(3, 3, {2, Complex(1, -1), 0.5, Complex(1, 1), 3, 0, 0.5, 0, 1});
  const ComplexMatrix s3 = psd_sqrt(h3);
  CHECK(std::abs(s3(0, 0) - 1.3112168895557008) < 1e-12);
  CHECK(std::abs(s3(0, 1) - Complex(0.33832680045870706, -0.33832680045870739)) < 1e-12);
  CHECK(std::abs(s3(1, 2) - Complex(-0.02919463829387168, -0.029194638293871488)) < 1e-12);
  CHECK(std::abs(s3(2, 2) - 0.9728900890969938) < 1e-12);
}

TEST_CASE("psd_sqrt clamps tiny negatives and rejects real ones") {
  const ComplexMatrix s = psd_sqrt(mat(2, 2, {1, 0, 0, -5e-10}));
  CHECK(std::abs(s(1, 1)) == 0.0);
  CHECK_THROWS_KIND(psd_sqrt(mat(2, 2, {1, 0, 0, -1e-6})), ErrorKind::NotPSD);
}

TEST_CASE("psd_sqrt squares back on random PSD matrices") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index n = rng.uniform_int(1, 8);
    const Eigen::Index r = rng.uniform_int(1, n);
    const ComplexMatrix g = random_gaussian_matrix(rng, n, r);
    const ComplexMatrix h = g * g.adjoint();
    const ComplexMatrix s = psd_sqrt(h);
    CHECK(is_hermitian(s));
    CHECK(min_eigenvalue(s) >= -1e-9);
    CHECK_CLOSE(s * s, h, 1e-8);
  }
}

TEST_CASE("partial_trace examples") {
  ComplexMatrix p00 = ComplexMatrix::Zero(4, 4);
  p00(0, 0) = 1.0;
  CHECK_CLOSE(partial_trace(p00, 2, 2, TraceOut::Second), mat(2, 2, {1, 0, 0, 0}), 0.0);

  ComplexMatrix bell = ComplexMatrix::Zero(4, 4);
  for (int i : {0, 3})
    for (int j : {0, 3}) bell(i, j) = 0.5;
  CHECK_CLOSE(partial_trace(bell, 2, 2, TraceOut::First), eye(2) / 2.0, 1e-15);
  CHECK_CLOSE(partial_trace(bell, 2, 2, TraceOut::Second), eye(2) / 2.0, 1e-15);
}

TEST_CASE("partial_trace of a product") {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index d1 = rng.uniform_int(1, 4);
    const Eigen::Index d2 = rng.uniform_int(1, 4);
    const ComplexMatrix a = random_gaussian_matrix(rng, d1, d1);
    const ComplexMatrix b = random_gaussian_matrix(rng, d2, d2);
    const ComplexMatrix ab = kron(a, b);
    CHECK_CLOSE(partial_trace(ab, d1, d2, TraceOut::Second), b.trace() * a, 1e-12);
    CHECK_CLOSE(partial_trace(ab, d1, d2, TraceOut::First), a.trace() * b, 1e-12);
    CHECK(std::abs(partial_trace(ab, d1, d2, TraceOut::Second).trace() - ab.trace()) < 1e-12);
  }
  CHECK_THROWS_KIND(partial_trace(eye(3), 2, 2, TraceOut::First), ErrorKind::DimensionMismatch);
}

TEST_CASE("complete_isometry examples") {
  CHECK_CLOSE(complete_isometry(mat(2, 1, {1, 0})), eye(2), 0.0);
  CHECK_CLOSE(complete_isometry(mat(2, 1, {0, 1})), pauli_x(), 0.0);
  const double r = 1.0 / std::sqrt(2.0);
  const ComplexMatrix u = complete_isometry(mat(2, 1, {r, r}));
  CHECK(is_unitary(u));
  CHECK_CLOSE(u.col(1), mat(2, 1, {r, -r}), 1e-12);
}

TEST_CASE("complete_isometry extends random isometries") {
  Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index rows = rng.uniform_int(1, 8);
    const Eigen::Index cols = rng.uniform_int(0, rows);
    const ComplexMatrix v = random_isometry(rng, rows, cols);
    const ComplexMatrix u = complete_isometry(v);
    CHECK(u.rows() == rows);
    CHECK(u.cols() == rows);
    CHECK(is_unitary(u));
    CHECK_CLOSE(u.leftCols(cols), v, 0.0);
  }
  CHECK_THROWS_KIND(complete_isometry(mat(2, 1, {1, 1})), ErrorKind::NotIsometry);
}

TEST_CASE("classify_operator examples") {
  CHECK(classify_operator(hadamard()) == OperatorClass::Unitary);
  CHECK(classify_operator(mat(2, 1, {1, 0})) == OperatorClass::Isometry);
  CHECK(classify_operator(mat(1, 2, {1, 0})) == OperatorClass::Coisometry);
  CHECK(classify_operator(mat(1, 1, {0.5})) == OperatorClass::StrictContractionClass);
  CHECK(classify_operator(mat(1, 1, {1.1})) == OperatorClass::None);
  CHECK(classify_operator(ComplexMatrix(0, 0)) == OperatorClass::Unitary);
  CHECK(classify_operator(ComplexMatrix(0, 3)) == OperatorClass::Coisometry);
  CHECK(classify_operator(ComplexMatrix(3, 0)) == OperatorClass::Isometry);
}

TEST_CASE("classify_operator agrees with an independent eigenvalue test") {
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const Eigen::Index rows = rng.uniform_int(1, 5);
    const Eigen::Index cols = rng.uniform_int(1, 5);
    const ComplexMatrix t = random_with_norm(rng, rows, cols, 0.5 + rng.uniform());
    const ComplexMatrix defect = eye(cols) - t.adjoint() * t;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> oracle(defect);
    const bool contraction = oracle.eigenvalues().minCoeff() >= -1e-9;
    CHECK((classify_operator(t) != OperatorClass::None) == contraction);
    CHECK(is_contraction(t) == contraction);
  }
}

TEST_CASE("permutation and matrix units") {
  const ComplexMatrix p = permutation_matrix({2, 0, 1});
  CHECK(is_unitary(p));
  CHECK(p(2, 0) == Complex(1.0));
  CHECK(p(0, 1) == Complex(1.0));
  const ComplexMatrix e = matrix_unit(2, 3, 1, 2);
  CHECK(e.cwiseAbs().sum() == 1.0);
  CHECK(e(1, 2) == Complex(1.0));
}

TEST_CASE("operator_norm of a scaled unitary") {
  Rng rng(4);
  const ComplexMatrix u = random_unitary(rng, 4);
  CHECK(operator_norm(0.7 * u) == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("Rng is deterministic per seed and stream") {
  Rng a(42), b(42), c(42, 1);
  const auto x = a.next_u64();
  CHECK(x == b.next_u64());
  CHECK(x != c.next_u64());
  Rng d(42);
  for (int i = 0; i < 1000; ++i) {
    const double u = d.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const auto k = d.uniform_int(2, 5);
    CHECK(k >= 2);
    CHECK(k <= 5);
  }
}
