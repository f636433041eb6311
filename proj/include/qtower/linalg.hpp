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

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qtower/errors.hpp"

namespace qtower {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

namespace tol {
// structural predicates: unitary, isometry, Hermitian, PSD
inline constexpr double kStructural = 1e-9;
// outputs of composed computations
inline constexpr double kComposed = 1e-8;
// Gram-Schmidt candidates below this residual are skipped
inline constexpr double kGramSchmidtSkip = 1e-6;
// Jacobi stops once the off-diagonal Frobenius norm drops below this
inline constexpr double kJacobiOffDiagonal = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;
}  // namespace tol

/// Block-diagonal matrix with `a` top-left and `b` bottom-right.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> direct_sum(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Result = Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Result out = Result::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

/// Kronecker product; row (i1 * b.rows() + i2), column (j1 * b.cols() + j2).
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Result = Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Result out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Largest entry modulus; zero for empty matrices.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

template <typename DerivedA, typename DerivedB>
double sup_distance(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return max_abs(a - b);
}

bool all_finite(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& h, double eps = tol::kStructural);

struct HermitianEig {
  RealVector eigenvalues;      // ascending
  ComplexMatrix eigenvectors;  // columns, unitary
};

/// Cyclic complex Jacobi diagonalisation. Throws NotHermitian when
/// max|h - h^dagger| exceeds the structural tolerance.
HermitianEig hermitian_eig(const ComplexMatrix& h);

/// Largest eigenvalue of a Hermitian matrix; -inf for 0x0.
double max_eigenvalue(const ComplexMatrix& h);
double min_eigenvalue(const ComplexMatrix& h);

/// Hermitian PSD square root. Eigenvalues in [-1e-9, 0) are clamped to
/// zero; anything more negative raises NotPSD.
ComplexMatrix psd_sqrt(const ComplexMatrix& h);

enum class TraceOut { First, Second };

/// Partial trace of an operator on a d1*d2 space laid out as kron.
ComplexMatrix partial_trace(const ComplexMatrix& m, Eigen::Index d1, Eigen::Index d2,
                            TraceOut which);

/// Extends an isometry to a unitary whose leading columns equal `v`. The new
/// columns come from Gram-Schmidt over e_0, e_1, ... in index order.
ComplexMatrix complete_isometry(const ComplexMatrix& v);

enum class OperatorClass { Unitary, Isometry, Coisometry, StrictContractionClass, None };

const char* to_string(OperatorClass c);

OperatorClass classify_operator(const ComplexMatrix& t);

/// True when classify_operator puts `t` anywhere in the contraction lattice.
bool is_contraction(const ComplexMatrix& t);
bool is_isometry(const ComplexMatrix& t, double eps = tol::kStructural);
bool is_coisometry(const ComplexMatrix& t, double eps = tol::kStructural);
bool is_unitary(const ComplexMatrix& t, double eps = tol::kStructural);

/// Spectral norm, via the largest eigenvalue of t^dagger t.
double operator_norm(const ComplexMatrix& t);

/// 0/1 matrix sending source index j to target index perm[j].
ComplexMatrix permutation_matrix(const std::vector<Eigen::Index>& perm);

/// Matrix unit |i><j| in dimension rows x cols.
ComplexMatrix matrix_unit(Eigen::Index rows, Eigen::Index cols, Eigen::Index i, Eigen::Index j);

}  // namespace qtower
