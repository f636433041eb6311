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

#include "qtower/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace qtower {

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

bool is_hermitian(const ComplexMatrix& h, double eps) {
  return h.rows() == h.cols() && sup_distance(h, h.adjoint()) <= eps;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

// One complex Jacobi rotation zeroing a(p, q). The rotation is
// G = D * R where D removes the phase of a(p, q) and R is the real
// symmetric Jacobi rotation in the (p, q) plane.
void rotate(ComplexMatrix& a, ComplexMatrix& v, Eigen::Index p, Eigen::Index q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = apq / mag;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex gpp = c;
  const Complex gpq = s;
  const Complex gqp = -s * std::conj(phase);
  const Complex gqq = c * std::conj(phase);

  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * gpp + akq * gqp;
    a(k, q) = akp * gpq + akq * gqq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * gpp + vkq * gqp;
    v(k, q) = vkp * gpq + vkq * gqq;
  }
}

}  // namespace

HermitianEig hermitian_eig(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) {
    throw Error(ErrorKind::NotHermitian, "matrix is not square");
  }
  if (!is_hermitian(h)) {
    std::ostringstream msg;
    msg << "max|h - h^dagger| = " << sup_distance(h, h.adjoint());
    throw Error(ErrorKind::NotHermitian, msg.str());
  }
  const Eigen::Index n = h.rows();
  ComplexMatrix a = (h + h.adjoint()) / 2.0;
  ComplexMatrix v = ComplexMatrix::Identity(n, n);

  for (int sweep = 0; sweep < tol::kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= tol::kJacobiOffDiagonal) break;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    return a(x, x).real() < a(y, y).real();
  });

  HermitianEig out{RealVector(n), ComplexMatrix(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto src = order[static_cast<std::size_t>(k)];
    out.eigenvalues(k) = a(src, src).real();
    out.eigenvectors.col(k) = v.col(src);
  }
  return out;
}

double max_eigenvalue(const ComplexMatrix& h) {
  if (h.size() == 0) return -std::numeric_limits<double>::infinity();
  const auto eig = hermitian_eig(h);
  return eig.eigenvalues(eig.eigenvalues.size() - 1);
}

double min_eigenvalue(const ComplexMatrix& h) {
  if (h.size() == 0) return std::numeric_limits<double>::infinity();
  return hermitian_eig(h).eigenvalues(0);
}

ComplexMatrix psd_sqrt(const ComplexMatrix& h) {
  const auto eig = hermitian_eig(h);
  RealVector roots(eig.eigenvalues.size());
  for (Eigen::Index k = 0; k < roots.size(); ++k) {
    const double lambda = eig.eigenvalues(k);
    if (lambda < -tol::kStructural) {
      std::ostringstream msg;
      msg << "eigenvalue " << lambda << " below -1e-9";
      throw Error(ErrorKind::NotPSD, msg.str());
    }
    roots(k) = std::sqrt(std::max(lambda, 0.0));
  }
  const ComplexMatrix& vecs = eig.eigenvectors;
  ComplexMatrix s = vecs * roots.cast<Complex>().asDiagonal() * vecs.adjoint();
  return (s + s.adjoint()) / 2.0;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, Eigen::Index d1, Eigen::Index d2,
                            TraceOut which) {
  if (m.rows() != m.cols() || m.rows() != d1 * d2 || d1 < 0 || d2 < 0) {
    std::ostringstream msg;
    msg << "partial trace of " << m.rows() << "x" << m.cols() << " over dims (" << d1 << ", "
        << d2 << ")";
    throw Error(ErrorKind::DimensionMismatch, msg.str());
  }
  if (which == TraceOut::Second) {
    ComplexMatrix out = ComplexMatrix::Zero(d1, d1);
    for (Eigen::Index i = 0; i < d1; ++i)
      for (Eigen::Index j = 0; j < d1; ++j)
        for (Eigen::Index k = 0; k < d2; ++k) out(i, j) += m(i * d2 + k, j * d2 + k);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(d2, d2);
  for (Eigen::Index i = 0; i < d2; ++i)
    for (Eigen::Index j = 0; j < d2; ++j)
      for (Eigen::Index k = 0; k < d1; ++k) out(i, j) += m(k * d2 + i, k * d2 + j);
  return out;
}

bool is_isometry(const ComplexMatrix& t, double eps) {
  const ComplexMatrix gram = t.adjoint() * t;
  return sup_distance(gram, ComplexMatrix::Identity(t.cols(), t.cols())) <= eps;
}

bool is_coisometry(const ComplexMatrix& t, double eps) {
  const ComplexMatrix gram = t * t.adjoint();
  return sup_distance(gram, ComplexMatrix::Identity(t.rows(), t.rows())) <= eps;
}

bool is_unitary(const ComplexMatrix& t, double eps) {
  return t.rows() == t.cols() && is_isometry(t, eps) && is_coisometry(t, eps);
}

ComplexMatrix complete_isometry(const ComplexMatrix& v) {
  if (v.rows() < v.cols() || !is_isometry(v)) {
    throw Error(ErrorKind::NotIsometry, "complete_isometry needs v^dagger v = I");
  }
  const Eigen::Index n = v.rows();
  ComplexMatrix u(n, n);
  u.leftCols(v.cols()) = v;
  Eigen::Index filled = v.cols();
  for (Eigen::Index k = 0; k < n && filled < n; ++k) {
    ComplexVector r = ComplexVector::Unit(n, k);
    // two passes of modified Gram-Schmidt keep the new column orthogonal to
    // working precision
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index c = 0; c < filled; ++c) r -= u.col(c) * u.col(c).dot(r);
    }
    const double norm = r.norm();
    if (norm < tol::kGramSchmidtSkip) continue;
    u.col(filled++) = r / norm;
  }
  if (filled != n) {
    throw Error(ErrorKind::NumericalFailure, "Gram-Schmidt completion ran out of candidates");
  }
  return u;
}

double operator_norm(const ComplexMatrix& t) {
  if (t.size() == 0) return 0.0;
  const ComplexMatrix gram = t.adjoint() * t;
  return std::sqrt(std::max(0.0, max_eigenvalue((gram + gram.adjoint()) / 2.0)));
}

OperatorClass classify_operator(const ComplexMatrix& t) {
  const bool iso = is_isometry(t);
  const bool coiso = is_coisometry(t);
  if (iso && coiso) return OperatorClass::Unitary;
  if (iso) return OperatorClass::Isometry;
  if (coiso) return OperatorClass::Coisometry;
  if (t.cols() == 0 || t.rows() == 0) return OperatorClass::StrictContractionClass;
  const ComplexMatrix gram = t.adjoint() * t;
  const double top = max_eigenvalue((gram + gram.adjoint()) / 2.0);
  return top <= 1.0 + tol::kStructural ? OperatorClass::StrictContractionClass
                                       : OperatorClass::None;
}

bool is_contraction(const ComplexMatrix& t) { return classify_operator(t) != OperatorClass::None; }

const char* to_string(OperatorClass c) {
  switch (c) {
    case OperatorClass::Unitary: return "unitary";
    case OperatorClass::Isometry: return "isometry";
    case OperatorClass::Coisometry: return "coisometry";
    case OperatorClass::StrictContractionClass: return "strict_contraction_class";
    case OperatorClass::None: return "none";
  }
  return "none";
}

ComplexMatrix permutation_matrix(const std::vector<Eigen::Index>& perm) {
  const auto n = static_cast<Eigen::Index>(perm.size());
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) p(perm[static_cast<std::size_t>(j)], j) = 1.0;
  return p;
}

ComplexMatrix matrix_unit(Eigen::Index rows, Eigen::Index cols, Eigen::Index i, Eigen::Index j) {
  ComplexMatrix e = ComplexMatrix::Zero(rows, cols);
  e(i, j) = 1.0;
  return e;
}

}  // namespace qtower
