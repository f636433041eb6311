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

#include "qtower/channels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qtower {

KrausChannel::KrausChannel(Eigen::Index in_dim, Eigen::Index out_dim,
                           std::vector<ComplexMatrix> kraus)
    : in_(in_dim), out_(out_dim), kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw Error(ErrorKind::ShapeMismatch, "Kraus list must be nonempty");
  for (const auto& m : kraus_) {
    if (m.rows() != out_ || m.cols() != in_) {
      std::ostringstream msg;
      msg << "Kraus operator is " << m.rows() << "x" << m.cols() << ", expected " << out_ << "x"
          << in_;
      throw Error(ErrorKind::ShapeMismatch, msg.str());
    }
    if (!all_finite(m)) throw Error(ErrorKind::ShapeMismatch, "non-finite Kraus entry");
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {
  if (!is_hermitian(mat_)) throw Error(ErrorKind::NotHermitian, "density matrix");
  if (mat_.size() > 0 && min_eigenvalue(mat_) < -tol::kStructural) {
    throw Error(ErrorKind::NotPSD, "density matrix");
  }
  if (mat_.trace().real() > 1.0 + tol::kStructural) {
    throw Error(ErrorKind::NotPSD, "density matrix trace exceeds 1");
  }
}

ChoiMatrix::ChoiMatrix(Eigen::Index in_dim, Eigen::Index out_dim, ComplexMatrix mat)
    : in_(in_dim), out_(out_dim), mat_(std::move(mat)) {
  const Eigen::Index n = in_ * out_;
  if (mat_.rows() != n || mat_.cols() != n) {
    throw Error(ErrorKind::DimensionMismatch, "Choi matrix must be (in*out) x (in*out)");
  }
  if (!is_hermitian(mat_)) throw Error(ErrorKind::NotHermitian, "Choi matrix");
  if (n > 0 && min_eigenvalue(mat_) < -tol::kStructural) {
    throw Error(ErrorKind::NotPSD, "Choi matrix");
  }
  if (in_ > 0 && out_ > 0 &&
      max_eigenvalue(partial_trace(mat_, in_, out_, TraceOut::Second)) > 1.0 + tol::kStructural) {
    throw Error(ErrorKind::InvalidChannel, "Choi matrix is not trace-nonincreasing");
  }
}

StinespringRep::StinespringRep(TowerMor t, Obj anc) : t_(std::move(t)), anc_(std::move(anc)) {
  if (t_.cod().kind() != Obj::Kind::Otimes || !(t_.cod().right() == anc_)) {
    throw Error(ErrorKind::ShapeMismatch,
                "Stinespring codomain " + to_string(t_.cod()) + " is not B * " + to_string(anc_));
  }
  if (!is_contraction(t_.mat())) {
    throw Error(ErrorKind::NotContraction, "Stinespring operator must be a contraction");
  }
}

KrausChannel identity_channel(Eigen::Index dim) {
  return KrausChannel(dim, dim, {ComplexMatrix::Identity(dim, dim)});
}

KrausChannel unitary_channel(const ComplexMatrix& u) {
  return KrausChannel(u.cols(), u.rows(), {u});
}

KrausChannel zero_channel(Eigen::Index in_dim, Eigen::Index out_dim) {
  return KrausChannel(in_dim, out_dim, {ComplexMatrix::Zero(out_dim, in_dim)});
}

ComplexMatrix kraus_gram(const KrausChannel& k) {
  ComplexMatrix sum = ComplexMatrix::Zero(k.in_dim(), k.in_dim());
  for (const auto& m : k.kraus()) sum += m.adjoint() * m;
  return (sum + sum.adjoint()) / 2.0;
}

bool validate_channel(const KrausChannel& k) {
  if (k.in_dim() == 0) return true;
  return max_eigenvalue(kraus_gram(k)) <= 1.0 + tol::kStructural;
}

bool is_trace_preserving(const KrausChannel& k, double eps) {
  return sup_distance(kraus_gram(k), ComplexMatrix::Identity(k.in_dim(), k.in_dim())) <= eps;
}

ComplexMatrix apply_channel(const KrausChannel& k, const ComplexMatrix& rho) {
  if (rho.rows() != k.in_dim() || rho.cols() != k.in_dim()) {
    std::ostringstream msg;
    msg << "channel input is " << k.in_dim() << "-dimensional, operator is " << rho.rows() << "x"
        << rho.cols();
    throw Error(ErrorKind::DimensionMismatch, msg.str());
  }
  ComplexMatrix out = ComplexMatrix::Zero(k.out_dim(), k.out_dim());
  for (const auto& m : k.kraus()) out += m * rho * m.adjoint();
  return out;
}

DensityMatrix apply_channel(const KrausChannel& k, const DensityMatrix& rho) {
  return DensityMatrix(apply_channel(k, rho.mat()));
}

KrausChannel compose_channels(const KrausChannel& f, const KrausChannel& g) {
  if (f.out_dim() != g.in_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "channel composition dimension mismatch");
  }
  std::vector<ComplexMatrix> ops;
  ops.reserve(f.rank() * g.rank());
  for (const auto& mg : g.kraus())
    for (const auto& mf : f.kraus()) ops.push_back(mg * mf);
  return KrausChannel(f.in_dim(), g.out_dim(), std::move(ops));
}

KrausChannel tensor_channels(const KrausChannel& f, const KrausChannel& g) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(f.rank() * g.rank());
  for (const auto& mf : f.kraus())
    for (const auto& mg : g.kraus()) ops.push_back(kron(mf, mg));
  return KrausChannel(f.in_dim() * g.in_dim(), f.out_dim() * g.out_dim(), std::move(ops));
}

namespace {

// vec(M)[i * out + b] = M[b, i]; then choi = sum_k vec(M_k) vec(M_k)^dagger.
ComplexVector vectorize(const ComplexMatrix& m) {
  ComplexVector v(m.rows() * m.cols());
  for (Eigen::Index i = 0; i < m.cols(); ++i)
    for (Eigen::Index b = 0; b < m.rows(); ++b) v(i * m.rows() + b) = m(b, i);
  return v;
}

ComplexMatrix unvectorize(const ComplexVector& v, Eigen::Index out, Eigen::Index in) {
  ComplexMatrix m(out, in);
  for (Eigen::Index i = 0; i < in; ++i)
    for (Eigen::Index b = 0; b < out; ++b) m(b, i) = v(i * out + b);
  return m;
}

}  // namespace

ComplexMatrix choi_matrix(const KrausChannel& k) {
  const Eigen::Index in = k.in_dim();
  const Eigen::Index out = k.out_dim();
  ComplexMatrix c = ComplexMatrix::Zero(in * out, in * out);
  for (Eigen::Index i = 0; i < in; ++i) {
    for (Eigen::Index j = 0; j < in; ++j) {
      c.block(i * out, j * out, out, out) = apply_channel(k, matrix_unit(in, in, i, j));
    }
  }
  return c;
}

ChoiMatrix choi(const KrausChannel& k) {
  return ChoiMatrix(k.in_dim(), k.out_dim(), choi_matrix(k));
}

KrausChannel kraus_from_choi(const ChoiMatrix& c) {
  const Eigen::Index in = c.in_dim();
  const Eigen::Index out = c.out_dim();
  std::vector<ComplexMatrix> ops;
  if (c.mat().size() > 0) {
    const auto eig = hermitian_eig(c.mat());
    for (Eigen::Index k = eig.eigenvalues.size() - 1; k >= 0; --k) {
      const double lambda = eig.eigenvalues(k);
      if (lambda < -tol::kStructural) throw Error(ErrorKind::NotPSD, "Choi eigenvalue below -1e-9");
      if (lambda < 1e-10) continue;
      ops.push_back(std::sqrt(lambda) * unvectorize(eig.eigenvectors.col(k), out, in));
    }
  }
  if (ops.empty()) return zero_channel(in, out);
  return KrausChannel(in, out, std::move(ops));
}

double choi_distance(const KrausChannel& a, const KrausChannel& b) {
  if (a.in_dim() != b.in_dim() || a.out_dim() != b.out_dim()) {
    std::ostringstream msg;
    msg << "channels " << a.in_dim() << "->" << a.out_dim() << " and " << b.in_dim() << "->"
        << b.out_dim();
    throw Error(ErrorKind::DimensionMismatch, msg.str());
  }
  return sup_distance(choi_matrix(a), choi_matrix(b));
}

bool channel_equal(const KrausChannel& a, const KrausChannel& b, double eps) {
  return choi_distance(a, b) <= eps;
}

StinespringRep stinespring(const KrausChannel& k, const Obj& dom, const Obj& cod) {
  if (!validate_channel(k)) {
    throw Error(ErrorKind::InvalidChannel, "Kraus operators are not trace-nonincreasing");
  }
  if (dom.size() != k.in_dim() || cod.size() != k.out_dim()) {
    throw Error(ErrorKind::ShapeMismatch, "objects do not match channel dimensions");
  }
  const auto rank = static_cast<Eigen::Index>(k.rank());
  const Eigen::Index out = k.out_dim();
  ComplexMatrix t(out * rank, k.in_dim());
  for (Eigen::Index i = 0; i < rank; ++i) {
    const ComplexMatrix& m = k.kraus()[static_cast<std::size_t>(i)];
    for (Eigen::Index b = 0; b < out; ++b) t.row(b * rank + i) = m.row(b);
  }
  const Obj anc = Obj::dim(rank);
  return StinespringRep(validate_morphism(dom, cod * anc, std::move(t), Level::Contraction), anc);
}

StinespringRep stinespring(const KrausChannel& k) {
  return stinespring(k, Obj::of_dim(k.in_dim()), Obj::of_dim(k.out_dim()));
}

KrausChannel channel_from_stinespring(const StinespringRep& s) {
  const ComplexMatrix& t = s.t().mat();
  const Eigen::Index g = s.anc().size();
  const Eigen::Index out = s.out().size();
  const Eigen::Index in = t.cols();
  if (g == 0) return zero_channel(in, out);
  std::vector<ComplexMatrix> ops;
  ops.reserve(static_cast<std::size_t>(g));
  for (Eigen::Index i = 0; i < g; ++i) {
    ComplexMatrix e(out, in);
    for (Eigen::Index b = 0; b < out; ++b) e.row(b) = t.row(b * g + i);
    ops.push_back(std::move(e));
  }
  return KrausChannel(in, out, std::move(ops));
}

namespace {

// Two passes of modified Gram-Schmidt over the columns, in place.
void orthonormalize_columns(ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index c = 0; c < j; ++c) m.col(j) -= m.col(c) * m.col(c).dot(m.col(j));
    }
    const double norm = m.col(j).norm();
    if (norm < tol::kGramSchmidtSkip) {
      throw Error(ErrorKind::NumericalFailure, "degenerate Kraus row space");
    }
    m.col(j) /= norm;
  }
}

}  // namespace

ComplexMatrix kraus_mixing_unitary(const KrausChannel& e, const KrausChannel& f) {
  if (e.in_dim() != f.in_dim() || e.out_dim() != f.out_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "Kraus lists act between different spaces");
  }
  if (!channel_equal(e, f)) {
    throw Error(ErrorKind::ChannelsDiffer, "Choi matrices disagree");
  }
  const Eigen::Index k = static_cast<Eigen::Index>(std::max(e.rank(), f.rank()));
  const Eigen::Index d = e.in_dim() * e.out_dim();

  // Rows are vec(E_i) / vec(F_j); missing rows stay zero (padding).
  ComplexMatrix ke = ComplexMatrix::Zero(k, d);
  ComplexMatrix kf = ComplexMatrix::Zero(k, d);
  for (std::size_t i = 0; i < e.rank(); ++i)
    ke.row(static_cast<Eigen::Index>(i)) = vectorize(e.kraus()[i]).transpose();
  for (std::size_t j = 0; j < f.rank(); ++j)
    kf.row(static_cast<Eigen::Index>(j)) = vectorize(f.kraus()[j]).transpose();

  // Equal Choi matrices give K_E^dagger K_E = K_F^dagger K_F. On its range,
  // K_F w / sqrt(lambda) and K_E w / sqrt(lambda) are orthonormal families
  // related by the unitary we want.
  ComplexMatrix gram = kf.adjoint() * kf;
  gram = (gram + gram.adjoint()) / 2.0;
  ComplexMatrix u;
  if (d == 0) {
    u = ComplexMatrix::Identity(k, k);
  } else {
    const auto eig = hermitian_eig(gram);
    const double top = std::max(1.0, eig.eigenvalues(d - 1));
    std::vector<Eigen::Index> kept;
    for (Eigen::Index c = d - 1; c >= 0; --c) {
      if (eig.eigenvalues(c) > 1e-12 * top) kept.push_back(c);
    }
    const auto r = static_cast<Eigen::Index>(kept.size());
    ComplexMatrix a(k, r);
    ComplexMatrix b(k, r);
    for (Eigen::Index c = 0; c < r; ++c) {
      const Eigen::Index col = kept[static_cast<std::size_t>(c)];
      const double scale = std::sqrt(eig.eigenvalues(col));
      a.col(c) = kf * eig.eigenvectors.col(col) / scale;
      b.col(c) = ke * eig.eigenvectors.col(col) / scale;
    }
    orthonormalize_columns(a);
    orthonormalize_columns(b);
    u = complete_isometry(b) * complete_isometry(a).adjoint();
  }

  const double residual = sup_distance(ke, u * kf);
  if (residual > tol::kComposed || !is_unitary(u)) {
    std::ostringstream msg;
    msg << "mixing identity residual " << residual;
    throw Error(ErrorKind::NumericalFailure, msg.str());
  }
  return u;
}

ComplexMatrix mediating_isometry(const StinespringRep& te, const StinespringRep& tf) {
  const Eigen::Index g = te.anc().size();
  const Eigen::Index g2 = tf.anc().size();
  if (g > g2) {
    std::ostringstream msg;
    msg << "ancilla " << g << " is larger than " << g2 << "; swap the arguments";
    throw Error(ErrorKind::AncillaOrder, msg.str());
  }
  const KrausChannel e = channel_from_stinespring(te);
  const KrausChannel f = channel_from_stinespring(tf);
  if (e.in_dim() != f.in_dim() || e.out_dim() != f.out_dim() || !channel_equal(e, f)) {
    throw Error(ErrorKind::ChannelsDiffer, "dilations of different channels");
  }
  if (g == 0) return ComplexMatrix::Zero(g2, 0);

  // Padding to g2 operators: F_j = sum_i conj(u_ij) E_i, so W|i> = sum_j conj(u_ij) |j>.
  std::vector<ComplexMatrix> padded = e.kraus();
  padded.resize(static_cast<std::size_t>(g2), ComplexMatrix::Zero(e.out_dim(), e.in_dim()));
  const ComplexMatrix u =
      kraus_mixing_unitary(KrausChannel(e.in_dim(), e.out_dim(), std::move(padded)), f);
  ComplexMatrix w = u.adjoint().leftCols(g);

  const ComplexMatrix lifted = kron(ComplexMatrix::Identity(e.out_dim(), e.out_dim()), w);
  const double residual = sup_distance(lifted * te.t().mat(), tf.t().mat());
  if (residual > tol::kComposed || !is_isometry(w)) {
    std::ostringstream msg;
    msg << "mediator identity residual " << residual;
    throw Error(ErrorKind::NumericalFailure, msg.str());
  }
  return w;
}

KrausChannel rescale_to_cptn(Eigen::Index in_dim, Eigen::Index out_dim,
                             std::vector<ComplexMatrix> kraus, double slack) {
  KrausChannel raw(in_dim, out_dim, std::move(kraus));
  const double s = in_dim == 0 ? 0.0 : max_eigenvalue(kraus_gram(raw));
  if (s <= 0.0) return raw;
  const double scale = 1.0 / std::sqrt(s * (1.0 + slack));
  std::vector<ComplexMatrix> ops = raw.kraus();
  for (auto& m : ops) m *= scale;
  return KrausChannel(in_dim, out_dim, std::move(ops));
}

KrausChannel random_cptn(Eigen::Index in_dim, Eigen::Index out_dim, std::size_t kraus_rank,
                         std::uint64_t seed) {
  Rng rng(seed);
  std::vector<ComplexMatrix> ops;
  ops.reserve(kraus_rank);
  for (std::size_t i = 0; i < kraus_rank; ++i) {
    ops.push_back(random_gaussian_matrix(rng, out_dim, in_dim));
  }
  const double slack = rng.uniform();
  return rescale_to_cptn(in_dim, out_dim, std::move(ops), slack);
}

}  // namespace qtower
