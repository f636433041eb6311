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

#include "qtower/biaffine.hpp"

#include <sstream>

namespace qtower {

BiaffineMor::BiaffineMor(Obj dom, Obj cod, Obj in_anc, Obj out_anc, ComplexMatrix mat)
    : dom_(std::move(dom)),
      cod_(std::move(cod)),
      in_anc_(std::move(in_anc)),
      out_anc_(std::move(out_anc)),
      mat_(std::move(mat)) {
  if (mat_.cols() != dom_.size() + in_anc_.size() || mat_.rows() != cod_.size() + out_anc_.size()) {
    std::ostringstream msg;
    msg << "representative is " << mat_.rows() << "x" << mat_.cols() << " but "
        << to_string(dom_ + in_anc_) << " -> " << to_string(cod_ + out_anc_) << " needs "
        << cod_.size() + out_anc_.size() << "x" << dom_.size() + in_anc_.size();
    throw Error(ErrorKind::ShapeMismatch, msg.str());
  }
  if (!is_unitary(mat_)) {
    throw Error(ErrorKind::LevelViolation, "biaffine representative must be unitary");
  }
}

BiaffineMor lift_unitary(const TowerMor& u) {
  if (u.level() != Level::Unitary) {
    throw Error(ErrorKind::LevelViolation, "lift_unitary needs a unitary");
  }
  return BiaffineMor(u.dom(), u.cod(), Obj::zero(), Obj::zero(), u.mat());
}

BiaffineMor zero_mor(const Obj& a, const Obj& b) {
  return BiaffineMor(a, b, b, a, structural_matrix(Structural::SwapPlus, {a, b}));
}

BiaffineMor identity_biaffine(const Obj& a) {
  return BiaffineMor(a, a, Obj::zero(), Obj::zero(), identity(a));
}

BiaffineMor compose_biaffine(const BiaffineMor& f, const BiaffineMor& g) {
  if (!(f.cod() == g.dom())) {
    throw Error(ErrorKind::ObjectMismatch,
                "cannot compose through " + to_string(f.cod()) + " vs " + to_string(g.dom()));
  }
  using S = Structural;
  const Obj& a = f.dom();
  const Obj& b = f.cod();
  const Obj& c = g.cod();
  const Obj& h = f.in_anc();
  const Obj& gg = f.out_anc();
  const Obj& h2 = g.in_anc();
  const Obj& g2 = g.out_anc();

  // A+(H+H') -> (A+H)+H' -> (B+G)+H' -> (B+H')+G -> (C+G')+G -> C+(G'+G)
  const ComplexMatrix s1 = structural_matrix(S::AssocPlus, {a, h, h2}, true);
  const ComplexMatrix s2 = direct_sum(f.mat(), identity(h2));
  const ComplexMatrix s3 = structural_matrix(S::AssocPlus, {b, h2, gg}, true) *
                           direct_sum(identity(b), structural_matrix(S::SwapPlus, {gg, h2})) *
                           structural_matrix(S::AssocPlus, {b, gg, h2});
  const ComplexMatrix s4 = direct_sum(g.mat(), identity(gg));
  const ComplexMatrix s5 = structural_matrix(S::AssocPlus, {c, g2, gg});
  return BiaffineMor(a, c, h + h2, g2 + gg, s5 * s4 * s3 * s2 * s1);
}

BiaffineMor dagger_biaffine(const BiaffineMor& f) {
  return BiaffineMor(f.cod(), f.dom(), f.out_anc(), f.in_anc(), f.mat().adjoint());
}

TowerMor corner(const BiaffineMor& f) {
  return validate_morphism(f.dom(), f.cod(), f.mat().topLeftCorner(f.cod().size(), f.dom().size()),
                           Level::Contraction);
}

namespace {

// (1 - T^dagger T)^(1/2). Eigenvalues under the rounding floor count as zero,
// otherwise an exact isometry picks up square roots of noise (~1e-8).
ComplexMatrix defect_root(const ComplexMatrix& m) {
  const Eigen::Index n = m.cols();
  ComplexMatrix h = ComplexMatrix::Identity(n, n) - m.adjoint() * m;
  h = (h + h.adjoint()).eval() / 2.0;
  const HermitianEig eig = hermitian_eig(h);
  RealVector roots(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lambda = eig.eigenvalues(i);
    roots(i) = lambda <= 1e-14 ? 0.0 : std::sqrt(lambda);
  }
  return eig.eigenvectors * roots.cast<Complex>().asDiagonal() * eig.eigenvectors.adjoint();
}

}  // namespace

BiaffineMor halmos_dilate(const TowerMor& t) {
  const ComplexMatrix& m = t.mat();
  if (!is_contraction(m)) {
    throw Error(ErrorKind::NotContraction, "halmos_dilate needs T^dagger T <= 1");
  }
  const Eigen::Index na = m.cols();
  const Eigen::Index nb = m.rows();
  const ComplexMatrix defect_in = defect_root(m);
  // (1 - T T^dagger)^(1/2) = 1 - T (1 + D)^(-1) T^dagger with D = (1 - T^dagger T)^(1/2).
  // Reusing D keeps T D = D' T exact; two separate roots disagree near singular value 1.
  const ComplexMatrix shift = ComplexMatrix::Identity(na, na) + defect_in;
  ComplexMatrix defect_out =
      ComplexMatrix::Identity(nb, nb) - m * shift.llt().solve(ComplexMatrix(m.adjoint()));
  defect_out = (defect_out + defect_out.adjoint()).eval() / 2.0;

  ComplexMatrix u(nb + na, na + nb);
  u.topLeftCorner(nb, na) = m;
  u.topRightCorner(nb, nb) = defect_out;
  u.bottomLeftCorner(na, na) = defect_in;
  u.bottomRightCorner(na, nb) = -m.adjoint();
  return BiaffineMor(t.dom(), t.cod(), t.cod(), t.dom(), std::move(u));
}

BiaffineMor isometric_route_dilate(const TowerMor& t) {
  const ComplexMatrix& m = t.mat();
  if (!is_contraction(m)) {
    throw Error(ErrorKind::NotContraction, "isometric_route_dilate needs T^dagger T <= 1");
  }
  const Eigen::Index na = m.cols();
  ComplexMatrix column(m.rows() + na, na);
  column.topRows(m.rows()) = m;
  column.bottomRows(na) = defect_root(m);

  const TowerMor iso = validate_morphism(t.dom(), t.cod() + t.dom(), std::move(column),
                                         Level::Isometry);
  const TowerMor unitary = isometry_to_unitary(iso);
  const Obj in_anc = Obj::of_dim(unitary.dom().size() - t.dom().size());
  return BiaffineMor(t.dom(), t.cod(), in_anc, t.dom(), unitary.mat());
}

bool equiv_biaffine(const BiaffineMor& f, const BiaffineMor& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) {
    throw Error(ErrorKind::ObjectMismatch, "equivalence needs matching dom and cod");
  }
  const auto nb = f.cod().size();
  const auto na = f.dom().size();
  return sup_distance(f.mat().topLeftCorner(nb, na), g.mat().topLeftCorner(nb, na)) <=
         tol::kComposed;
}

namespace {

// (X+Y)*(X'+Y') -> X*X' + ((X*Y' + Y*X') + Y*Y')
ComplexMatrix expand_product(const Obj& x, const Obj& y, const Obj& x2, const Obj& y2) {
  using S = Structural;
  const Obj p = x * x2;
  const Obj q = x * y2;
  const Obj r = y * x2;
  const Obj s = y * y2;
  const ComplexMatrix s1 = structural_matrix(S::DistR, {x, y, x2 + y2});
  const ComplexMatrix s2 = direct_sum(structural_matrix(S::DistL, {x, x2, y2}),
                                      structural_matrix(S::DistL, {y, x2, y2}));
  const ComplexMatrix s3 = structural_matrix(S::AssocPlus, {p, q, r + s});
  const ComplexMatrix s4 = direct_sum(identity(p), structural_matrix(S::AssocPlus, {q, r, s}, true));
  return s4 * s3 * s2 * s1;
}

}  // namespace

BiaffineMor monoidal_biaffine(MonoidalOp op, const BiaffineMor& f, const BiaffineMor& g) {
  const Obj& a = f.dom();
  const Obj& h = f.in_anc();
  const Obj& b = f.cod();
  const Obj& gg = f.out_anc();
  const Obj& a2 = g.dom();
  const Obj& h2 = g.in_anc();
  const Obj& b2 = g.cod();
  const Obj& g2 = g.out_anc();

  if (op == MonoidalOp::Oplus) {
    const ComplexMatrix shuffle_in = oplus_interchange(a, a2, h, h2);
    const ComplexMatrix shuffle_out = oplus_interchange(b, gg, b2, g2);
    return BiaffineMor(a + a2, b + b2, h + h2, gg + g2,
                       shuffle_out * direct_sum(f.mat(), g.mat()) * shuffle_in);
  }
  const ComplexMatrix expand_in = expand_product(a, h, a2, h2);
  const ComplexMatrix expand_out = expand_product(b, gg, b2, g2);
  return BiaffineMor(a * a2, b * b2, (a * h2 + h * a2) + h * h2, (b * g2 + gg * b2) + gg * g2,
                     expand_out * kron(f.mat(), g.mat()) * expand_in.adjoint());
}

}  // namespace qtower
