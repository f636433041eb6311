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

#include "qtower/lotimes.hpp"

namespace qtower {

namespace {

TowerMor checked_contraction(const Obj& dom, const Obj& cod, ComplexMatrix f) {
  if (f.rows() == cod.size() && f.cols() == dom.size() && !is_contraction(f)) {
    throw Error(ErrorKind::NotContraction, "dilation matrix has norm above 1");
  }
  return validate_morphism(dom, cod, std::move(f), Level::Contraction);
}

}  // namespace

DilationMor::DilationMor(Obj dom, Obj cod, Obj anc, ComplexMatrix f)
    : dom_(dom), cod_(cod), anc_(anc), f_(checked_contraction(dom, cod * anc, std::move(f))) {}

DilationMor lift_contraction(const TowerMor& t) {
  const ComplexMatrix unitor_inv = structural_matrix(Structural::UnitRTimes, {t.cod()}, true);
  return DilationMor(t.dom(), t.cod(), Obj::unit(), unitor_inv * t.mat());
}

DilationMor identity_dilation(const Obj& a) {
  return DilationMor(a, a, Obj::unit(), structural_matrix(Structural::UnitRTimes, {a}, true));
}

DilationMor compose_dilation(const DilationMor& f, const DilationMor& g) {
  if (!(f.cod() == g.dom())) {
    throw Error(ErrorKind::ObjectMismatch,
                "cannot compose through " + to_string(f.cod()) + " vs " + to_string(g.dom()));
  }
  // A -> B*G -> (C*G')*G -> C*(G'*G)
  const ComplexMatrix assoc =
      structural_matrix(Structural::AssocTimes, {g.cod(), g.anc(), f.anc()});
  ComplexMatrix m = assoc * kron(g.f().mat(), identity(f.anc())) * f.f().mat();
  return DilationMor(f.dom(), g.cod(), g.anc() * f.anc(), std::move(m));
}

DilationMor tensor_dilation(const DilationMor& f, const DilationMor& g) {
  const ComplexMatrix shuffle = otimes_interchange(f.cod(), f.anc(), g.cod(), g.anc());
  return DilationMor(f.dom() * g.dom(), f.cod() * g.cod(), f.anc() * g.anc(),
                     shuffle * kron(f.f().mat(), g.f().mat()));
}

DilationMor discard(const Obj& a) {
  return DilationMor(a, Obj::unit(), a, structural_matrix(Structural::UnitLTimes, {a}, true));
}

DilationMor projection(Factor which, const Obj& a, const Obj& b) {
  if (which == Factor::First) return DilationMor(a * b, a, b, identity(a * b));
  return DilationMor(a * b, b, a, structural_matrix(Structural::SwapTimes, {a, b}));
}

StinespringRep as_stinespring(const DilationMor& f) { return StinespringRep(f.f(), f.anc()); }

DilationMor from_stinespring(const StinespringRep& s, const Obj& dom, const Obj& cod) {
  return DilationMor(dom, cod, s.anc(), s.t().mat());
}

KrausChannel to_channel(const DilationMor& f) {
  return channel_from_stinespring(as_stinespring(f));
}

bool equiv_dilation(const DilationMor& f, const DilationMor& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) {
    throw Error(ErrorKind::ObjectMismatch, "equivalence needs matching dom and cod");
  }
  return channel_equal(to_channel(f), to_channel(g));
}

Factorization factorize(const DilationMor& f) { return {f.f(), f.anc()}; }

DilationMor recompose(const Factorization& fac, const Obj& cod) {
  return compose_dilation(lift_contraction(fac.pure), projection(Factor::First, cod, fac.anc));
}

DilationMor injection(Factor which, const Obj& a, const Obj& b) {
  const Obj sum = a + b;
  const Obj& src = which == Factor::First ? a : b;
  ComplexMatrix inj = ComplexMatrix::Zero(sum.size(), src.size());
  const Eigen::Index offset = which == Factor::First ? 0 : a.size();
  inj.block(offset, 0, src.size(), src.size()).setIdentity();
  return lift_contraction(validate_morphism(src, sum, std::move(inj), Level::Isometry));
}

DilationMor cotuple_candidate(const DilationMor& f, const DilationMor& g) {
  if (!(f.cod() == g.cod())) {
    throw Error(ErrorKind::ObjectMismatch, "cotupling needs a common codomain");
  }
  const ComplexMatrix dist_inv =
      structural_matrix(Structural::DistL, {f.cod(), f.anc(), g.anc()}, true);
  return DilationMor(f.dom() + g.dom(), f.cod(), f.anc() + g.anc(),
                     dist_inv * direct_sum(f.f().mat(), g.f().mat()));
}

}  // namespace qtower
