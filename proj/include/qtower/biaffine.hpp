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

#include "qtower/hilbtower.hpp"

namespace qtower {

/// Representative [H, f, G] of a morphism A -> B in the biaffine completion
/// of Unitary: a unitary f : A + H -> B + G. Input ancilla H and output
/// ancilla G are hidden summands.
class BiaffineMor {
 public:
  /// Throws ShapeMismatch on size disagreement, LevelViolation when `mat`
  /// is not unitary.
  BiaffineMor(Obj dom, Obj cod, Obj in_anc, Obj out_anc, ComplexMatrix mat);

  const Obj& dom() const { return dom_; }
  const Obj& cod() const { return cod_; }
  const Obj& in_anc() const { return in_anc_; }
  const Obj& out_anc() const { return out_anc_; }
  const ComplexMatrix& mat() const { return mat_; }

 private:
  Obj dom_;
  Obj cod_;
  Obj in_anc_;
  Obj out_anc_;
  ComplexMatrix mat_;
};

/// [O, u, O].
BiaffineMor lift_unitary(const TowerMor& u);

/// A -> O -> B, represented by the symmetry A + B -> B + A with H = B, G = A.
BiaffineMor zero_mor(const Obj& a, const Obj& b);

BiaffineMor identity_biaffine(const Obj& a);

/// f then g; ancillas become H + H' on input and G' + G on output.
BiaffineMor compose_biaffine(const BiaffineMor& f, const BiaffineMor& g);

/// [H, f, G]^dagger = [G, f^dagger, H].
BiaffineMor dagger_biaffine(const BiaffineMor& f);

/// Top-left dim(B) x dim(A) block. Always a contraction.
TowerMor corner(const BiaffineMor& f);

/// Julia operator [[T, (1 - T T^dagger)^1/2], [(1 - T^dagger T)^1/2, -T^dagger]]
/// as a unitary A + B -> B + A. Throws NotContraction.
BiaffineMor halmos_dilate(const TowerMor& t);

/// Two one-sided steps: the isometric dilation (T ; (1 - T^dagger T)^1/2)
/// hides an output summand, then isometry_to_unitary hides an input summand.
BiaffineMor isometric_route_dilate(const TowerMor& t);

/// Equal corners to 1e-8. Throws ObjectMismatch when dom/cod differ.
bool equiv_biaffine(const BiaffineMor& f, const BiaffineMor& g);

enum class MonoidalOp { Oplus, Otimes };

/// Monoidal product of representatives; corner(f op g) = corner(f) op corner(g).
BiaffineMor monoidal_biaffine(MonoidalOp op, const BiaffineMor& f, const BiaffineMor& g);

}  // namespace qtower
