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

#include "qtower/channels.hpp"

namespace qtower {

/// Representative [f, G] of a morphism A -> B of the partial multiplicative
/// affine completion of Contraction: a contraction f : A -> B (x) G whose
/// factor G is hidden.
class DilationMor {
 public:
  /// Throws ShapeMismatch unless f : dom -> cod * anc, NotContraction if
  /// f is not contractive.
  DilationMor(Obj dom, Obj cod, Obj anc, ComplexMatrix f);

  const Obj& dom() const { return dom_; }
  const Obj& cod() const { return cod_; }
  const Obj& anc() const { return anc_; }
  const TowerMor& f() const { return f_; }

 private:
  Obj dom_;
  Obj cod_;
  Obj anc_;
  TowerMor f_;
};

/// [rho^-1 . t, I].
DilationMor lift_contraction(const TowerMor& t);

DilationMor identity_dilation(const Obj& a);

/// [alpha . (g (x) id_G) . f, G' (x) G].
DilationMor compose_dilation(const DilationMor& f, const DilationMor& g);

/// [f, G] (x) [g, G'] = [shuffle . (f (x) g), G (x) G'].
DilationMor tensor_dilation(const DilationMor& f, const DilationMor& g);

/// [lambda^-1, A] : A -> I.
DilationMor discard(const Obj& a);

enum class Factor { First, Second };

/// First: [id, B] : A (x) B -> A. Second: [sigma, A] : A (x) B -> B.
DilationMor projection(Factor which, const Obj& a, const Obj& b);

StinespringRep as_stinespring(const DilationMor& f);
DilationMor from_stinespring(const StinespringRep& s, const Obj& dom, const Obj& cod);

/// rho -> tr_G(f rho f^dagger).
KrausChannel to_channel(const DilationMor& f);

/// Channel equality of the induced maps. Throws ObjectMismatch.
bool equiv_dilation(const DilationMor& f, const DilationMor& g);

struct Factorization {
  TowerMor pure;  // contraction A -> B (x) E
  Obj anc;        // E
};

/// f = pi_1 . lift(pure).
Factorization factorize(const DilationMor& f);

/// Recomposes a factorization into pi_1 . lift(pure).
DilationMor recompose(const Factorization& fac, const Obj& cod);

/// The canonical injection A -> (A + B) (x) I (First) or B -> (A + B) (x) I.
DilationMor injection(Factor which, const Obj& a, const Obj& b);

/// delta_L^-1 . (f + g) : A + B -> C (x) (G + G'). The candidate cotupling of
/// two dilations with a common codomain.
DilationMor cotuple_candidate(const DilationMor& f, const DilationMor& g);

}  // namespace qtower
