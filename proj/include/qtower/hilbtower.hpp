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

#include "qtower/linalg.hpp"
#include "qtower/rigstruct.hpp"

namespace qtower {

/// Base categories of the tower, ordered Unitary <= {Isometry, Coisometry} <= Contraction.
enum class Level { Unitary, Isometry, Coisometry, Contraction };

const char* to_string(Level l);

/// Least level containing both arguments.
Level join(Level a, Level b);
bool level_admits(Level level, OperatorClass c);

/// A linear map dom -> cod validated against its claimed level.
class TowerMor {
 public:
  const Obj& dom() const { return dom_; }
  const Obj& cod() const { return cod_; }
  const ComplexMatrix& mat() const { return mat_; }
  Level level() const { return level_; }

  friend TowerMor validate_morphism(Obj dom, Obj cod, ComplexMatrix mat, Level level);

 private:
  TowerMor(Obj dom, Obj cod, ComplexMatrix mat, Level level)
      : dom_(std::move(dom)), cod_(std::move(cod)), mat_(std::move(mat)), level_(level) {}

  Obj dom_;
  Obj cod_;
  ComplexMatrix mat_;
  Level level_;
};

/// Throws ShapeMismatch when the matrix does not fit dom/cod, LevelViolation
/// when classify_operator rules the claimed level out.
TowerMor validate_morphism(Obj dom, Obj cod, ComplexMatrix mat, Level level);

/// g after f, at the join of their levels.
TowerMor compose(const TowerMor& f, const TowerMor& g);
TowerMor dagger(const TowerMor& f);
TowerMor oplus(const TowerMor& f, const TowerMor& g);
TowerMor otimes(const TowerMor& f, const TowerMor& g);

/// Leading `split` columns of a unitary A+E -> B: an isometry A -> B.
TowerMor unitary_corner_to_isometry(const TowerMor& u, Eigen::Index split);

/// Unitary A + C -> B whose leading columns restrict to the isometry v.
TowerMor isometry_to_unitary(const TowerMor& v);

}  // namespace qtower
