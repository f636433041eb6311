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

#include "qtower/hilbtower.hpp"

#include <sstream>

namespace qtower {

const char* to_string(Level l) {
  switch (l) {
    case Level::Unitary: return "Unitary";
    case Level::Isometry: return "Isometry";
    case Level::Coisometry: return "Coisometry";
    case Level::Contraction: return "Contraction";
  }
  return "?";
}

Level join(Level a, Level b) {
  if (a == b) return a;
  if (a == Level::Unitary) return b;
  if (b == Level::Unitary) return a;
  return Level::Contraction;
}

bool level_admits(Level level, OperatorClass c) {
  switch (c) {
    case OperatorClass::Unitary: return true;
    case OperatorClass::Isometry: return level == Level::Isometry || level == Level::Contraction;
    case OperatorClass::Coisometry:
      return level == Level::Coisometry || level == Level::Contraction;
    case OperatorClass::StrictContractionClass: return level == Level::Contraction;
    case OperatorClass::None: return false;
  }
  return false;
}

TowerMor validate_morphism(Obj dom, Obj cod, ComplexMatrix mat, Level level) {
  if (mat.rows() != cod.size() || mat.cols() != dom.size()) {
    std::ostringstream msg;
    msg << "matrix is " << mat.rows() << "x" << mat.cols() << " but " << to_string(dom)
        << " -> " << to_string(cod) << " needs " << cod.size() << "x" << dom.size();
    throw Error(ErrorKind::ShapeMismatch, msg.str());
  }
  if (!all_finite(mat)) throw Error(ErrorKind::ShapeMismatch, "matrix has non-finite entries");
  const OperatorClass c = classify_operator(mat);
  if (!level_admits(level, c)) {
    std::ostringstream msg;
    msg << "operator classifies as " << to_string(c) << ", not admissible at level "
        << to_string(level);
    throw Error(ErrorKind::LevelViolation, msg.str());
  }
  return TowerMor(std::move(dom), std::move(cod), std::move(mat), level);
}

TowerMor compose(const TowerMor& f, const TowerMor& g) {
  if (!(f.cod() == g.dom())) {
    throw Error(ErrorKind::ObjectMismatch,
                "cannot compose through " + to_string(f.cod()) + " vs " + to_string(g.dom()));
  }
  return validate_morphism(f.dom(), g.cod(), g.mat() * f.mat(), join(f.level(), g.level()));
}

TowerMor dagger(const TowerMor& f) {
  Level l = f.level();
  if (l == Level::Isometry) {
    l = Level::Coisometry;
  } else if (l == Level::Coisometry) {
    l = Level::Isometry;
  }
  return validate_morphism(f.cod(), f.dom(), f.mat().adjoint(), l);
}

TowerMor oplus(const TowerMor& f, const TowerMor& g) {
  return validate_morphism(f.dom() + g.dom(), f.cod() + g.cod(), direct_sum(f.mat(), g.mat()),
                           join(f.level(), g.level()));
}

TowerMor otimes(const TowerMor& f, const TowerMor& g) {
  return validate_morphism(f.dom() * g.dom(), f.cod() * g.cod(), kron(f.mat(), g.mat()),
                           join(f.level(), g.level()));
}

TowerMor unitary_corner_to_isometry(const TowerMor& u, Eigen::Index split) {
  if (u.level() != Level::Unitary) {
    throw Error(ErrorKind::LevelViolation, "corner restriction needs a unitary");
  }
  if (split < 0 || split > u.dom().size()) {
    std::ostringstream msg;
    msg << "split " << split << " outside [0, " << u.dom().size() << "]";
    throw Error(ErrorKind::SplitOutOfRange, msg.str());
  }
  const bool keeps_summand = u.dom().kind() == Obj::Kind::Oplus && u.dom().left().size() == split;
  Obj dom = split == u.dom().size() ? u.dom()
            : keeps_summand         ? u.dom().left()
                                    : Obj::of_dim(split);
  return validate_morphism(std::move(dom), u.cod(), u.mat().leftCols(split), Level::Isometry);
}

TowerMor isometry_to_unitary(const TowerMor& v) {
  if (!is_isometry(v.mat())) {
    throw Error(ErrorKind::NotIsometry, "isometry_to_unitary needs v^dagger v = I");
  }
  const Eigen::Index extra = v.cod().size() - v.dom().size();
  ComplexMatrix u = complete_isometry(v.mat());
  Obj dom = extra == 0 ? v.dom() : v.dom() + Obj::of_dim(extra);
  return validate_morphism(std::move(dom), v.cod(), std::move(u), Level::Unitary);
}

}  // namespace qtower
