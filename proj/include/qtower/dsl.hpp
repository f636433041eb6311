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

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qtower/biaffine.hpp"
#include "qtower/cstarsplit.hpp"
#include "qtower/lotimes.hpp"

namespace qtower::dsl {

/// Semantic levels, ordered: unitary < contraction (biaffine) < CPTN
/// (dilation) < split (C*).
enum class SemLevel { U = 0, C = 1, Q = 2, S = 3 };

const char* to_string(SemLevel l);
/// Accepts U, C, Q, S. Throws SyntaxError otherwise.
SemLevel parse_level(std::string_view text);

struct SourceLoc {
  int line = 1;
  int column = 1;
};

class Expr;

struct GateAtom {
  std::string name;
};
struct MatrixAtom {
  ComplexMatrix mat;
};
struct StructuralAtom {
  StructuralName name;
  std::vector<Obj> args;
};
struct DiscardAtom {
  Obj obj;
};
struct MeasureAtom {
  Partition partition;
};
struct ZeroAtom {
  Obj dom;
  Obj cod;
};

enum class BinaryOp { Seq, Plus, Times };

struct BinaryNode {
  BinaryOp op;
  std::shared_ptr<const Expr> lhs;
  std::shared_ptr<const Expr> rhs;
};
struct DaggerNode {
  std::shared_ptr<const Expr> inner;
};

/// Morphism expression AST. Immutable; children are shared.
class Expr {
 public:
  using Node = std::variant<GateAtom, MatrixAtom, StructuralAtom, DiscardAtom, MeasureAtom,
                            ZeroAtom, BinaryNode, DaggerNode>;

  Expr(Node node, SourceLoc loc = {}) : node_(std::move(node)), loc_(loc) {}

  const Node& node() const { return node_; }
  SourceLoc loc() const { return loc_; }

 private:
  Node node_;
  SourceLoc loc_;
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr gate(std::string name);
ExprPtr matrix_lit(ComplexMatrix m);
ExprPtr structural(StructuralName name, std::vector<Obj> args);
ExprPtr discard_expr(Obj a);
ExprPtr measure_expr(Partition p);
ExprPtr zero_expr(Obj dom, Obj cod);
ExprPtr seq(ExprPtr l, ExprPtr r);
ExprPtr plus(ExprPtr l, ExprPtr r);
ExprPtr times(ExprPtr l, ExprPtr r);
ExprPtr dagger_expr(ExprPtr e);

/// Structural equality; source locations are ignored.
bool same_ast(const Expr& a, const Expr& b);

/// Throws SyntaxError with line:column of the offending token.
ExprPtr parse(std::string_view text);

/// Inverse of parse, with the minimum parentheses needed.
std::string print(const Expr& e);

struct TypedExpr {
  ExprPtr expr;
  Obj dom;
  Obj cod;
  SemLevel min_level;
};

/// Built-in gate names: H X Y Z S T CX.
bool is_gate_name(std::string_view name);
ComplexMatrix gate_matrix(std::string_view name);

/// Throws TypeMismatch (sequencing boundary objects differ) or LevelError
/// (a construct used above or below where it exists).
TypedExpr typecheck(const ExprPtr& e);

struct Value {
  SemLevel level;
  std::variant<ComplexMatrix, BiaffineMor, KrausChannel, SplitMor> value;

  const ComplexMatrix& unitary() const { return std::get<ComplexMatrix>(value); }
  const BiaffineMor& biaffine() const { return std::get<BiaffineMor>(value); }
  const KrausChannel& channel() const { return std::get<KrausChannel>(value); }
  const SplitMor& split() const { return std::get<SplitMor>(value); }
};

/// Throws LevelTooLow when `at` is below the expression's minimum level.
Value evaluate(const TypedExpr& e, SemLevel at);

/// The L-tensor representative behind level-Q evaluation.
DilationMor evaluate_dilation(const TypedExpr& e);

/// Quotient equality at `at`. Throws ObjectMismatch or LevelTooLow.
bool equal_at_level(const TypedExpr& a, const TypedExpr& b, SemLevel at);

}  // namespace qtower::dsl
