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

#include "qtower/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qtower/json_io.hpp"

namespace qtower::dsl {

const char* to_string(SemLevel l) {
  switch (l) {
    case SemLevel::U: return "U";
    case SemLevel::C: return "C";
    case SemLevel::Q: return "Q";
    case SemLevel::S: return "S";
  }
  return "?";
}

SemLevel parse_level(std::string_view text) {
  if (text == "U") return SemLevel::U;
  if (text == "C") return SemLevel::C;
  if (text == "Q") return SemLevel::Q;
  if (text == "S") return SemLevel::S;
  throw Error(ErrorKind::SyntaxError, "unknown level '" + std::string(text) + "'");
}

ExprPtr gate(std::string name) { return std::make_shared<const Expr>(GateAtom{std::move(name)}); }
ExprPtr matrix_lit(ComplexMatrix m) { return std::make_shared<const Expr>(MatrixAtom{std::move(m)}); }
ExprPtr structural(StructuralName name, std::vector<Obj> args) {
  return std::make_shared<const Expr>(StructuralAtom{name, std::move(args)});
}
ExprPtr discard_expr(Obj a) { return std::make_shared<const Expr>(DiscardAtom{std::move(a)}); }
ExprPtr measure_expr(Partition p) { return std::make_shared<const Expr>(MeasureAtom{std::move(p)}); }
ExprPtr zero_expr(Obj dom, Obj cod) {
  return std::make_shared<const Expr>(ZeroAtom{std::move(dom), std::move(cod)});
}
ExprPtr seq(ExprPtr l, ExprPtr r) {
  return std::make_shared<const Expr>(BinaryNode{BinaryOp::Seq, std::move(l), std::move(r)});
}
ExprPtr plus(ExprPtr l, ExprPtr r) {
  return std::make_shared<const Expr>(BinaryNode{BinaryOp::Plus, std::move(l), std::move(r)});
}
ExprPtr times(ExprPtr l, ExprPtr r) {
  return std::make_shared<const Expr>(BinaryNode{BinaryOp::Times, std::move(l), std::move(r)});
}
ExprPtr dagger_expr(ExprPtr e) { return std::make_shared<const Expr>(DaggerNode{std::move(e)}); }

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool same_objs(const std::vector<Obj>& a, const std::vector<Obj>& b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
}

}  // namespace

bool same_ast(const Expr& a, const Expr& b) {
  if (a.node().index() != b.node().index()) return false;
  return std::visit(
      overloaded{
          [&](const GateAtom& x) { return x.name == std::get<GateAtom>(b.node()).name; },
          [&](const MatrixAtom& x) {
            const auto& y = std::get<MatrixAtom>(b.node());
            return x.mat.rows() == y.mat.rows() && x.mat.cols() == y.mat.cols() && x.mat == y.mat;
          },
          [&](const StructuralAtom& x) {
            const auto& y = std::get<StructuralAtom>(b.node());
            return x.name == y.name && same_objs(x.args, y.args);
          },
          [&](const DiscardAtom& x) { return x.obj == std::get<DiscardAtom>(b.node()).obj; },
          [&](const MeasureAtom& x) {
            return x.partition == std::get<MeasureAtom>(b.node()).partition;
          },
          [&](const ZeroAtom& x) {
            const auto& y = std::get<ZeroAtom>(b.node());
            return x.dom == y.dom && x.cod == y.cod;
          },
          [&](const BinaryNode& x) {
            const auto& y = std::get<BinaryNode>(b.node());
            return x.op == y.op && same_ast(*x.lhs, *y.lhs) && same_ast(*x.rhs, *y.rhs);
          },
          [&](const DaggerNode& x) {
            return same_ast(*x.inner, *std::get<DaggerNode>(b.node()).inner);
          },
      },
      a.node());
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse_program() {
    ExprPtr e = parse_seq();
    skip_ws();
    if (!at_end()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  ExprPtr parse_seq() {
    ExprPtr acc = parse_sum();
    while (peek() == ';') {
      const SourceLoc loc = here();
      ++pos_;
      acc = located(BinaryNode{BinaryOp::Seq, acc, parse_sum()}, loc);
    }
    return acc;
  }

  ExprPtr parse_sum() {
    ExprPtr acc = parse_product();
    while (peek() == '+') {
      const SourceLoc loc = here();
      ++pos_;
      acc = located(BinaryNode{BinaryOp::Plus, acc, parse_product()}, loc);
    }
    return acc;
  }

  ExprPtr parse_product() {
    ExprPtr acc = parse_atom();
    while (peek() == '*') {
      const SourceLoc loc = here();
      ++pos_;
      acc = located(BinaryNode{BinaryOp::Times, acc, parse_atom()}, loc);
    }
    return acc;
  }

  ExprPtr parse_atom() {
    const char c = peek();
    const SourceLoc loc = here();
    if (c == '(') {
      ++pos_;
      ExprPtr inner = parse_seq();
      expect(')');
      return inner;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      fail(at_end() ? "expected a morphism, found end of input" : "expected a morphism");
    }
    const std::string ident = identifier();

    if (ident == "U" && peek_raw() == '[') {
      ++pos_;
      const ComplexMatrix m = json_matrix();
      expect(']');
      return located(MatrixAtom{m}, loc);
    }
    if (ident == "dagger") {
      expect('(');
      ExprPtr inner = parse_seq();
      expect(')');
      return located(DaggerNode{inner}, loc);
    }
    if (ident == "discard") {
      expect('(');
      Obj a = object_arg();
      expect(')');
      return located(DiscardAtom{a}, loc);
    }
    if (ident == "zero") {
      expect('(');
      Obj a = object_arg();
      expect(',');
      Obj b = object_arg();
      expect(')');
      return located(ZeroAtom{a, b}, loc);
    }
    if (ident == "measure") {
      expect('(');
      expect('[');
      Partition p;
      if (peek() != ']') {
        p.blocks.push_back(natural());
        while (peek() == ',') {
          ++pos_;
          p.blocks.push_back(natural());
        }
      }
      expect(']');
      expect(')');
      try {
        p.validate();
      } catch (const Error& e) {
        fail_at(loc, e.what());
      }
      return located(MeasureAtom{p}, loc);
    }
    StructuralName sname{};
    if (parse_structural_name(ident, sname)) {
      expect('(');
      std::vector<Obj> args;
      if (peek() != ')') {
        args.push_back(object_arg());
        while (peek() == ',') {
          ++pos_;
          args.push_back(object_arg());
        }
      }
      expect(')');
      return located(StructuralAtom{sname, args}, loc);
    }
    if (is_gate_name(ident)) return located(GateAtom{ident}, loc);
    fail_at(loc, "unknown name '" + ident + "'");
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (!at_end() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Eigen::Index natural() {
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a natural number");
    }
    Eigen::Index n = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      n = n * 10 + (text_[pos_++] - '0');
      if (n > 1'000'000) fail("number too large");
    }
    return n;
  }

  // An object argument runs to the next ',' or ')' at parenthesis depth 0.
  Obj object_arg() {
    skip_ws();
    const SourceLoc loc = here();
    const std::size_t start = pos_;
    int depth = 0;
    while (!at_end()) {
      const char c = text_[pos_];
      if (c == '(') ++depth;
      if (c == ')') {
        if (depth == 0) break;
        --depth;
      }
      if (c == ',' && depth == 0) break;
      ++pos_;
    }
    try {
      return parse_obj(text_.substr(start, pos_ - start));
    } catch (const Error& e) {
      fail_at(loc, e.what());
    }
  }

  // A JSON object, found by brace matching outside string literals.
  ComplexMatrix json_matrix() {
    skip_ws();
    const SourceLoc loc = here();
    if (peek_raw() != '{') fail("expected a JSON matrix after 'U['");
    const std::size_t start = pos_;
    int depth = 0;
    bool in_string = false;
    for (; !at_end(); ++pos_) {
      const char c = text_[pos_];
      if (in_string) {
        if (c == '\\') ++pos_;
        else if (c == '"') in_string = false;
        continue;
      }
      if (c == '"') in_string = true;
      if (c == '{') ++depth;
      if (c == '}' && --depth == 0) {
        ++pos_;
        break;
      }
    }
    if (depth != 0) fail_at(loc, "unterminated JSON matrix");
    try {
      return matrix_from_json(parse_json(std::string(text_.substr(start, pos_ - start))));
    } catch (const Error& e) {
      fail_at(loc, e.what());
    }
  }

  void expect(char c) {
    if (peek() != c) {
      fail(std::string("expected '") + c + "'" +
           (at_end() ? std::string(", found end of input")
                     : std::string(", found '") + text_[pos_] + "'"));
    }
    ++pos_;
  }

  char peek() {
    skip_ws();
    return at_end() ? '\0' : text_[pos_];
  }
  char peek_raw() const { return at_end() ? '\0' : text_[pos_]; }
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        while (!at_end() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  SourceLoc here() const {
    SourceLoc loc;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++loc.line;
        loc.column = 1;
      } else {
        ++loc.column;
      }
    }
    return loc;
  }

  ExprPtr located(Expr::Node node, SourceLoc loc) {
    return std::make_shared<const Expr>(std::move(node), loc);
  }

  [[noreturn]] void fail(const std::string& what) {
    skip_ws();
    fail_at(here(), what);
  }

  [[noreturn]] void fail_at(SourceLoc loc, const std::string& what) {
    std::ostringstream msg;
    msg << "line " << loc.line << ", column " << loc.column << ": " << what;
    throw Error(ErrorKind::SyntaxError, msg.str());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::Seq: return 0;
    case BinaryOp::Plus: return 1;
    case BinaryOp::Times: return 2;
  }
  return 0;
}

const char* symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::Seq: return " ; ";
    case BinaryOp::Plus: return " + ";
    case BinaryOp::Times: return " * ";
  }
  return "?";
}

void print_expr(std::ostream& os, const Expr& e, int context) {
  std::visit(overloaded{
                 [&](const GateAtom& x) { os << x.name; },
                 [&](const MatrixAtom& x) { os << "U[" << matrix_to_json(x.mat).dump() << "]"; },
                 [&](const StructuralAtom& x) {
                   os << to_string(x.name) << '(';
                   for (std::size_t i = 0; i < x.args.size(); ++i) {
                     if (i > 0) os << ", ";
                     os << to_string(x.args[i]);
                   }
                   os << ')';
                 },
                 [&](const DiscardAtom& x) { os << "discard(" << to_string(x.obj) << ')'; },
                 [&](const MeasureAtom& x) {
                   os << "measure([";
                   for (std::size_t i = 0; i < x.partition.blocks.size(); ++i) {
                     if (i > 0) os << ", ";
                     os << x.partition.blocks[i];
                   }
                   os << "])";
                 },
                 [&](const ZeroAtom& x) {
                   os << "zero(" << to_string(x.dom) << ", " << to_string(x.cod) << ')';
                 },
                 [&](const BinaryNode& x) {
                   const int p = precedence(x.op);
                   const bool parens = context > p;
                   if (parens) os << '(';
                   print_expr(os, *x.lhs, p);
                   os << symbol(x.op);
                   print_expr(os, *x.rhs, p + 1);
                   if (parens) os << ')';
                 },
                 [&](const DaggerNode& x) {
                   os << "dagger(";
                   print_expr(os, *x.inner, 0);
                   os << ')';
                 },
             },
             e.node());
}

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).parse_program(); }

std::string print(const Expr& e) {
  std::ostringstream os;
  print_expr(os, e, 0);
  return os.str();
}

// ---------------------------------------------------------------------------
// Gates and typing

bool is_gate_name(std::string_view name) {
  return name == "H" || name == "X" || name == "Y" || name == "Z" || name == "S" || name == "T" ||
         name == "CX";
}

ComplexMatrix gate_matrix(std::string_view name) {
  const Complex i(0.0, 1.0);
  ComplexMatrix m(2, 2);
  if (name == "H") {
    const double r = 1.0 / std::sqrt(2.0);
    m << r, r, r, -r;
  } else if (name == "X") {
    m << 0, 1, 1, 0;
  } else if (name == "Y") {
    m << 0, -i, i, 0;
  } else if (name == "Z") {
    m << 1, 0, 0, -1;
  } else if (name == "S") {
    m << 1, 0, 0, i;
  } else if (name == "T") {
    m << 1, 0, 0, std::polar(1.0, std::numbers::pi / 4.0);
  } else if (name == "CX") {
    m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
  } else {
    throw Error(ErrorKind::SyntaxError, "unknown gate '" + std::string(name) + "'");
  }
  return m;
}

namespace {

Obj gate_object(std::string_view name) {
  return name == "CX" ? Obj::dim(2) * Obj::dim(2) : Obj::dim(2);
}

std::string where(const Expr& e) {
  std::ostringstream os;
  os << "line " << e.loc().line << ", column " << e.loc().column << ": ";
  return os.str();
}

}  // namespace

TypedExpr typecheck(const ExprPtr& e) {
  return std::visit(
      overloaded{
          [&](const GateAtom& x) -> TypedExpr {
            if (!is_gate_name(x.name)) {
              throw Error(ErrorKind::TypeMismatch, where(*e) + "unknown gate " + x.name);
            }
            const Obj o = gate_object(x.name);
            return {e, o, o, SemLevel::U};
          },
          [&](const MatrixAtom& x) -> TypedExpr {
            const OperatorClass c = classify_operator(x.mat);
            if (c == OperatorClass::None) {
              throw Error(ErrorKind::LevelError,
                          where(*e) + "matrix literal is not a contraction at any level");
            }
            return {e, Obj::of_dim(x.mat.cols()), Obj::of_dim(x.mat.rows()),
                    c == OperatorClass::Unitary ? SemLevel::U : SemLevel::C};
          },
          [&](const StructuralAtom& x) -> TypedExpr {
            const StructuralIso iso = structural_iso(x.name, x.args);
            return {e, iso.dom, iso.cod, SemLevel::U};
          },
          [&](const DiscardAtom& x) -> TypedExpr {
            return {e, x.obj, Obj::unit(), SemLevel::Q};
          },
          [&](const MeasureAtom& x) -> TypedExpr {
            x.partition.validate();
            const Obj o = Obj::dim(x.partition.total());
            return {e, o, o, SemLevel::S};
          },
          [&](const ZeroAtom& x) -> TypedExpr { return {e, x.dom, x.cod, SemLevel::C}; },
          [&](const BinaryNode& x) -> TypedExpr {
            const TypedExpr l = typecheck(x.lhs);
            const TypedExpr r = typecheck(x.rhs);
            const SemLevel level = std::max(l.min_level, r.min_level);
            switch (x.op) {
              case BinaryOp::Seq:
                if (!(l.cod == r.dom)) {
                  throw Error(ErrorKind::TypeMismatch, where(*e) + "sequencing " +
                                                           to_string(l.cod) + " into " +
                                                           to_string(r.dom));
                }
                return {e, l.dom, r.cod, level};
              case BinaryOp::Plus:
                if (level > SemLevel::C) {
                  throw Error(ErrorKind::LevelError,
                              where(*e) + "direct sums exist only up to level C");
                }
                return {e, l.dom + r.dom, l.cod + r.cod, level};
              case BinaryOp::Times:
                return {e, l.dom * r.dom, l.cod * r.cod, level};
            }
            throw Error(ErrorKind::TypeMismatch, "unknown operator");
          },
          [&](const DaggerNode& x) -> TypedExpr {
            const TypedExpr inner = typecheck(x.inner);
            if (inner.min_level > SemLevel::C) {
              throw Error(ErrorKind::LevelError,
                          where(*e) + "dagger exists only up to level C, operand needs " +
                              to_string(inner.min_level));
            }
            return {e, inner.cod, inner.dom, inner.min_level};
          },
      },
      e->node());
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

ComplexMatrix eval_unitary(const ExprPtr& e);
BiaffineMor eval_biaffine(const ExprPtr& e);
DilationMor eval_dilation(const ExprPtr& e);
SplitMor eval_split(const ExprPtr& e);

TowerMor unitary_mor(const Obj& dom, const Obj& cod, ComplexMatrix m) {
  return validate_morphism(dom, cod, std::move(m), Level::Unitary);
}

ComplexMatrix eval_unitary(const ExprPtr& e) {
  return std::visit(
      overloaded{
          [&](const GateAtom& x) -> ComplexMatrix { return gate_matrix(x.name); },
          [&](const MatrixAtom& x) -> ComplexMatrix { return x.mat; },
          [&](const StructuralAtom& x) -> ComplexMatrix {
            return structural_iso(x.name, x.args).mat;
          },
          [&](const BinaryNode& x) -> ComplexMatrix {
            const ComplexMatrix l = eval_unitary(x.lhs);
            const ComplexMatrix r = eval_unitary(x.rhs);
            switch (x.op) {
              case BinaryOp::Seq: return r * l;
              case BinaryOp::Plus: return direct_sum(l, r);
              case BinaryOp::Times: return kron(l, r);
            }
            return {};
          },
          [&](const DaggerNode& x) -> ComplexMatrix { return eval_unitary(x.inner).adjoint(); },
          [&](const auto&) -> ComplexMatrix {
            throw Error(ErrorKind::LevelTooLow, where(*e) + "construct has no unitary meaning");
          },
      },
      e->node());
}

BiaffineMor eval_biaffine(const ExprPtr& e) {
  const TypedExpr t = typecheck(e);
  if (t.min_level == SemLevel::U) return lift_unitary(unitary_mor(t.dom, t.cod, eval_unitary(e)));
  return std::visit(
      overloaded{
          [&](const MatrixAtom& x) -> BiaffineMor {
            return halmos_dilate(validate_morphism(t.dom, t.cod, x.mat, Level::Contraction));
          },
          [&](const ZeroAtom& x) -> BiaffineMor { return zero_mor(x.dom, x.cod); },
          [&](const BinaryNode& x) -> BiaffineMor {
            const BiaffineMor l = eval_biaffine(x.lhs);
            const BiaffineMor r = eval_biaffine(x.rhs);
            switch (x.op) {
              case BinaryOp::Seq: return compose_biaffine(l, r);
              case BinaryOp::Plus: return monoidal_biaffine(MonoidalOp::Oplus, l, r);
              case BinaryOp::Times: return monoidal_biaffine(MonoidalOp::Otimes, l, r);
            }
            throw Error(ErrorKind::TypeMismatch, "unknown operator");
          },
          [&](const DaggerNode& x) -> BiaffineMor {
            return dagger_biaffine(eval_biaffine(x.inner));
          },
          [&](const auto&) -> BiaffineMor {
            throw Error(ErrorKind::LevelTooLow, where(*e) + "construct needs a higher level");
          },
      },
      e->node());
}

DilationMor eval_dilation(const ExprPtr& e) {
  const TypedExpr t = typecheck(e);
  if (t.min_level <= SemLevel::C) return lift_contraction(corner(eval_biaffine(e)));
  return std::visit(
      overloaded{
          [&](const DiscardAtom& x) -> DilationMor { return discard(x.obj); },
          [&](const BinaryNode& x) -> DilationMor {
            const DilationMor l = eval_dilation(x.lhs);
            const DilationMor r = eval_dilation(x.rhs);
            switch (x.op) {
              case BinaryOp::Seq: return compose_dilation(l, r);
              case BinaryOp::Times: return tensor_dilation(l, r);
              case BinaryOp::Plus: break;
            }
            throw Error(ErrorKind::LevelError, where(*e) + "direct sums exist only up to level C");
          },
          [&](const auto&) -> DilationMor {
            throw Error(ErrorKind::LevelTooLow, where(*e) + "construct needs level S");
          },
      },
      e->node());
}

SplitMor eval_split(const ExprPtr& e) {
  const TypedExpr t = typecheck(e);
  if (t.min_level <= SemLevel::Q) {
    return validate_split_mor(to_channel(eval_dilation(e)), trivial_object(t.dom),
                              trivial_object(t.cod));
  }
  return std::visit(
      overloaded{
          [&](const MeasureAtom& x) -> SplitMor {
            return split_identity(measurement_idempotent(x.partition));
          },
          [&](const BinaryNode& x) -> SplitMor {
            const SplitMor l = eval_split(x.lhs);
            const SplitMor r = eval_split(x.rhs);
            switch (x.op) {
              case BinaryOp::Seq: return compose_split_through(l, r);
              case BinaryOp::Times: return tensor_split(l, r);
              case BinaryOp::Plus: break;
            }
            throw Error(ErrorKind::LevelError, where(*e) + "direct sums exist only up to level C");
          },
          [&](const auto&) -> SplitMor {
            throw Error(ErrorKind::LevelError, where(*e) + "construct has no split meaning");
          },
      },
      e->node());
}

}  // namespace

Value evaluate(const TypedExpr& e, SemLevel at) {
  if (at < e.min_level) {
    throw Error(ErrorKind::LevelTooLow, std::string("expression needs level ") +
                                            to_string(e.min_level) + ", asked for " +
                                            to_string(at));
  }
  switch (at) {
    case SemLevel::U: return {at, eval_unitary(e.expr)};
    case SemLevel::C: return {at, eval_biaffine(e.expr)};
    case SemLevel::Q: return {at, to_channel(eval_dilation(e.expr))};
    case SemLevel::S: return {at, eval_split(e.expr)};
  }
  throw Error(ErrorKind::LevelError, "unknown level");
}

DilationMor evaluate_dilation(const TypedExpr& e) {
  if (e.min_level > SemLevel::Q) {
    throw Error(ErrorKind::LevelTooLow, "expression needs level S");
  }
  return eval_dilation(e.expr);
}

bool equal_at_level(const TypedExpr& a, const TypedExpr& b, SemLevel at) {
  if (!(a.dom == b.dom) || !(a.cod == b.cod)) {
    throw Error(ErrorKind::ObjectMismatch, to_string(a.dom) + " -> " + to_string(a.cod) +
                                               " vs " + to_string(b.dom) + " -> " +
                                               to_string(b.cod));
  }
  const Value va = evaluate(a, at);
  const Value vb = evaluate(b, at);
  switch (at) {
    case SemLevel::U: return sup_distance(va.unitary(), vb.unitary()) <= tol::kComposed;
    case SemLevel::C: return equiv_biaffine(va.biaffine(), vb.biaffine());
    case SemLevel::Q: return channel_equal(va.channel(), vb.channel());
    case SemLevel::S: return channel_equal(va.split().channel(), vb.split().channel());
  }
  return false;
}

}  // namespace qtower::dsl
