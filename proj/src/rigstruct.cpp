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

#include "qtower/rigstruct.hpp"

#include <cctype>
#include <functional>
#include <sstream>

namespace qtower {

Obj Obj::unit() {
  return Obj(std::make_shared<const Node>(Node{Kind::Unit, 0, 1, {}}));
}

Obj Obj::zero() {
  return Obj(std::make_shared<const Node>(Node{Kind::Zero, 0, 0, {}}));
}

Obj Obj::dim(Eigen::Index n) {
  if (n < 1) throw Error(ErrorKind::ShapeMismatch, "dimension leaves must be >= 1");
  return Obj(std::make_shared<const Node>(Node{Kind::Dim, n, n, {}}));
}

Obj Obj::oplus(const Obj& l, const Obj& r) {
  return Obj(std::make_shared<const Node>(Node{Kind::Oplus, 0, l.size() + r.size(), {l, r}}));
}

Obj Obj::otimes(const Obj& l, const Obj& r) {
  return Obj(std::make_shared<const Node>(Node{Kind::Otimes, 0, l.size() * r.size(), {l, r}}));
}

Obj Obj::of_dim(Eigen::Index n) { return n == 0 ? zero() : dim(n); }

const Obj& Obj::left() const { return node_->children.at(0); }
const Obj& Obj::right() const { return node_->children.at(1); }

bool operator==(const Obj& a, const Obj& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case Obj::Kind::Unit:
    case Obj::Kind::Zero: return true;
    case Obj::Kind::Dim: return a.leaf_dim() == b.leaf_dim();
    case Obj::Kind::Oplus:
    case Obj::Kind::Otimes: return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

namespace {

void print_obj(std::ostream& os, const Obj& o, int context) {
  switch (o.kind()) {
    case Obj::Kind::Unit: os << 'I'; return;
    case Obj::Kind::Zero: os << 'O'; return;
    case Obj::Kind::Dim: os << o.leaf_dim(); return;
    case Obj::Kind::Oplus: {
      const bool parens = context > 0;
      if (parens) os << '(';
      print_obj(os, o.left(), 0);
      os << " + ";
      print_obj(os, o.right(), 1);
      if (parens) os << ')';
      return;
    }
    case Obj::Kind::Otimes: {
      const bool parens = context > 1;
      if (parens) os << '(';
      print_obj(os, o.left(), 1);
      os << " * ";
      print_obj(os, o.right(), 2);
      if (parens) os << ')';
      return;
    }
  }
}

class ObjParser {
 public:
  explicit ObjParser(std::string_view text) : text_(text) {}

  Obj parse_all() {
    Obj o = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return o;
  }

 private:
  Obj parse_sum() {
    Obj acc = parse_product();
    while (peek() == '+') {
      ++pos_;
      acc = Obj::oplus(acc, parse_product());
    }
    return acc;
  }

  Obj parse_product() {
    Obj acc = parse_atom();
    while (peek() == '*') {
      ++pos_;
      acc = Obj::otimes(acc, parse_atom());
    }
    return acc;
  }

  Obj parse_atom() {
    const char c = peek();
    if (c == 'I') {
      ++pos_;
      return Obj::unit();
    }
    if (c == 'O') {
      ++pos_;
      return Obj::zero();
    }
    if (c == '(') {
      ++pos_;
      Obj inner = parse_sum();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Eigen::Index n = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        n = n * 10 + (text_[pos_++] - '0');
        if (n > 1'000'000) fail("dimension literal too large");
      }
      if (n == 0) fail("dimension literal must be positive (use O for the zero object)");
      return Obj::dim(n);
    }
    fail("expected an object");
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) {
    std::ostringstream msg;
    msg << what << " at column " << pos_ + 1 << " in object '" << text_ << "'";
    throw Error(ErrorKind::SyntaxError, msg.str());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

using IndexMap = std::function<Eigen::Index(Eigen::Index)>;

ComplexMatrix from_index_map(Eigen::Index n, const IndexMap& f) {
  std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) perm[static_cast<std::size_t>(j)] = f(j);
  return permutation_matrix(perm);
}

}  // namespace

std::string to_string(const Obj& o) {
  std::ostringstream os;
  print_obj(os, o, 0);
  return os.str();
}

Obj parse_obj(std::string_view text) { return ObjParser(text).parse_all(); }

std::size_t arity(Structural s) {
  switch (s) {
    case Structural::AssocPlus:
    case Structural::AssocTimes:
    case Structural::DistL:
    case Structural::DistR: return 3;
    case Structural::SwapPlus:
    case Structural::SwapTimes: return 2;
    case Structural::UnitRPlus:
    case Structural::UnitLPlus:
    case Structural::UnitRTimes:
    case Structural::UnitLTimes:
    case Structural::AnnL:
    case Structural::AnnR: return 1;
  }
  return 0;
}

namespace {

constexpr std::pair<Structural, std::string_view> kNames[] = {
    {Structural::AssocPlus, "assocP"}, {Structural::UnitRPlus, "unitRP"},
    {Structural::UnitLPlus, "unitLP"}, {Structural::SwapPlus, "swapP"},
    {Structural::AssocTimes, "assocT"}, {Structural::UnitRTimes, "unitRT"},
    {Structural::UnitLTimes, "unitLT"}, {Structural::SwapTimes, "swapT"},
    {Structural::DistL, "distL"},       {Structural::DistR, "distR"},
    {Structural::AnnL, "annL"},         {Structural::AnnR, "annR"},
};

}  // namespace

std::string to_string(StructuralName n) {
  for (const auto& [s, name] : kNames) {
    if (s == n.name) return std::string(name) + (n.inverse ? "Inv" : "");
  }
  return "?";
}

bool parse_structural_name(std::string_view text, StructuralName& out) {
  bool inverse = false;
  if (text.size() > 3 && text.substr(text.size() - 3) == "Inv") {
    inverse = true;
    text.remove_suffix(3);
  }
  for (const auto& [s, name] : kNames) {
    if (name == text) {
      out = {s, inverse};
      return true;
    }
  }
  return false;
}

StructuralIso structural_iso(StructuralName name, const std::vector<Obj>& args) {
  if (args.size() != arity(name.name)) {
    std::ostringstream msg;
    msg << to_string(name) << " takes " << arity(name.name) << " object(s), got "
        << args.size();
    throw Error(ErrorKind::ArityMismatch, msg.str());
  }
  const Obj& a = args[0];
  const Eigen::Index da = a.size();

  // Forward direction: dom, cod, and the index bijection dom -> cod.
  Obj dom = a;
  Obj cod = a;
  IndexMap map = [](Eigen::Index j) { return j; };

  switch (name.name) {
    case Structural::AssocPlus:
      dom = (args[0] + args[1]) + args[2];
      cod = args[0] + (args[1] + args[2]);
      break;
    case Structural::UnitRPlus:
      dom = a + Obj::zero();
      break;
    case Structural::UnitLPlus:
      dom = Obj::zero() + a;
      break;
    case Structural::SwapPlus: {
      const Eigen::Index db = args[1].size();
      dom = args[0] + args[1];
      cod = args[1] + args[0];
      map = [da, db](Eigen::Index j) { return j < da ? db + j : j - da; };
      break;
    }
    case Structural::AssocTimes:
      dom = (args[0] * args[1]) * args[2];
      cod = args[0] * (args[1] * args[2]);
      break;
    case Structural::UnitRTimes:
      dom = a * Obj::unit();
      break;
    case Structural::UnitLTimes:
      dom = Obj::unit() * a;
      break;
    case Structural::SwapTimes: {
      const Eigen::Index db = args[1].size();
      dom = args[0] * args[1];
      cod = args[1] * args[0];
      map = [da, db](Eigen::Index j) { return (j % db) * da + j / db; };
      break;
    }
    case Structural::DistL: {
      const Eigen::Index db = args[1].size();
      const Eigen::Index dc = args[2].size();
      dom = args[0] * (args[1] + args[2]);
      cod = (args[0] * args[1]) + (args[0] * args[2]);
      map = [da, db, dc](Eigen::Index j) {
        const Eigen::Index x = j / (db + dc);
        const Eigen::Index y = j % (db + dc);
        return y < db ? x * db + y : da * db + x * dc + (y - db);
      };
      break;
    }
    case Structural::DistR:
      // (A+B)*C and (A*C)+(B*C) share the same row-major layout
      dom = (args[0] + args[1]) * args[2];
      cod = (args[0] * args[2]) + (args[1] * args[2]);
      break;
    case Structural::AnnL:
      dom = a * Obj::zero();
      cod = Obj::zero();
      break;
    case Structural::AnnR:
      dom = Obj::zero() * a;
      cod = Obj::zero();
      break;
  }

  ComplexMatrix forward = from_index_map(dom.size(), map);
  if (name.inverse) return {cod, dom, forward.transpose()};
  return {dom, cod, std::move(forward)};
}

ComplexMatrix identity(const Obj& o) { return ComplexMatrix::Identity(o.size(), o.size()); }

ComplexMatrix oplus_interchange(const Obj& a, const Obj& b, const Obj& c, const Obj& d) {
  using S = Structural;
  const ComplexMatrix ia = identity(a);
  const ComplexMatrix s1 = structural_matrix(S::AssocPlus, {a, b, c + d});
  const ComplexMatrix s2 = direct_sum(ia, structural_matrix(S::AssocPlus, {b, c, d}, true));
  const ComplexMatrix s3 =
      direct_sum(ia, direct_sum(structural_matrix(S::SwapPlus, {b, c}), identity(d)));
  const ComplexMatrix s4 = direct_sum(ia, structural_matrix(S::AssocPlus, {c, b, d}));
  const ComplexMatrix s5 = structural_matrix(S::AssocPlus, {a, c, b + d}, true);
  return s5 * s4 * s3 * s2 * s1;
}

ComplexMatrix otimes_interchange(const Obj& a, const Obj& b, const Obj& c, const Obj& d) {
  using S = Structural;
  const ComplexMatrix ia = identity(a);
  const ComplexMatrix s1 = structural_matrix(S::AssocTimes, {a, b, c * d});
  const ComplexMatrix s2 = kron(ia, structural_matrix(S::AssocTimes, {b, c, d}, true));
  const ComplexMatrix s3 = kron(ia, kron(structural_matrix(S::SwapTimes, {b, c}), identity(d)));
  const ComplexMatrix s4 = kron(ia, structural_matrix(S::AssocTimes, {c, b, d}));
  const ComplexMatrix s5 = structural_matrix(S::AssocTimes, {a, c, b * d}, true);
  return s5 * s4 * s3 * s2 * s1;
}

}  // namespace qtower
