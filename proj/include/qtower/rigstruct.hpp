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
#include <vector>

#include "qtower/linalg.hpp"

namespace qtower {

/// Object of the skeletal rig category: a shape tree over I, O, n, + and *.
/// Two objects are equal exactly when their trees are equal.
class Obj {
 public:
  enum class Kind { Unit, Zero, Dim, Oplus, Otimes };

  static Obj unit();
  static Obj zero();
  static Obj dim(Eigen::Index n);  // n >= 1
  static Obj oplus(const Obj& l, const Obj& r);
  static Obj otimes(const Obj& l, const Obj& r);

  /// O for 0, otherwise a single leaf of that dimension.
  static Obj of_dim(Eigen::Index n);

  Kind kind() const { return node_->kind; }
  Eigen::Index leaf_dim() const { return node_->n; }
  const Obj& left() const;
  const Obj& right() const;

  /// Total dimension: I = 1, O = 0, + adds, * multiplies.
  Eigen::Index size() const { return node_->total; }

  friend bool operator==(const Obj& a, const Obj& b);

 private:
  struct Node {
    Kind kind;
    Eigen::Index n = 0;
    Eigen::Index total = 0;
    std::vector<Obj> children;
  };
  explicit Obj(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

inline Obj operator+(const Obj& l, const Obj& r) { return Obj::oplus(l, r); }
inline Obj operator*(const Obj& l, const Obj& r) { return Obj::otimes(l, r); }

inline Eigen::Index dim(const Obj& o) { return o.size(); }

/// Textual form accepted by parse_obj; '*' binds tighter than '+'.
std::string to_string(const Obj& o);

/// Parses `I`, `O`, positive integers, `+`, `*` and parentheses.
Obj parse_obj(std::string_view text);

enum class Structural {
  AssocPlus,
  UnitRPlus,
  UnitLPlus,
  SwapPlus,
  AssocTimes,
  UnitRTimes,
  UnitLTimes,
  SwapTimes,
  DistL,
  DistR,
  AnnL,
  AnnR,
};

struct StructuralName {
  Structural name;
  bool inverse = false;

  friend bool operator==(const StructuralName&, const StructuralName&) = default;
};

/// Number of object arguments each coherence map takes.
std::size_t arity(Structural s);

/// DSL spelling (swapP, assocT, distL, ...), with an "Inv" suffix for inverses.
std::string to_string(StructuralName n);
bool parse_structural_name(std::string_view text, StructuralName& out);

struct StructuralIso {
  Obj dom;
  Obj cod;
  ComplexMatrix mat;
};

/// The coherence isomorphism as a 0/1 permutation matrix in the fixed layout
/// (row-major for *, offset concatenation for +). Throws ArityMismatch.
StructuralIso structural_iso(StructuralName name, const std::vector<Obj>& args);

inline ComplexMatrix structural_matrix(Structural s, const std::vector<Obj>& args,
                                       bool inverse = false) {
  return structural_iso({s, inverse}, args).mat;
}

/// (A+B)+(C+D) -> (A+C)+(B+D), assembled from associators and a symmetry.
ComplexMatrix oplus_interchange(const Obj& a, const Obj& b, const Obj& c, const Obj& d);

/// (A*B)*(C*D) -> (A*C)*(B*D), assembled from associators and a symmetry.
ComplexMatrix otimes_interchange(const Obj& a, const Obj& b, const Obj& c, const Obj& d);

ComplexMatrix identity(const Obj& o);

}  // namespace qtower
