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

#include <optional>
#include <vector>

#include "qtower/channels.hpp"

namespace qtower {

/// Consecutive index blocks n_1, ..., n_k of an ambient space.
struct Partition {
  std::vector<Eigen::Index> blocks;

  Eigen::Index total() const;
  /// Throws BadPartition when empty or a block is < 1.
  void validate() const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Orthogonal projectors onto the consecutive blocks.
std::vector<ComplexMatrix> block_projectors(const Partition& p);

/// An object (A, e) with e a causal idempotent channel on A.
class SplitObject {
 public:
  /// Throws InvalidChannel when e is not a causal idempotent on dim(A).
  SplitObject(Obj ambient, KrausChannel idem, std::optional<Partition> partition = std::nullopt);

  const Obj& ambient() const { return ambient_; }
  const KrausChannel& idem() const { return idem_; }
  const std::optional<Partition>& partition() const { return partition_; }

 private:
  Obj ambient_;
  KrausChannel idem_;
  std::optional<Partition> partition_;
};

/// Same ambient object and channel-equal idempotents.
bool same_object(const SplitObject& a, const SplitObject& b);

/// (A, id_A).
SplitObject trivial_object(const Obj& a);

class SplitMor {
 public:
  const SplitObject& src() const { return src_; }
  const SplitObject& dst() const { return dst_; }
  const KrausChannel& channel() const { return f_; }

  friend SplitMor validate_split_mor(const KrausChannel& f, const SplitObject& src,
                                     const SplitObject& dst);

 private:
  SplitMor(SplitObject src, SplitObject dst, KrausChannel f)
      : src_(std::move(src)), dst_(std::move(dst)), f_(std::move(f)) {}

  SplitObject src_;
  SplitObject dst_;
  KrausChannel f_;
};

/// e' . f . e == f. Throws DimensionMismatch or AbsorptionFails.
SplitMor validate_split_mor(const KrausChannel& f, const SplitObject& src, const SplitObject& dst);

/// The identity of (A, e), whose underlying channel is e.
SplitMor split_identity(const SplitObject& s);

/// f then g. Throws ObjectMismatch unless f.dst and g.src are the same object.
SplitMor compose_split(const SplitMor& f, const SplitMor& g);

/// f then g without requiring the middle idempotents to agree, only the
/// ambient objects. The composite channel still satisfies absorption because
/// each factor does.
SplitMor compose_split_through(const SplitMor& f, const SplitMor& g);

SplitMor tensor_split(const SplitMor& f, const SplitMor& g);

/// e' . f . e, a retraction of all channels onto valid morphisms src -> dst.
SplitMor coerce_split(const KrausChannel& f, const SplitObject& src, const SplitObject& dst);

/// Idempotent with Kraus operators the block projectors of `p`.
SplitObject measurement_idempotent(const Partition& p);

/// e . e == e and e trace-preserving.
bool is_causal_idempotent(const KrausChannel& e);

/// A channel whose domain and/or codomain is the block algebra
/// B(C^n1) + ... + B(C^nk), represented as block-diagonal operators on the
/// ambient space.
struct BlockChannel {
  KrausChannel channel;
  std::optional<Partition> dom_blocks;
  std::optional<Partition> cod_blocks;
};

/// g after f; the block metadata is carried from the outer ends.
BlockChannel compose_block(const BlockChannel& f, const BlockChannel& g);

/// Channel equality on the declared domain: for a block domain only the
/// block-diagonal matrix units are compared.
bool block_channel_equal(const BlockChannel& a, const BlockChannel& b,
                         double eps = tol::kComposed);

struct Splitting {
  BlockChannel m;  // B(A) -> block algebra, (X Y; Z W) -> (X, W)
  BlockChannel p;  // block algebra -> B(A), (X, W) -> (X 0; 0 W)
};

/// Throws NoKnownPartition unless `s` carries partition metadata.
Splitting split_idempotent(const SplitObject& s);

/// m and p as morphisms of the split category: m : (A, id) -> (A, e) and
/// p : (A, e) -> (A, id), both with underlying channel e.
std::pair<SplitMor, SplitMor> split_as_morphisms(const SplitObject& s);

/// rho -> (1 - 3p/4) rho + (p/4)(X rho X + Y rho Y + Z rho Z) on a qubit.
KrausChannel depolarizing(double p);

}  // namespace qtower
