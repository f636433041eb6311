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

#include "qtower/cstarsplit.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace qtower {

Eigen::Index Partition::total() const {
  return std::accumulate(blocks.begin(), blocks.end(), Eigen::Index{0});
}

void Partition::validate() const {
  if (blocks.empty()) throw Error(ErrorKind::BadPartition, "partition has no blocks");
  for (const auto n : blocks) {
    if (n < 1) throw Error(ErrorKind::BadPartition, "partition blocks must be >= 1");
  }
}

std::vector<ComplexMatrix> block_projectors(const Partition& p) {
  p.validate();
  const Eigen::Index n = p.total();
  std::vector<ComplexMatrix> out;
  Eigen::Index offset = 0;
  for (const auto size : p.blocks) {
    ComplexMatrix proj = ComplexMatrix::Zero(n, n);
    proj.block(offset, offset, size, size).setIdentity();
    out.push_back(std::move(proj));
    offset += size;
  }
  return out;
}

SplitObject::SplitObject(Obj ambient, KrausChannel idem, std::optional<Partition> partition)
    : ambient_(std::move(ambient)), idem_(std::move(idem)), partition_(std::move(partition)) {
  if (idem_.in_dim() != ambient_.size() || idem_.out_dim() != ambient_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "idempotent does not act on the ambient object");
  }
  if (!is_causal_idempotent(idem_)) {
    throw Error(ErrorKind::InvalidChannel, "not a causal idempotent");
  }
  if (partition_ && partition_->total() != ambient_.size()) {
    throw Error(ErrorKind::BadPartition, "partition does not cover the ambient object");
  }
}

bool same_object(const SplitObject& a, const SplitObject& b) {
  return a.ambient() == b.ambient() && channel_equal(a.idem(), b.idem());
}

SplitObject trivial_object(const Obj& a) { return SplitObject(a, identity_channel(a.size())); }

SplitMor validate_split_mor(const KrausChannel& f, const SplitObject& src, const SplitObject& dst) {
  if (f.in_dim() != src.ambient().size() || f.out_dim() != dst.ambient().size()) {
    throw Error(ErrorKind::DimensionMismatch, "channel does not fit the split objects");
  }
  const KrausChannel absorbed = compose_channels(compose_channels(src.idem(), f), dst.idem());
  if (!channel_equal(absorbed, f)) {
    std::ostringstream msg;
    msg << "e' . f . e differs from f by " << choi_distance(absorbed, f);
    throw Error(ErrorKind::AbsorptionFails, msg.str());
  }
  return SplitMor(src, dst, f);
}

SplitMor split_identity(const SplitObject& s) { return validate_split_mor(s.idem(), s, s); }

SplitMor compose_split(const SplitMor& f, const SplitMor& g) {
  if (!same_object(f.dst(), g.src())) {
    throw Error(ErrorKind::ObjectMismatch, "codomain and domain split objects differ");
  }
  return validate_split_mor(compose_channels(f.channel(), g.channel()), f.src(), g.dst());
}

SplitMor compose_split_through(const SplitMor& f, const SplitMor& g) {
  if (!(f.dst().ambient() == g.src().ambient())) {
    throw Error(ErrorKind::ObjectMismatch, "cannot compose through " +
                                               to_string(f.dst().ambient()) + " vs " +
                                               to_string(g.src().ambient()));
  }
  return validate_split_mor(compose_channels(f.channel(), g.channel()), f.src(), g.dst());
}

SplitMor tensor_split(const SplitMor& f, const SplitMor& g) {
  const SplitObject src(f.src().ambient() * g.src().ambient(),
                        tensor_channels(f.src().idem(), g.src().idem()));
  const SplitObject dst(f.dst().ambient() * g.dst().ambient(),
                        tensor_channels(f.dst().idem(), g.dst().idem()));
  return validate_split_mor(tensor_channels(f.channel(), g.channel()), src, dst);
}

SplitMor coerce_split(const KrausChannel& f, const SplitObject& src, const SplitObject& dst) {
  return validate_split_mor(compose_channels(compose_channels(src.idem(), f), dst.idem()), src,
                            dst);
}

SplitObject measurement_idempotent(const Partition& p) {
  p.validate();
  const Eigen::Index n = p.total();
  return SplitObject(Obj::dim(n), KrausChannel(n, n, block_projectors(p)), p);
}

bool is_causal_idempotent(const KrausChannel& e) {
  if (e.in_dim() != e.out_dim()) return false;
  return is_trace_preserving(e) && channel_equal(compose_channels(e, e), e);
}

BlockChannel compose_block(const BlockChannel& f, const BlockChannel& g) {
  if (f.cod_blocks != g.dom_blocks) {
    throw Error(ErrorKind::ObjectMismatch, "block structures differ at the composition point");
  }
  return {compose_channels(f.channel, g.channel), f.dom_blocks, g.cod_blocks};
}

namespace {

bool same_block(const Partition& p, Eigen::Index i, Eigen::Index j) {
  Eigen::Index start = 0;
  for (const auto size : p.blocks) {
    const bool has_i = i >= start && i < start + size;
    const bool has_j = j >= start && j < start + size;
    if (has_i || has_j) return has_i && has_j;
    start += size;
  }
  return false;
}

}  // namespace

bool block_channel_equal(const BlockChannel& a, const BlockChannel& b, double eps) {
  if (a.dom_blocks != b.dom_blocks || a.cod_blocks != b.cod_blocks) {
    throw Error(ErrorKind::ObjectMismatch, "block structures differ");
  }
  if (a.channel.in_dim() != b.channel.in_dim() || a.channel.out_dim() != b.channel.out_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "block channels act between different spaces");
  }
  ComplexMatrix diff = choi_matrix(a.channel) - choi_matrix(b.channel);
  if (a.dom_blocks) {
    const Eigen::Index in = a.channel.in_dim();
    const Eigen::Index out = a.channel.out_dim();
    for (Eigen::Index i = 0; i < in; ++i)
      for (Eigen::Index j = 0; j < in; ++j)
        if (!same_block(*a.dom_blocks, i, j)) diff.block(i * out, j * out, out, out).setZero();
  }
  return max_abs(diff) <= eps;
}

Splitting split_idempotent(const SplitObject& s) {
  if (!s.partition()) {
    throw Error(ErrorKind::NoKnownPartition, "object was not built from a partition");
  }
  const Partition& p = *s.partition();
  const Eigen::Index n = p.total();
  BlockChannel m{KrausChannel(n, n, block_projectors(p)), std::nullopt, p};
  BlockChannel emb{identity_channel(n), p, std::nullopt};
  return {std::move(m), std::move(emb)};
}

std::pair<SplitMor, SplitMor> split_as_morphisms(const SplitObject& s) {
  const SplitObject whole = trivial_object(s.ambient());
  return {validate_split_mor(s.idem(), whole, s), validate_split_mor(s.idem(), s, whole)};
}

KrausChannel depolarizing(double p) {
  ComplexMatrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, Complex(0, -1), Complex(0, 1), 0;
  z << 1, 0, 0, -1;
  const double keep = std::sqrt(1.0 - 3.0 * p / 4.0);
  const double flip = std::sqrt(p / 4.0);
  return KrausChannel(2, 2, {keep * ComplexMatrix::Identity(2, 2), flip * x, flip * y, flip * z});
}

}  // namespace qtower
