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

#include <cstdint>
#include <optional>
#include <vector>

#include "qtower/hilbtower.hpp"
#include "qtower/random.hpp"

namespace qtower {

/// Kraus form rho -> sum_i M_i rho M_i^dagger. Construction checks shapes
/// only; validate_channel checks sum_i M_i^dagger M_i <= 1.
class KrausChannel {
 public:
  /// Throws ShapeMismatch for an empty list or a misshapen operator.
  KrausChannel(Eigen::Index in_dim, Eigen::Index out_dim, std::vector<ComplexMatrix> kraus);

  Eigen::Index in_dim() const { return in_; }
  Eigen::Index out_dim() const { return out_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  std::size_t rank() const { return kraus_.size(); }

 private:
  Eigen::Index in_;
  Eigen::Index out_;
  std::vector<ComplexMatrix> kraus_;
};

/// Subnormalised density operator: Hermitian, PSD, trace <= 1.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix mat);

  Eigen::Index dim() const { return mat_.rows(); }
  const ComplexMatrix& mat() const { return mat_; }

 private:
  ComplexMatrix mat_;
};

/// C = sum_ij E_ij (x) Phi(E_ij), input factor first, unnormalised.
class ChoiMatrix {
 public:
  /// Throws NotHermitian / NotPSD / InvalidChannel when the invariants fail.
  ChoiMatrix(Eigen::Index in_dim, Eigen::Index out_dim, ComplexMatrix mat);

  Eigen::Index in_dim() const { return in_; }
  Eigen::Index out_dim() const { return out_; }
  const ComplexMatrix& mat() const { return mat_; }

 private:
  Eigen::Index in_;
  Eigen::Index out_;
  ComplexMatrix mat_;
};

/// Stinespring form rho -> tr_G(T rho T^dagger) with T : A -> B (x) G a contraction.
class StinespringRep {
 public:
  /// Throws NotContraction, or ShapeMismatch when t's codomain is not B (x) anc.
  StinespringRep(TowerMor t, Obj anc);

  const TowerMor& t() const { return t_; }
  const Obj& anc() const { return anc_; }
  /// The B in B (x) G.
  const Obj& out() const { return t_.cod().left(); }

 private:
  TowerMor t_;
  Obj anc_;
};

KrausChannel identity_channel(Eigen::Index dim);
KrausChannel unitary_channel(const ComplexMatrix& u);
KrausChannel zero_channel(Eigen::Index in_dim, Eigen::Index out_dim);

/// sum_i M_i^dagger M_i.
ComplexMatrix kraus_gram(const KrausChannel& k);

/// True iff the largest eigenvalue of sum_i M_i^dagger M_i is <= 1 + 1e-9.
bool validate_channel(const KrausChannel& k);
bool is_trace_preserving(const KrausChannel& k, double eps = tol::kStructural);

ComplexMatrix apply_channel(const KrausChannel& k, const ComplexMatrix& rho);
DensityMatrix apply_channel(const KrausChannel& k, const DensityMatrix& rho);

/// g after f.
KrausChannel compose_channels(const KrausChannel& f, const KrausChannel& g);
KrausChannel tensor_channels(const KrausChannel& f, const KrausChannel& g);

ComplexMatrix choi_matrix(const KrausChannel& k);
ChoiMatrix choi(const KrausChannel& k);

/// Minimal-rank Kraus form from the eigenvectors of C; eigenvalues below
/// 1e-10 are dropped. A zero Choi matrix yields one zero operator.
KrausChannel kraus_from_choi(const ChoiMatrix& c);

/// Choi matrices agree to 1e-8 entrywise. Throws DimensionMismatch.
bool channel_equal(const KrausChannel& a, const KrausChannel& b, double eps = tol::kComposed);
double choi_distance(const KrausChannel& a, const KrausChannel& b);

/// T[(b, i), a] = M_i[b, a] with ancilla dimension = number of Kraus operators.
StinespringRep stinespring(const KrausChannel& k);
StinespringRep stinespring(const KrausChannel& k, const Obj& dom, const Obj& cod);

/// E_i = (1_B (x) <i|) T for the standard ancilla basis.
KrausChannel channel_from_stinespring(const StinespringRep& s);

/// Unitary U with E_i = sum_j u_ij F_j after padding the shorter list with
/// zero operators. Throws ChannelsDiffer.
ComplexMatrix kraus_mixing_unitary(const KrausChannel& e, const KrausChannel& f);

/// Isometry W : G -> G' with T_F = (1 (x) W) T_E. Throws ChannelsDiffer,
/// or AncillaOrder when dim G > dim G'.
ComplexMatrix mediating_isometry(const StinespringRep& te, const StinespringRep& tf);

/// Scales every operator by 1 / sqrt(s (1 + slack)) where s is the largest
/// eigenvalue of sum_i M_i^dagger M_i.
KrausChannel rescale_to_cptn(Eigen::Index in_dim, Eigen::Index out_dim,
                             std::vector<ComplexMatrix> kraus, double slack);

/// Deterministic in `seed`: complex Gaussian Kraus operators rescaled with a
/// uniform slack in [0, 1), so the result is trace-nonincreasing.
KrausChannel random_cptn(Eigen::Index in_dim, Eigen::Index out_dim, std::size_t kraus_rank,
                         std::uint64_t seed);

}  // namespace qtower
