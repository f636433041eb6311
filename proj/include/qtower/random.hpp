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

#include "qtower/linalg.hpp"

namespace qtower {

// Counter-based generator: draw k of stream (seed, stream) is
// splitmix64(seed ^ mix(stream) + k * golden). The standard-library
// distributions are implementation-defined, so uniform and Gaussian draws are
// derived here to keep streams identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();
  double uniform();  // [0, 1)
  double gaussian();
  Complex complex_gaussian();  // E|z|^2 = 1
  Eigen::Index uniform_int(Eigen::Index lo, Eigen::Index hi);  // inclusive

  /// Independent generator for a sub-stream, e.g. one per test case.
  Rng split(std::uint64_t stream) const;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

ComplexMatrix random_gaussian_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols);

/// Haar-ish unitary from the Q factor of a Gaussian matrix.
ComplexMatrix random_unitary(Rng& rng, Eigen::Index n);

/// rows x cols isometry (rows >= cols): leading columns of a random unitary.
ComplexMatrix random_isometry(Rng& rng, Eigen::Index rows, Eigen::Index cols);

/// Gaussian matrix rescaled to operator norm exactly `norm`.
ComplexMatrix random_with_norm(Rng& rng, Eigen::Index rows, Eigen::Index cols, double norm);

/// Gaussian matrix rescaled by 1 / (||G|| (1 + u)), u uniform in [0, 1).
ComplexMatrix random_contraction(Rng& rng, Eigen::Index rows, Eigen::Index cols);

}  // namespace qtower
