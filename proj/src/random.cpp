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

#include "qtower/random.hpp"

#include <cmath>
#include <numbers>

namespace qtower {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

std::uint64_t Rng::next_u64() {
  const std::uint64_t key = seed_ ^ splitmix64(stream_ * 0xD1B54A32D192ED03ULL);
  return splitmix64(key + (counter_++) * kGolden);
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::gaussian() {
  // Box-Muller; 1 - u keeps the logarithm finite
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::complex_gaussian() { return Complex(gaussian(), gaussian()) / std::sqrt(2.0); }

Eigen::Index Rng::uniform_int(Eigen::Index lo, Eigen::Index hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<Eigen::Index>(next_u64() % span);
}

Rng Rng::split(std::uint64_t stream) const {
  return Rng(splitmix64(seed_ ^ splitmix64(stream_)), stream);
}

ComplexMatrix random_gaussian_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  ComplexMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = rng.complex_gaussian();
  return m;
}

ComplexMatrix random_unitary(Rng& rng, Eigen::Index n) {
  const ComplexMatrix g = random_gaussian_matrix(rng, n, n);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  // fix the phase ambiguity of QR so the distribution is Haar
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

ComplexMatrix random_isometry(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  return random_unitary(rng, rows).leftCols(cols);
}

ComplexMatrix random_with_norm(Rng& rng, Eigen::Index rows, Eigen::Index cols, double norm) {
  const ComplexMatrix g = random_gaussian_matrix(rng, rows, cols);
  const double current = operator_norm(g);
  return current == 0.0 ? g : ComplexMatrix(g * (norm / current));
}

ComplexMatrix random_contraction(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  const ComplexMatrix g = random_gaussian_matrix(rng, rows, cols);
  const double current = operator_norm(g);
  const double u = rng.uniform();
  return current == 0.0 ? g : ComplexMatrix(g / (current * (1.0 + u)));
}

}  // namespace qtower
