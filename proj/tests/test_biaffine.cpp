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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_util.hpp"

#include "qtower/biaffine.hpp"

using namespace qtower;
using namespace qtower::testing;

namespace {

const Obj kTwo = Obj::dim(2);

TowerMor unitary(const ComplexMatrix& u) {
  return validate_morphism(Obj::of_dim(u.cols()), Obj::of_dim(u.rows()), u, Level::Unitary);
}

TowerMor contraction(const ComplexMatrix& t) {
  return validate_morphism(Obj::of_dim(t.cols()), Obj::of_dim(t.rows()), t, Level::Contraction);
}

BiaffineMor random_biaffine(Rng& rng, const Obj& dom, const Obj& cod) {
  const Eigen::Index h = rng.uniform_int(std::max<Eigen::Index>(0, cod.size() - dom.size()), 3);
  const Eigen::Index g = dom.size() + h - cod.size();
  return BiaffineMor(dom, cod, Obj::of_dim(h), Obj::of_dim(g),
                     random_unitary(rng, dom.size() + h));
}

Obj random_dim(Rng& rng, Eigen::Index lo = 0) { return Obj::of_dim(rng.uniform_int(lo, 3)); }

}  // namespace

TEST_CASE("construction validates the representative") {
  CHECK_THROWS_KIND(BiaffineMor(kTwo, kTwo, Obj::zero(), Obj::zero(), 0.5 * eye(2)),
                    ErrorKind::LevelViolation);
  CHECK_THROWS_KIND(BiaffineMor(kTwo, kTwo, Obj::unit(), Obj::zero(), eye(2)),
                    ErrorKind::ShapeMismatch);
}

TEST_CASE("lift examples") {
  const BiaffineMor id = lift_unitary(unitary(eye(2)));
  CHECK(id.in_anc() == Obj::zero());
  CHECK(id.out_anc() == Obj::zero());
  CHECK_CLOSE(id.mat(), eye(2), 0.0);
  CHECK_CLOSE(corner(lift_unitary(unitary(hadamard()))).mat(), hadamard(), 0.0);
  const BiaffineMor x = lift_unitary(unitary(pauli_x()));
  CHECK(equiv_biaffine(compose_biaffine(x, x), id));
  CHECK(equiv_biaffine(identity_biaffine(kTwo), id));
  CHECK_THROWS_KIND(lift_unitary(contraction(0.5 * eye(2))), ErrorKind::LevelViolation);
}

TEST_CASE("zero morphism examples") {
  const BiaffineMor z = zero_mor(kTwo, kTwo);
  CHECK(z.in_anc() == kTwo);
  CHECK(z.out_anc() == kTwo);
  CHECK_CLOSE(corner(z).mat(), ComplexMatrix::Zero(2, 2), 0.0);
  Rng rng(1);
  const BiaffineMor f = random_biaffine(rng, kTwo, kTwo);
  CHECK(equiv_biaffine(compose_biaffine(f, z), z));
  CHECK(equiv_biaffine(compose_biaffine(z, f), z));
  const Obj a = Obj::dim(3);
  CHECK(equiv_biaffine(dagger_biaffine(zero_mor(a, kTwo)), zero_mor(kTwo, a)));
}

TEST_CASE("compose examples") {
  Rng rng(2);
  const ComplexMatrix u = random_unitary(rng, 3), v = random_unitary(rng, 3);
  CHECK(equiv_biaffine(compose_biaffine(lift_unitary(unitary(u)), lift_unitary(unitary(v))),
                       lift_unitary(unitary(v * u))));
  const BiaffineMor half = halmos_dilate(contraction(mat(1, 1, {0.5})));
  const BiaffineMor quarter = compose_biaffine(half, half);
  CHECK_CLOSE(corner(quarter).mat(), mat(1, 1, {0.25}), 1e-12);
  CHECK(quarter.in_anc() == half.in_anc() + half.in_anc());
  CHECK(quarter.out_anc() == half.out_anc() + half.out_anc());
  CHECK_THROWS_KIND(compose_biaffine(half, lift_unitary(unitary(eye(2)))),
                    ErrorKind::ObjectMismatch);
}

TEST_CASE("dagger examples") {
  Rng rng(3);
  const ComplexMatrix u = random_unitary(rng, 2);
  const BiaffineMor du = dagger_biaffine(lift_unitary(unitary(u)));
  CHECK_CLOSE(du.mat(), u.adjoint(), 0.0);
  const BiaffineMor f = random_biaffine(rng, kTwo, Obj::dim(3));
  const BiaffineMor ff = dagger_biaffine(dagger_biaffine(f));
  CHECK(ff.dom() == f.dom());
  CHECK(ff.in_anc() == f.in_anc());
  CHECK(ff.out_anc() == f.out_anc());
  CHECK_CLOSE(ff.mat(), f.mat(), 0.0);
  const ComplexMatrix t = random_contraction(rng, 3, 2);
  CHECK_CLOSE(corner(dagger_biaffine(halmos_dilate(contraction(t)))).mat(), t.adjoint(), 1e-12);
}

TEST_CASE("halmos examples") {
  const double s = std::sqrt(3.0) / 2.0;
  CHECK_CLOSE(halmos_dilate(contraction(mat(1, 1, {0.5}))).mat(),
              mat(2, 2, {0.5, s, s, -0.5}), 1e-12);
  Rng rng(4);
  const ComplexMatrix u = random_unitary(rng, 2);
  const BiaffineMor du = halmos_dilate(contraction(u));
  CHECK_CLOSE(du.mat(), direct_sum(u, ComplexMatrix(-u.adjoint())), 1e-9);
  CHECK_CLOSE(halmos_dilate(contraction(mat(1, 1, {0}))).mat(), pauli_x(), 0.0);
}

TEST_CASE("halmos dilation matches a frozen oracle") {
  // numpy/scipy.linalg.sqrtm block formula
  const ComplexMatrix t = mat(3, 2, {0.3, Complex(0, 0.2), 0.1, -0.4, 0.0, 0.5});
  const BiaffineMor d = halmos_dilate(contraction(t));
  CHECK(d.in_anc() == Obj::dim(3));
  CHECK(d.out_anc() == Obj::dim(2));
  const ComplexMatrix& u = d.mat();
  CHECK(std::abs(u(0, 2) - Complex(0.9295126085996658, 0)) < 1e-12);
  CHECK(std::abs(u(0, 3) - Complex(-0.01645999866645264, 0.047390285975651439)) < 1e-12);
  CHECK(std::abs(u(1, 4) - Complex(0.11532845436052849, -0.00052454342976650345)) < 1e-12);
  CHECK(std::abs(u(2, 4) - Complex(0.856276551574145, 0)) < 1e-12);
  CHECK(std::abs(u(3, 0) - Complex(0.947721085365339, 0)) < 1e-12);
  CHECK(std::abs(u(3, 1) - Complex(0.02369514298782573, -0.035542714481738596)) < 1e-12);
  CHECK(std::abs(u(4, 1) - Complex(0.7403885842218643, 0)) < 1e-12);
  CHECK(std::abs(u(4, 2) - Complex(0, 0.2)) < 1e-12);
  CHECK(std::abs(u(4, 4) - Complex(-0.5, 0)) < 1e-12);
}

TEST_CASE("halmos round trip on random contractions") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const ComplexMatrix t = random_contraction(rng, rng.uniform_int(1, 6), rng.uniform_int(1, 6));
    const BiaffineMor d = halmos_dilate(contraction(t));
    CHECK(is_unitary(d.mat(), 1e-8));
    CHECK_CLOSE(corner(d).mat(), t, 1e-9);
  }
}

TEST_CASE("equivalence generators") {
  Rng rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const Obj a = random_dim(rng), b = random_dim(rng);
    const BiaffineMor f = random_biaffine(rng, a, b);
    const Eigen::Index g = f.out_anc().size();
    const BiaffineMor mixed(a, b, f.in_anc(), f.out_anc(),
                            direct_sum(identity(b), random_unitary(rng, g)) * f.mat());
    CHECK(equiv_biaffine(f, mixed));

    const Obj x = Obj::of_dim(rng.uniform_int(0, 2));
    const ComplexMatrix pad =
        structural_matrix(Structural::AssocPlus, {b, f.out_anc(), x}) *
        direct_sum(f.mat(), identity(x)) *
        structural_matrix(Structural::AssocPlus, {a, f.in_anc(), x}, true);
    CHECK(equiv_biaffine(f, BiaffineMor(a, b, f.in_anc() + x, f.out_anc() + x, pad)));
  }
  CHECK_FALSE(equiv_biaffine(lift_unitary(unitary(pauli_x())), lift_unitary(unitary(pauli_z()))));
  CHECK_THROWS_KIND(equiv_biaffine(zero_mor(kTwo, kTwo), zero_mor(kTwo, Obj::unit())),
                    ErrorKind::ObjectMismatch);
}

TEST_CASE("monoidal examples") {
  Rng rng(7);
  const ComplexMatrix u = random_unitary(rng, 2), v = random_unitary(rng, 3);
  const BiaffineMor lu = lift_unitary(unitary(u)), lv = lift_unitary(unitary(v));
  const Obj a = Obj::dim(2), b = Obj::dim(3);
  CHECK(equiv_biaffine(monoidal_biaffine(MonoidalOp::Oplus, lu, lv),
                       lift_unitary(validate_morphism(a + b, a + b, direct_sum(u, v),
                                                      Level::Unitary))));
  CHECK(equiv_biaffine(monoidal_biaffine(MonoidalOp::Otimes, lu, lv),
                       lift_unitary(validate_morphism(a * b, a * b, kron(u, v),
                                                      Level::Unitary))));
}

TEST_CASE("corner is monoidal on random pairs") {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const BiaffineMor f = random_biaffine(rng, random_dim(rng), random_dim(rng));
    const BiaffineMor g = random_biaffine(rng, random_dim(rng), random_dim(rng));
    const BiaffineMor s = monoidal_biaffine(MonoidalOp::Oplus, f, g);
    CHECK(s.dom() == f.dom() + g.dom());
    CHECK_CLOSE(corner(s).mat(), direct_sum(corner(f).mat(), corner(g).mat()), 1e-9);
    const BiaffineMor p = monoidal_biaffine(MonoidalOp::Otimes, f, g);
    CHECK(p.dom() == f.dom() * g.dom());
    CHECK(p.cod() == f.cod() * g.cod());
    CHECK_CLOSE(corner(p).mat(), kron(corner(f).mat(), corner(g).mat()), 1e-9);
  }
}

TEST_CASE("corner is functorial") {
  Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const Obj a = random_dim(rng), b = random_dim(rng), c = random_dim(rng);
    const BiaffineMor f = random_biaffine(rng, a, b);
    const BiaffineMor g = random_biaffine(rng, b, c);
    const BiaffineMor gf = compose_biaffine(f, g);
    CHECK(is_unitary(gf.mat()));
    CHECK_CLOSE(corner(gf).mat(), corner(g).mat() * corner(f).mat(), 1e-8);
  }
}

TEST_CASE("dagger reverses composition up to equivalence") {
  Rng rng(10);
  for (int trial = 0; trial < 100; ++trial) {
    const Obj a = random_dim(rng), b = random_dim(rng), c = random_dim(rng);
    const BiaffineMor f = random_biaffine(rng, a, b);
    const BiaffineMor g = random_biaffine(rng, b, c);
    CHECK(equiv_biaffine(dagger_biaffine(compose_biaffine(f, g)),
                         compose_biaffine(dagger_biaffine(g), dagger_biaffine(f))));
  }
}

TEST_CASE("O is a zero object") {
  Rng rng(11);
  const Obj o = Obj::zero();
  for (int trial = 0; trial < 50; ++trial) {
    const Obj a = random_dim(rng, 1);
    CHECK(equiv_biaffine(random_biaffine(rng, a, o), random_biaffine(rng, a, o)));
    CHECK(equiv_biaffine(random_biaffine(rng, o, a), random_biaffine(rng, o, a)));
    CHECK(equiv_biaffine(zero_mor(a, o), dagger_biaffine(random_biaffine(rng, o, a))));
  }
}

TEST_CASE("halmos of the corner recovers the class") {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const BiaffineMor f = random_biaffine(rng, random_dim(rng), random_dim(rng));
    CHECK(equiv_biaffine(halmos_dilate(corner(f)), f));
  }
}

TEST_CASE("isometric route agrees with the direct dilation") {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const TowerMor t =
        contraction(random_contraction(rng, rng.uniform_int(1, 4), rng.uniform_int(1, 4)));
    const BiaffineMor routed = isometric_route_dilate(t);
    CHECK(is_unitary(routed.mat()));
    CHECK(equiv_biaffine(routed, halmos_dilate(t)));
  }
}
