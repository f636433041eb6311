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

#include "qtower/rigstruct.hpp"

using namespace qtower;
using namespace qtower::testing;

namespace {

Obj random_obj(Rng& rng, int depth) {
  const auto pick = rng.uniform_int(0, depth > 0 ? 5 : 2);
  switch (pick) {
    case 0: return Obj::unit();
    case 1: return Obj::zero();
    case 2: return Obj::dim(rng.uniform_int(1, 3));
    case 3:
    case 4: return random_obj(rng, depth - 1) + random_obj(rng, depth - 1);
    default: return random_obj(rng, depth - 1) * random_obj(rng, depth - 1);
  }
}

Obj small_obj(Rng& rng) { return random_obj(rng, 1); }

const Structural kAll[] = {
    Structural::AssocPlus,  Structural::UnitRPlus,  Structural::UnitLPlus, Structural::SwapPlus,
    Structural::AssocTimes, Structural::UnitRTimes, Structural::UnitLTimes, Structural::SwapTimes,
    Structural::DistL,      Structural::DistR,      Structural::AnnL,       Structural::AnnR,
};

}  // namespace

TEST_CASE("object dimensions") {
  CHECK(dim(Obj::dim(2) * Obj::dim(3)) == 6);
  CHECK(dim(Obj::zero() * Obj::dim(5)) == 0);
  CHECK(dim(Obj::dim(1) + Obj::dim(1)) == 2);
  CHECK(dim(Obj::unit()) == 1);
  CHECK(dim(Obj::zero()) == 0);
  CHECK(Obj::of_dim(0) == Obj::zero());
  CHECK(Obj::of_dim(4) == Obj::dim(4));
  CHECK_THROWS_KIND(Obj::dim(0), ErrorKind::ShapeMismatch);
}

TEST_CASE("objects compare by shape") {
  CHECK(Obj::dim(2) + Obj::dim(1) == Obj::dim(2) + Obj::dim(1));
  CHECK_FALSE(Obj::dim(2) + Obj::dim(1) == Obj::dim(1) + Obj::dim(2));
  CHECK_FALSE(Obj::dim(2) * Obj::dim(2) == Obj::dim(4));
  const Obj one = Obj::dim(1);
  CHECK_FALSE((one + one) + one == one + (one + one));
}

TEST_CASE("object text round trip") {
  CHECK(to_string(Obj::dim(2) + Obj::dim(3) * Obj::dim(4)) == "2 + 3 * 4");
  CHECK(to_string((Obj::dim(2) + Obj::dim(3)) * Obj::dim(4)) == "(2 + 3) * 4");
  CHECK(parse_obj("2 + 3 * 4") == Obj::dim(2) + Obj::dim(3) * Obj::dim(4));
  CHECK(parse_obj("I*O") == Obj::unit() * Obj::zero());
  CHECK(parse_obj(" ( 1 + 1 ) + 1 ") == (Obj::dim(1) + Obj::dim(1)) + Obj::dim(1));
  CHECK(parse_obj("1 + 1 + 1") == (Obj::dim(1) + Obj::dim(1)) + Obj::dim(1));
  Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const Obj o = random_obj(rng, 4);
    CHECK(parse_obj(to_string(o)) == o);
  }
}

TEST_CASE("object parse errors") {
  CHECK_THROWS_KIND(parse_obj(""), ErrorKind::SyntaxError);
  CHECK_THROWS_KIND(parse_obj("2 +"), ErrorKind::SyntaxError);
  CHECK_THROWS_KIND(parse_obj("(2"), ErrorKind::SyntaxError);
  CHECK_THROWS_KIND(parse_obj("0"), ErrorKind::SyntaxError);
  CHECK_THROWS_KIND(parse_obj("2 3"), ErrorKind::SyntaxError);
}

TEST_CASE("structural names") {
  StructuralName n{};
  REQUIRE(parse_structural_name("swapP", n));
  CHECK(n == StructuralName{Structural::SwapPlus, false});
  REQUIRE(parse_structural_name("distLInv", n));
  CHECK(n == StructuralName{Structural::DistL, true});
  CHECK_FALSE(parse_structural_name("swap", n));
  for (const auto s : kAll) {
    for (const bool inv : {false, true}) {
      StructuralName back{};
      REQUIRE(parse_structural_name(to_string(StructuralName{s, inv}), back));
      CHECK(back == StructuralName{s, inv});
    }
  }
}

TEST_CASE("swap_plus on (1, 2)") {
  const ComplexMatrix p = structural_matrix(Structural::SwapPlus, {Obj::dim(1), Obj::dim(2)});
  CHECK_CLOSE(p, permutation_matrix({2, 0, 1}), 0.0);
}

TEST_CASE("dist_r is the identity layout") {
  for (const auto& [a, b, c] : {std::tuple{1, 1, 1}, std::tuple{2, 3, 2}, std::tuple{3, 1, 4}}) {
    const ComplexMatrix d =
        structural_matrix(Structural::DistR, {Obj::dim(a), Obj::dim(b), Obj::dim(c)});
    CHECK_CLOSE(d, eye((a + b) * c), 0.0);
  }
}

TEST_CASE("dist_l on (2, 1, 1) swaps indices 1 and 2") {
  const ComplexMatrix d =
      structural_matrix(Structural::DistL, {Obj::dim(2), Obj::dim(1), Obj::dim(1)});
  CHECK_CLOSE(d, permutation_matrix({0, 2, 1, 3}), 0.0);
}

TEST_CASE("swap_times sends a*dB + b to b*dA + a") {
  const ComplexMatrix s = structural_matrix(Structural::SwapTimes, {Obj::dim(2), Obj::dim(3)});
  for (Eigen::Index a = 0; a < 2; ++a)
    for (Eigen::Index b = 0; b < 3; ++b) CHECK(s(b * 2 + a, a * 3 + b) == Complex(1.0));
}

TEST_CASE("annihilators and zero unitors are empty") {
  const auto ann = structural_iso({Structural::AnnL, false}, {Obj::dim(3)});
  CHECK(ann.mat.rows() == 0);
  CHECK(ann.mat.cols() == 0);
  CHECK(ann.cod == Obj::zero());
  const auto unit = structural_iso({Structural::UnitRPlus, false}, {Obj::dim(3)});
  CHECK(unit.dom == Obj::dim(3) + Obj::zero());
  CHECK(unit.cod == Obj::dim(3));
  CHECK_CLOSE(unit.mat, eye(3), 0.0);
}

TEST_CASE("every structural iso is a permutation with a matching inverse") {
  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    for (const auto s : kAll) {
      std::vector<Obj> args;
      for (std::size_t i = 0; i < arity(s); ++i) args.push_back(small_obj(rng));
      const auto fwd = structural_iso({s, false}, args);
      const auto inv = structural_iso({s, true}, args);
      CHECK(fwd.dom == inv.cod);
      CHECK(fwd.cod == inv.dom);
      CHECK(fwd.mat.rows() == fwd.cod.size());
      CHECK(fwd.mat.cols() == fwd.dom.size());
      CHECK(is_unitary(fwd.mat, 0.0));
      const auto entries = fwd.mat.cwiseAbs().array();
      CHECK((entries * (entries - 1.0)).abs().sum() == 0.0);
      CHECK_CLOSE(inv.mat * fwd.mat, eye(fwd.dom.size()), 0.0);
    }
  }
}

TEST_CASE("arity is enforced") {
  CHECK_THROWS_KIND(structural_iso({Structural::SwapPlus, false}, {Obj::dim(1)}),
                    ErrorKind::ArityMismatch);
  CHECK_THROWS_KIND(structural_iso({Structural::UnitRTimes, false}, {Obj::dim(1), Obj::dim(2)}),
                    ErrorKind::ArityMismatch);
}

TEST_CASE("pentagon for both associators") {
  Rng rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const Obj a = small_obj(rng), b = small_obj(rng), c = small_obj(rng), d = small_obj(rng);
    for (const auto s : {Structural::AssocPlus, Structural::AssocTimes}) {
      const bool plus = s == Structural::AssocPlus;
      auto op = [plus](const Obj& x, const Obj& y) { return plus ? x + y : x * y; };
      auto lift = [plus](const ComplexMatrix& f, const ComplexMatrix& g) {
        return plus ? direct_sum(f, g) : kron(f, g);
      };
      // ((A B) C) D -> A (B (C D)) in two steps and in three steps.
      const ComplexMatrix two = structural_matrix(s, {a, b, op(c, d)}) *
                                structural_matrix(s, {op(a, b), c, d});
      const ComplexMatrix three = lift(identity(a), structural_matrix(s, {b, c, d})) *
                                  structural_matrix(s, {a, op(b, c), d}) *
                                  lift(structural_matrix(s, {a, b, c}), identity(d));
      CHECK_CLOSE(two, three, 0.0);
    }
  }
}

TEST_CASE("triangle for the additive unit") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Obj a = small_obj(rng), b = small_obj(rng);
    const ComplexMatrix lhs =
        direct_sum(identity(a), structural_matrix(Structural::UnitLPlus, {b})) *
        structural_matrix(Structural::AssocPlus, {a, Obj::zero(), b});
    const ComplexMatrix rhs =
        direct_sum(structural_matrix(Structural::UnitRPlus, {a}), identity(b));
    CHECK_CLOSE(lhs, rhs, 0.0);
  }
}

TEST_CASE("dist_l is natural") {
  Rng rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index a = rng.uniform_int(1, 3), a2 = rng.uniform_int(1, 3);
    const Eigen::Index b = rng.uniform_int(1, 3), b2 = rng.uniform_int(1, 3);
    const Eigen::Index c = rng.uniform_int(1, 3), c2 = rng.uniform_int(1, 3);
    const ComplexMatrix f = random_gaussian_matrix(rng, a2, a);
    const ComplexMatrix g = random_gaussian_matrix(rng, b2, b);
    const ComplexMatrix h = random_gaussian_matrix(rng, c2, c);
    const ComplexMatrix d_src =
        structural_matrix(Structural::DistL, {Obj::dim(a), Obj::dim(b), Obj::dim(c)});
    const ComplexMatrix d_dst =
        structural_matrix(Structural::DistL, {Obj::dim(a2), Obj::dim(b2), Obj::dim(c2)});
    CHECK_CLOSE(d_dst * kron(f, direct_sum(g, h)), direct_sum(kron(f, g), kron(f, h)) * d_src,
                1e-9);
  }
}

TEST_CASE("swap_times is natural") {
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index a = rng.uniform_int(1, 3), a2 = rng.uniform_int(1, 3);
    const Eigen::Index b = rng.uniform_int(1, 3), b2 = rng.uniform_int(1, 3);
    const ComplexMatrix f = random_gaussian_matrix(rng, a2, a);
    const ComplexMatrix g = random_gaussian_matrix(rng, b2, b);
    const ComplexMatrix s = structural_matrix(Structural::SwapTimes, {Obj::dim(a), Obj::dim(b)});
    const ComplexMatrix s2 =
        structural_matrix(Structural::SwapTimes, {Obj::dim(a2), Obj::dim(b2)});
    CHECK_CLOSE(s2 * kron(f, g), kron(g, f) * s, 1e-12);
  }
}

TEST_CASE("interchange maps regroup blocks") {
  Rng rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const Obj a = small_obj(rng), b = small_obj(rng), c = small_obj(rng), d = small_obj(rng);
    const ComplexMatrix fa = random_gaussian_matrix(rng, a.size(), a.size());
    const ComplexMatrix fb = random_gaussian_matrix(rng, b.size(), b.size());
    const ComplexMatrix fc = random_gaussian_matrix(rng, c.size(), c.size());
    const ComplexMatrix fd = random_gaussian_matrix(rng, d.size(), d.size());
    const ComplexMatrix p = oplus_interchange(a, b, c, d);
    CHECK_CLOSE(p * direct_sum(direct_sum(fa, fb), direct_sum(fc, fd)),
                direct_sum(direct_sum(fa, fc), direct_sum(fb, fd)) * p, 1e-12);
    const ComplexMatrix q = otimes_interchange(a, b, c, d);
    CHECK_CLOSE(q * kron(kron(fa, fb), kron(fc, fd)), kron(kron(fa, fc), kron(fb, fd)) * q,
                1e-12);
  }
}
