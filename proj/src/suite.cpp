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

#include "qtower/suite.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "qtower/biaffine.hpp"
#include "qtower/channels.hpp"
#include "qtower/cstarsplit.hpp"
#include "qtower/dsl.hpp"
#include "qtower/json_io.hpp"
#include "qtower/lotimes.hpp"
#include "qtower/random.hpp"

namespace qtower {

namespace {

// Failures are collected as text; an empty log means pass.
class Log {
 public:
  void fail(const std::string& what) {
    if (++failures_ <= 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  template <class T>
  void check(bool ok, const T& what) {
    if (!ok) fail(what);
  }
  int failures() const { return failures_; }
  std::string summary(int cases) const {
    std::ostringstream os;
    os << cases << " cases";
    if (failures_ > 0) os << ", " << failures_ << " failed: " << first_;
    return os.str();
  }

 private:
  int failures_ = 0;
  std::string first_;
};

std::string num(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string case_tag(int i) { return "case " + std::to_string(i); }

// Independent of hermitian_eig.
double oracle_min_eigenvalue(const ComplexMatrix& h) {
  if (h.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver((h + h.adjoint()) / 2.0,
                                                       Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

CriterionResult halmos_round_trip(Rng rng) {
  Log log;
  const int cases = 500;
  for (int i = 0; i < cases; ++i) {
    const Eigen::Index rows = rng.uniform_int(1, 6);
    const Eigen::Index cols = rng.uniform_int(1, 6);
    const ComplexMatrix t = random_contraction(rng, rows, cols);
    const TowerMor mor =
        validate_morphism(Obj::dim(cols), Obj::dim(rows), t, Level::Contraction);
    const BiaffineMor d = halmos_dilate(mor);
    const double err = sup_distance(corner(d).mat(), t);
    log.check(err <= 1e-9, case_tag(i) + " corner error " + num(err));
    log.check(is_unitary(d.mat(), 1e-8), case_tag(i) + " dilation not unitary");
  }
  return {"", log.failures() == 0, log.summary(cases)};
}

CriterionResult stinespring_correct(Rng rng) {
  Log log;
  const int cases = 200;
  for (int i = 0; i < cases; ++i) {
    const Eigen::Index in = rng.uniform_int(1, 4);
    const Eigen::Index out = rng.uniform_int(1, 4);
    const auto rank = static_cast<std::size_t>(rng.uniform_int(1, 4));
    const KrausChannel k = random_cptn(in, out, rank, rng.next_u64());
    const StinespringRep s = stinespring(k);
    const ComplexMatrix& t = s.t().mat();
    const Eigen::Index g = s.anc().size();
    double worst = 0.0;
    for (Eigen::Index a = 0; a < in; ++a) {
      for (Eigen::Index b = 0; b < in; ++b) {
        const ComplexMatrix rho = matrix_unit(in, in, a, b);
        const ComplexMatrix dilated =
            partial_trace(t * rho * t.adjoint(), out, g, TraceOut::Second);
        worst = std::max(worst, sup_distance(dilated, apply_channel(k, rho)));
      }
    }
    log.check(worst <= 1e-8, case_tag(i) + " trace error " + num(worst));
    const ComplexMatrix defect = ComplexMatrix::Identity(in, in) - t.adjoint() * t;
    const double lo = oracle_min_eigenvalue(defect);
    log.check(lo >= -1e-9, case_tag(i) + " I - T^dag T has eigenvalue " + num(lo));
  }
  return {"", log.failures() == 0, log.summary(cases)};
}

CriterionResult contraction_classifier(Rng rng) {
  Log log;
  int cases = 0;
  auto agree = [&](const ComplexMatrix& t, const std::string& tag) {
    ++cases;
    const bool verdict = classify_operator(t) != OperatorClass::None;
    const ComplexMatrix defect =
        ComplexMatrix::Identity(t.cols(), t.cols()) - t.adjoint() * t;
    const bool oracle = oracle_min_eigenvalue(defect) >= -tol::kStructural;
    log.check(verdict == oracle, tag + " classifier and eigenvalue test disagree");
    return verdict;
  };
  for (int i = 0; i < 1000; ++i) {
    const Eigen::Index rows = rng.uniform_int(1, 6);
    const Eigen::Index cols = rng.uniform_int(1, 6);
    const double norm = 0.5 + rng.uniform();
    agree(random_with_norm(rng, rows, cols, norm), case_tag(i));
  }
  for (int i = 0; i < 20; ++i) {
    const Eigen::Index rows = rng.uniform_int(1, 6);
    const Eigen::Index cols = rng.uniform_int(1, 6);
    const bool below = agree(random_with_norm(rng, rows, cols, 1.0 - 1e-6), "boundary below");
    const bool above = agree(random_with_norm(rng, rows, cols, 1.0 + 1e-6), "boundary above");
    log.check(below, "norm 1 - 1e-6 rejected");
    log.check(!above, "norm 1 + 1e-6 accepted");
  }
  return {"", log.failures() == 0, log.summary(cases)};
}

double mixing_residual(const KrausChannel& e, const KrausChannel& f, const ComplexMatrix& u) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    ComplexMatrix lhs = ComplexMatrix::Zero(e.out_dim(), e.in_dim());
    if (i < static_cast<Eigen::Index>(e.rank())) lhs = e.kraus()[static_cast<std::size_t>(i)];
    ComplexMatrix rhs = ComplexMatrix::Zero(e.out_dim(), e.in_dim());
    for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(f.rank()); ++j) {
      rhs += u(i, j) * f.kraus()[static_cast<std::size_t>(j)];
    }
    worst = std::max(worst, sup_distance(lhs, rhs));
  }
  return worst;
}

CriterionResult mixing_witnesses(Rng rng) {
  Log log;
  const int cases = 100;
  for (int i = 0; i < cases; ++i) {
    const Eigen::Index in = rng.uniform_int(1, 3);
    const Eigen::Index out = rng.uniform_int(1, 3);
    const Eigen::Index rank = rng.uniform_int(1, 3);
    const Eigen::Index wider = rank + rng.uniform_int(0, 2);
    const KrausChannel k = random_cptn(in, out, static_cast<std::size_t>(rank), rng.next_u64());
    const StinespringRep te = stinespring(k);
    const ComplexMatrix v = random_isometry(rng, wider, rank);
    const ComplexMatrix tf_mat = kron(ComplexMatrix::Identity(out, out), v) * te.t().mat();
    const Obj anc = Obj::dim(wider);
    const StinespringRep tf(
        validate_morphism(te.t().dom(), te.out() * anc, tf_mat, Level::Contraction), anc);
    const KrausChannel e = channel_from_stinespring(te);
    const KrausChannel f = channel_from_stinespring(tf);
    try {
      const ComplexMatrix u = kraus_mixing_unitary(e, f);
      log.check(is_unitary(u, 1e-8), case_tag(i) + " mixing matrix not unitary");
      const double r = mixing_residual(e, f, u);
      log.check(r <= 1e-8, case_tag(i) + " mixing residual " + num(r));
      const ComplexMatrix w = mediating_isometry(te, tf);
      log.check(is_isometry(w, 1e-8), case_tag(i) + " mediator not an isometry");
      const double m = sup_distance(kron(ComplexMatrix::Identity(out, out), w) * te.t().mat(),
                                    tf.t().mat());
      log.check(m <= 1e-8, case_tag(i) + " mediator residual " + num(m));
    } catch (const Error& err) {
      log.fail(case_tag(i) + " " + err.what());
    }
  }
  // Dephasing: {|0><0|, |1><1|} against {I/sqrt2, Z/sqrt2}.
  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2), p1 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  ComplexMatrix z = ComplexMatrix::Identity(2, 2);
  z(1, 1) = -1.0;
  const KrausChannel e(2, 2, {p0, p1});
  const KrausChannel f(2, 2, {r * ComplexMatrix::Identity(2, 2), r * z});
  try {
    const ComplexMatrix u = kraus_mixing_unitary(e, f);
    const double res = mixing_residual(e, f, u);
    log.check(is_unitary(u, 1e-8) && res <= 1e-8, "dephasing residual " + num(res));
  } catch (const Error& err) {
    log.fail(std::string("dephasing ") + err.what());
  }
  return {"", log.failures() == 0, log.summary(cases + 1)};
}

Partition random_partition(Rng& rng) {
  Eigen::Index remaining = rng.uniform_int(1, 8);
  Partition p;
  while (remaining > 0) {
    const Eigen::Index b = rng.uniform_int(1, remaining);
    p.blocks.push_back(b);
    remaining -= b;
  }
  return p;
}

CriterionResult splitting(Rng rng) {
  Log log;
  const int cases = 50;
  for (int i = 0; i < cases; ++i) {
    const Partition p = random_partition(rng);
    const Eigen::Index n = p.total();
    const SplitObject s = measurement_idempotent(p);
    const Splitting sp = split_idempotent(s);
    const BlockChannel id_blocks{identity_channel(n), p, p};
    const BlockChannel e_whole{s.idem(), std::nullopt, std::nullopt};
    log.check(block_channel_equal(compose_block(sp.p, sp.m), id_blocks, 1e-10),
              case_tag(i) + " m . p is not the block identity");
    log.check(block_channel_equal(compose_block(sp.m, sp.p), e_whole, 1e-10),
              case_tag(i) + " p . m is not e");
  }
  return {"", log.failures() == 0, log.summary(cases)};
}

BiaffineMor random_biaffine(Rng& rng, const Obj& dom, const Obj& cod) {
  const Eigen::Index h = rng.uniform_int(std::max<Eigen::Index>(0, cod.size() - dom.size()), 3);
  const Eigen::Index g = dom.size() + h - cod.size();
  return BiaffineMor(dom, cod, Obj::of_dim(h), Obj::of_dim(g),
                     random_unitary(rng, dom.size() + h));
}

CriterionResult biaffine_dagger(Rng rng) {
  Log log;
  const int cases = 100;
  for (int i = 0; i < cases; ++i) {
    const Obj a = Obj::of_dim(rng.uniform_int(0, 3));
    const Obj b = Obj::of_dim(rng.uniform_int(0, 3));
    const Obj c = Obj::of_dim(rng.uniform_int(0, 3));
    const BiaffineMor f = random_biaffine(rng, a, b);
    const BiaffineMor g = random_biaffine(rng, b, c);
    log.check(equiv_biaffine(dagger_biaffine(compose_biaffine(f, g)),
                             compose_biaffine(dagger_biaffine(g), dagger_biaffine(f))),
              case_tag(i) + " dagger does not reverse composition");
    const BiaffineMor ff = dagger_biaffine(dagger_biaffine(f));
    log.check(ff.dom() == f.dom() && ff.cod() == f.cod() && ff.in_anc() == f.in_anc() &&
                  ff.out_anc() == f.out_anc() && sup_distance(ff.mat(), f.mat()) <= 1e-9,
              case_tag(i) + " dagger is not involutive");
    const Obj o = Obj::zero();
    const BiaffineMor via_zero = zero_mor(a, o);
    const BiaffineMor via_compose = compose_biaffine(f, zero_mor(b, o));
    const BiaffineMor via_dagger = dagger_biaffine(random_biaffine(rng, o, a));
    log.check(equiv_biaffine(via_zero, via_compose) && equiv_biaffine(via_compose, via_dagger) &&
                  equiv_biaffine(via_zero, via_dagger),
              case_tag(i) + " morphisms into O differ");
  }
  return {"", log.failures() == 0, log.summary(cases)};
}

DilationMor random_dilation(Rng& rng, bool isometric) {
  const Eigen::Index a = rng.uniform_int(1, 3);
  const Eigen::Index b = rng.uniform_int(1, 3);
  Eigen::Index e = rng.uniform_int(1, 3);
  if (isometric) {
    while (b * e < a) ++e;
  }
  const ComplexMatrix f =
      isometric ? random_isometry(rng, b * e, a) : random_contraction(rng, b * e, a);
  return DilationMor(Obj::dim(a), Obj::dim(b), Obj::dim(e), f);
}

CriterionResult factorization(Rng rng) {
  Log log;
  const int cases = 100;
  for (int i = 0; i < cases; ++i) {
    const bool isometric = i % 2 == 0;
    const DilationMor f = random_dilation(rng, isometric);
    const Factorization fac = factorize(f);
    const KrausChannel through = compose_channels(
        to_channel(lift_contraction(fac.pure)),
        to_channel(projection(Factor::First, f.cod(), fac.anc)));
    log.check(channel_equal(to_channel(f), through), case_tag(i) + " factorization differs");
    if (isometric) {
      const ComplexMatrix c = choi_matrix(to_channel(f));
      const double ratio = c.trace().real() / static_cast<double>(f.dom().size());
      log.check(std::abs(ratio - 1.0) <= 1e-8,
                case_tag(i) + " isometric corner not trace preserving: " + num(ratio));
    }
  }
  return {"", log.failures() == 0, log.summary(cases)};
}

CriterionResult faithfulness(Rng rng) {
  Log log;
  const int cases = 100;
  for (int i = 0; i < cases; ++i) {
    const DilationMor a = random_dilation(rng, i % 4 == 0);
    const bool construct_equal = i % 2 == 0;
    DilationMor b = a;
    if (construct_equal) {
      const Eigen::Index e = a.anc().size();
      const Eigen::Index wider = e + rng.uniform_int(0, 2);
      const ComplexMatrix v = random_isometry(rng, wider, e);
      const Eigen::Index out = a.cod().size();
      b = DilationMor(a.dom(), a.cod(), Obj::dim(wider),
                      kron(ComplexMatrix::Identity(out, out), v) * a.f().mat());
    } else {
      const Eigen::Index e = rng.uniform_int(1, 3);
      b = DilationMor(a.dom(), a.cod(), Obj::dim(e),
                      random_contraction(rng, a.cod().size() * e, a.dom().size()));
    }
    const bool equiv = equiv_dilation(a, b);
    const bool same = channel_equal(to_channel(a), to_channel(b));
    log.check(equiv == same, case_tag(i) + " equivalence and channel equality disagree");
    log.check(equiv == construct_equal, case_tag(i) + " equivalence does not match construction");
    if (equiv) {
      // Witness the equivalence by an ancilla isometry.
      try {
        const StinespringRep sa = as_stinespring(a);
        const StinespringRep sb = as_stinespring(b);
        if (sa.anc().size() <= sb.anc().size()) {
          mediating_isometry(sa, sb);
        } else {
          mediating_isometry(sb, sa);
        }
      } catch (const Error& err) {
        log.fail(case_tag(i) + " no mediator: " + err.what());
      }
    }
    const Eigen::Index in = rng.uniform_int(1, 3);
    const Eigen::Index out = rng.uniform_int(1, 3);
    const KrausChannel k =
        random_cptn(in, out, static_cast<std::size_t>(rng.uniform_int(1, 4)), rng.next_u64());
    const DilationMor hit = from_stinespring(stinespring(k), Obj::dim(in), Obj::dim(out));
    log.check(channel_equal(to_channel(hit), k), case_tag(i) + " channel not hit");
  }
  return {"", log.failures() == 0, log.summary(cases)};
}

ComplexMatrix block_diagonal_state(Rng& rng, Eigen::Index a, Eigen::Index b) {
  const ComplexMatrix x = random_gaussian_matrix(rng, a, a);
  const ComplexMatrix y = random_gaussian_matrix(rng, b, b);
  ComplexMatrix rho = direct_sum(ComplexMatrix(x * x.adjoint()), ComplexMatrix(y * y.adjoint()));
  return rho / rho.trace();
}

CriterionResult cotupling_failure(Rng rng) {
  Log log;
  int cases = 0;
  for (const Eigen::Index d : {1, 2}) {
    ++cases;
    const Obj a = Obj::dim(d);
    const Obj b = Obj::dim(d);
    const DilationMor cand =
        cotuple_candidate(injection(Factor::First, a, b), injection(Factor::Second, a, b));
    const KrausChannel c = to_channel(cand);
    const SplitObject m = measurement_idempotent(Partition{{d, d}});
    const std::string tag = "A = B = " + std::to_string(d);
    double worst = 0.0;
    for (int s = 0; s < 20; ++s) {
      const ComplexMatrix rho = block_diagonal_state(rng, d, d);
      worst = std::max(worst, sup_distance(apply_channel(c, rho), apply_channel(m.idem(), rho)));
    }
    log.check(worst <= 1e-8, tag + " differs from the measurement on blocks by " + num(worst));
    const double dist = choi_distance(c, identity_channel(2 * d));
    log.check(dist > 0.1, tag + " is too close to the identity: " + num(dist));
  }
  return {"", log.failures() == 0, log.summary(cases)};
}

struct Golden {
  std::string lhs;
  std::string rhs;
  dsl::SemLevel level;
  bool equal;
};

std::string identity_literal(Eigen::Index n) {
  return "U[" + matrix_to_json(ComplexMatrix::Identity(n, n)).dump() + "]";
}

CriterionResult dsl_golden(Rng) {
  using dsl::SemLevel;
  Log log;
  int cases = 0;
  const std::vector<Golden> programs = {
      {"H;H", identity_literal(2), SemLevel::U, true},
      {"X;X", identity_literal(2), SemLevel::U, true},
      {"H;Z;H", "X", SemLevel::U, true},
      {"S;S", "Z", SemLevel::U, true},
      {"T;T", "S", SemLevel::U, true},
      {"CX;CX", "swapT(2, 2);swapT(2, 2)", SemLevel::U, true},
      {"swapT(2, 2);(X * Z);swapT(2, 2)", "Z * X", SemLevel::U, true},
      {"H", "X", SemLevel::U, false},
      {"H", "X", SemLevel::C, false},
      {"H", "X", SemLevel::Q, false},
      {"H", "X", SemLevel::S, false},
      {"X", "Z", SemLevel::U, false},
      {"X", "Z", SemLevel::Q, false},
      {"X", "U[{\"rows\":2,\"cols\":2,\"data\":[[[0,0],[-1,0]],[[-1,0],[0,0]]]}]", SemLevel::U,
       false},
      {"X", "U[{\"rows\":2,\"cols\":2,\"data\":[[[0,0],[-1,0]],[[-1,0],[0,0]]]}]", SemLevel::Q,
       true},
      {"H;H", identity_literal(2), SemLevel::Q, true},
      {"zero(2, 2);H", "zero(2, 2)", SemLevel::C, true},
      {"U[{\"rows\":1,\"cols\":1,\"data\":[[[0.5,0]]]}];U[{\"rows\":1,\"cols\":1,\"data\":"
       "[[[0.5,0]]]}]",
       "U[{\"rows\":1,\"cols\":1,\"data\":[[[0.25,0]]]}]", SemLevel::C, true},
      {"X;discard(2)", "discard(2)", SemLevel::Q, true},
      {"H * X;discard(2) * discard(2)", "discard(2) * discard(2)", SemLevel::Q, true},
      {"measure([1,1]);measure([1,1])", "measure([1,1])", SemLevel::S, true},
      {"Z;measure([1,1])", "measure([1,1])", SemLevel::S, true},
      {"H;measure([1,1])", "measure([1,1])", SemLevel::S, false},
      {"H;H", identity_literal(2), SemLevel::S, true},
  };
  for (const auto& g : programs) {
    ++cases;
    const std::string tag = "'" + g.lhs + "' vs '" + g.rhs + "' at " + dsl::to_string(g.level);
    try {
      const bool got = dsl::equal_at_level(dsl::typecheck(dsl::parse(g.lhs)),
                                           dsl::typecheck(dsl::parse(g.rhs)), g.level);
      log.check(got == g.equal, tag + (g.equal ? " should be equal" : " should differ"));
    } catch (const Error& err) {
      log.fail(tag + " raised " + err.what());
    }
  }
  struct Rejected {
    std::string text;
    dsl::SemLevel level;
    ErrorKind kind;
  };
  const std::vector<Rejected> rejected = {
      {"dagger(discard(2))", SemLevel::Q, ErrorKind::LevelError},
      {"discard(2) + discard(2)", SemLevel::Q, ErrorKind::LevelError},
      {"U[{\"rows\":1,\"cols\":1,\"data\":[[[2,0]]]}]", SemLevel::C, ErrorKind::LevelError},
      {"measure([1,1])", SemLevel::Q, ErrorKind::LevelTooLow},
      {"discard(2)", SemLevel::C, ErrorKind::LevelTooLow},
      {"H;CX", SemLevel::U, ErrorKind::TypeMismatch},
      {"H ;; X", SemLevel::U, ErrorKind::SyntaxError},
  };
  for (const auto& r : rejected) {
    ++cases;
    try {
      dsl::evaluate(dsl::typecheck(dsl::parse(r.text)), r.level);
      log.fail("'" + r.text + "' was accepted");
    } catch (const Error& err) {
      log.check(err.kind() == r.kind, "'" + r.text + "' raised " + err.what());
    }
  }
  return {"", log.failures() == 0, log.summary(cases)};
}

struct Entry {
  std::string name;
  std::function<CriterionResult(Rng)> run;
  double budget_seconds;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = {
      {"halmos_round_trip", halmos_round_trip, 5.0},
      {"stinespring", stinespring_correct, 0.0},
      {"contraction_classifier", contraction_classifier, 0.0},
      {"mixing_witnesses", mixing_witnesses, 0.0},
      {"splitting", splitting, 0.0},
      {"biaffine_dagger", biaffine_dagger, 0.0},
      {"factorization", factorization, 0.0},
      {"faithfulness", faithfulness, 0.0},
      {"cotupling_failure", cotupling_failure, 0.0},
      {"dsl_golden", dsl_golden, 30.0},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : entries()) out.push_back(e.name);
    return out;
  }();
  return names;
}

std::vector<CriterionResult> run_suite(std::uint64_t seed, const std::string& filter) {
  std::vector<CriterionResult> results;
  std::uint64_t stream = 0;
  for (const auto& e : entries()) {
    ++stream;
    if (!filter.empty() && e.name.find(filter) == std::string::npos) continue;
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = e.run(Rng(seed, stream));
    } catch (const std::exception& ex) {
      r = {"", false, std::string("uncaught: ") + ex.what()};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.name = e.name;
    if (e.budget_seconds > 0.0 && r.seconds > e.budget_seconds) {
      r.pass = false;
      r.detail += "; over the " + num(e.budget_seconds) + " s budget";
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace qtower
