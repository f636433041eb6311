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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qtower/dsl.hpp"
#include "qtower/json_io.hpp"
#include "qtower/suite.hpp"

namespace {

using namespace qtower;

constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

dsl::TypedExpr load_program(const std::string& path) {
  return dsl::typecheck(dsl::parse(read_file(path)));
}

Json biaffine_to_json(const BiaffineMor& f) {
  return {{"dom", to_string(f.dom())},         {"cod", to_string(f.cod())},
          {"in_anc", to_string(f.in_anc())},   {"out_anc", to_string(f.out_anc())},
          {"unitary", matrix_to_json(f.mat())}, {"corner", matrix_to_json(corner(f).mat())}};
}

enum class OutFormat { Auto, Choi, Kraus, Matrix };

OutFormat format_from_path(const std::string& path) {
  if (path.find("choi") != std::string::npos) return OutFormat::Choi;
  if (path.find("kraus") != std::string::npos) return OutFormat::Kraus;
  if (path.find("matrix") != std::string::npos) return OutFormat::Matrix;
  return OutFormat::Auto;
}

// The channel a value denotes, for levels that have one.
KrausChannel value_channel(const dsl::Value& v) {
  switch (v.level) {
    case dsl::SemLevel::U: return unitary_channel(v.unitary());
    case dsl::SemLevel::C: return KrausChannel(v.biaffine().dom().size(),
                                               v.biaffine().cod().size(),
                                               {corner(v.biaffine()).mat()});
    case dsl::SemLevel::Q: return v.channel();
    case dsl::SemLevel::S: return v.split().channel();
  }
  throw Error(ErrorKind::LevelError, "unknown level");
}

Json render(const dsl::Value& v, OutFormat fmt) {
  switch (fmt) {
    case OutFormat::Choi: return choi_to_json(choi(value_channel(v)));
    case OutFormat::Kraus: return channel_to_json(value_channel(v));
    case OutFormat::Matrix:
      if (v.level == dsl::SemLevel::U) return matrix_to_json(v.unitary());
      if (v.level == dsl::SemLevel::C) return matrix_to_json(corner(v.biaffine()).mat());
      throw Error(ErrorKind::LevelError, "matrix output needs level U or C");
    case OutFormat::Auto: break;
  }
  switch (v.level) {
    case dsl::SemLevel::U: return matrix_to_json(v.unitary());
    case dsl::SemLevel::C: return biaffine_to_json(v.biaffine());
    case dsl::SemLevel::Q: return channel_to_json(v.channel());
    case dsl::SemLevel::S: {
      const SplitMor& s = v.split();
      return {{"channel", channel_to_json(s.channel())},
              {"src_idem", channel_to_json(s.src().idem())},
              {"dst_idem", channel_to_json(s.dst().idem())}};
    }
  }
  return {};
}

void emit(const Json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream file(out);
  if (!file) throw std::runtime_error("cannot write " + out);
  file << j.dump(2) << '\n';
}

int cmd_check(const std::string& path) {
  const dsl::TypedExpr t = load_program(path);
  std::cout << to_string(t.dom) << " -> " << to_string(t.cod) << " at level "
            << dsl::to_string(t.min_level) << '\n';
  return 0;
}

int cmd_eval(const std::string& level, const std::string& path, const std::string& out,
             const std::string& format) {
  const dsl::Value v = dsl::evaluate(load_program(path), dsl::parse_level(level));
  OutFormat fmt = format_from_path(out);
  if (format == "choi") fmt = OutFormat::Choi;
  if (format == "kraus") fmt = OutFormat::Kraus;
  if (format == "matrix") fmt = OutFormat::Matrix;
  emit(render(v, fmt), out);
  return 0;
}

int cmd_equal(const std::string& level, const std::string& a, const std::string& b) {
  const bool same = dsl::equal_at_level(load_program(a), load_program(b), dsl::parse_level(level));
  std::cout << (same ? "equal" : "unequal") << '\n';
  return same ? 0 : 1;
}

// Halmos input is a matrix, or a channel with exactly one Kraus operator.
ComplexMatrix contraction_input(const Json& j) {
  if (j.contains("kraus")) {
    const KrausChannel k = channel_from_json(j);
    if (k.rank() != 1) {
      throw Error(ErrorKind::InvalidChannel, "halmos dilation needs exactly one Kraus operator");
    }
    return k.kraus().front();
  }
  return matrix_from_json(j);
}

int cmd_dilate(const std::string& kind, const std::string& path) {
  const Json j = read_json_file(path);
  if (kind == "halmos") {
    const ComplexMatrix t = contraction_input(j);
    const TowerMor mor = validate_morphism(Obj::of_dim(t.cols()), Obj::of_dim(t.rows()), t,
                                           Level::Contraction);
    emit(biaffine_to_json(halmos_dilate(mor)), "");
    return 0;
  }
  const StinespringRep s = stinespring(channel_from_json(j));
  emit({{"in", s.t().dom().size()},
        {"out", s.out().size()},
        {"anc", s.anc().size()},
        {"isometry", matrix_to_json(s.t().mat())}},
       "");
  return 0;
}

int cmd_suite(std::uint64_t seed, const std::string& filter) {
  const auto results = run_suite(seed, filter);
  if (results.empty()) {
    std::cerr << "no criterion matches '" << filter << "'\n";
    return kExitError;
  }
  int failed = 0;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.seconds << " s) "
              << r.detail << '\n';
    if (!r.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum semantics tower: programs, dilations and channels"};
  app.require_subcommand(1);

  std::string file, file2, level, out, format, kind, filter;
  std::uint64_t seed = 0;

  auto* check = app.add_subcommand("check", "Parse and typecheck a program");
  check->add_option("FILE", file, "Program file")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate a program at a level");
  eval->add_option("--level", level, "U, C, Q or S")
      ->required()
      ->check(CLI::IsMember({"U", "C", "Q", "S"}));
  eval->add_option("FILE", file, "Program file")->required();
  eval->add_option("--out", out, "Output file; choi/kraus/matrix in the name picks the format");
  eval->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"choi", "kraus", "matrix"}));

  auto* equal = app.add_subcommand("equal", "Compare two programs at a level");
  equal->add_option("--level", level, "U, C, Q or S")
      ->required()
      ->check(CLI::IsMember({"U", "C", "Q", "S"}));
  equal->add_option("FILE1", file, "First program")->required();
  equal->add_option("FILE2", file2, "Second program")->required();

  auto* dilate = app.add_subcommand("dilate", "Dilate a contraction or a channel");
  dilate->add_option("--kind", kind, "halmos or stinespring")
      ->required()
      ->check(CLI::IsMember({"halmos", "stinespring"}));
  dilate->add_option("CHANNEL", file, "Channel or matrix JSON")->required();

  auto* suite = app.add_subcommand("suite", "Run the property suites");
  suite->add_option("--seed", seed, "Seed")->required();
  suite->add_option("--filter", filter, "Run criteria whose name contains this");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*check) return cmd_check(file);
    if (*eval) return cmd_eval(level, file, out, format);
    if (*equal) return cmd_equal(level, file, file2);
    if (*dilate) return cmd_dilate(kind, file);
    if (*suite) return cmd_suite(seed, filter);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
