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

#include "qtower/json_io.hpp"

#include <fstream>
#include <sstream>

namespace qtower {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidJson, what); }

Eigen::Index natural_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  const Json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    bad(std::string("field '") + key + "' must be a non-negative integer");
  }
  return static_cast<Eigen::Index>(v.get<long long>());
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json data = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    data.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  const Eigen::Index rows = natural_field(j, "rows");
  const Eigen::Index cols = natural_field(j, "cols");
  if (!j.contains("data") || !j.at("data").is_array()) bad("missing array field 'data'");
  const Json& data = j.at("data");
  if (static_cast<Eigen::Index>(data.size()) != rows) {
    bad("'data' has " + std::to_string(data.size()) + " rows, expected " + std::to_string(rows));
  }
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = data[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      bad("ragged row " + std::to_string(i) + ": expected " + std::to_string(cols) + " entries");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Json& z = row[static_cast<std::size_t>(c)];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
        bad("entry (" + std::to_string(i) + ", " + std::to_string(c) + ") must be [re, im]");
      }
      m(i, c) = Complex(z[0].get<double>(), z[1].get<double>());
    }
  }
  if (!all_finite(m)) bad("matrix entries must be finite");
  return m;
}

Json channel_to_json(const KrausChannel& k) {
  Json ops = Json::array();
  for (const auto& m : k.kraus()) ops.push_back(matrix_to_json(m));
  return {{"in", k.in_dim()}, {"out", k.out_dim()}, {"kraus", std::move(ops)}};
}

KrausChannel channel_from_json(const Json& j) {
  const Eigen::Index in = natural_field(j, "in");
  const Eigen::Index out = natural_field(j, "out");
  if (!j.contains("kraus") || !j.at("kraus").is_array()) bad("missing array field 'kraus'");
  std::vector<ComplexMatrix> ops;
  for (const auto& m : j.at("kraus")) ops.push_back(matrix_from_json(m));
  return KrausChannel(in, out, std::move(ops));
}

Json choi_to_json(const ChoiMatrix& c) {
  return {{"in", c.in_dim()}, {"out", c.out_dim()}, {"choi", matrix_to_json(c.mat())}};
}

Json partition_to_json(const Partition& p) { return {{"blocks", p.blocks}}; }

Partition partition_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("blocks") || !j.at("blocks").is_array()) {
    bad("missing array field 'blocks'");
  }
  Partition p;
  for (const auto& n : j.at("blocks")) {
    if (!n.is_number_integer()) bad("partition blocks must be integers");
    p.blocks.push_back(static_cast<Eigen::Index>(n.get<long long>()));
  }
  p.validate();
  return p;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

}  // namespace qtower
