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

#include <cstdio>
#include <fstream>

#include "qtower/json_io.hpp"

using namespace qtower;
using namespace qtower::testing;

TEST_CASE("matrix JSON layout") {
  const ComplexMatrix m = mat(2, 3, {1, {0, 2}, 0, {-0.5, 0.25}, 3, {0, -1}});
  const Json j = matrix_to_json(m);
  CHECK(j["rows"] == 2);
  CHECK(j["cols"] == 3);
  CHECK(j["data"][0][1][1] == 2.0);
  CHECK(j["data"][1][0][0] == -0.5);
  CHECK_CLOSE(matrix_from_json(j), m, 0.0);
}

TEST_CASE("matrix JSON round trip is exact") {
  Rng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix m =
        random_gaussian_matrix(rng, rng.uniform_int(1, 5), rng.uniform_int(1, 5));
    CHECK_CLOSE(matrix_from_json(parse_json(matrix_to_json(m).dump())), m, 0.0);
  }
}

TEST_CASE("matrix JSON rejects malformed input") {
  CHECK_THROWS_KIND(
      matrix_from_json(parse_json(R"({"rows":2,"cols":2,"data":[[[1,0],[0,0]],[[0,0]]]})")),
      ErrorKind::InvalidJson);
  CHECK_THROWS_KIND(matrix_from_json(parse_json(R"({"rows":1,"cols":1,"data":[[[1,0]],[[0,0]]]})")),
                    ErrorKind::InvalidJson);
  CHECK_THROWS_KIND(matrix_from_json(parse_json(R"({"rows":1,"cols":1,"data":[[["a",0]]]})")),
                    ErrorKind::InvalidJson);
  CHECK_THROWS_KIND(matrix_from_json(parse_json(R"({"rows":1,"cols":1,"data":[[[1]]]})")),
                    ErrorKind::InvalidJson);
  CHECK_THROWS_KIND(matrix_from_json(parse_json(R"({"rows":1,"data":[[[1,0]]]})")),
                    ErrorKind::InvalidJson);
  CHECK_THROWS_KIND(matrix_from_json(parse_json(R"([1,2])")), ErrorKind::InvalidJson);
  CHECK_THROWS_KIND(parse_json("{\"rows\":"), ErrorKind::InvalidJson);
}

TEST_CASE("channel JSON round trip") {
  const KrausChannel k = random_cptn(2, 3, 2, 4);
  const Json j = channel_to_json(k);
  CHECK(j["in"] == 2);
  CHECK(j["out"] == 3);
  CHECK(j["kraus"].size() == 2);
  const KrausChannel back = channel_from_json(parse_json(j.dump()));
  REQUIRE(back.rank() == k.rank());
  for (std::size_t i = 0; i < k.rank(); ++i) CHECK_CLOSE(back.kraus()[i], k.kraus()[i], 0.0);
  CHECK_THROWS_KIND(channel_from_json(parse_json(R"({"in":2,"out":2})")), ErrorKind::InvalidJson);
  CHECK_THROWS_KIND(
      channel_from_json(parse_json(R"({"in":2,"out":2,"kraus":[{"rows":1,"cols":1,"data":[[[1,0]]]}]})")),
      ErrorKind::ShapeMismatch);
}

TEST_CASE("choi JSON") {
  const Json j = choi_to_json(choi(identity_channel(2)));
  CHECK(j["in"] == 2);
  CHECK(j["out"] == 2);
  CHECK(matrix_from_json(j["choi"]).rows() == 4);
}

TEST_CASE("partition JSON") {
  const Partition p{{1, 2, 3}};
  CHECK(partition_to_json(p).dump() == R"({"blocks":[1,2,3]})");
  CHECK(partition_from_json(parse_json(R"({"blocks":[1,2,3]})")) == p);
  CHECK_THROWS_KIND(partition_from_json(parse_json(R"({"blocks":[]})")), ErrorKind::BadPartition);
  CHECK_THROWS_KIND(partition_from_json(parse_json(R"({"blocks":[1,0]})")),
                    ErrorKind::BadPartition);
  CHECK_THROWS_KIND(partition_from_json(parse_json(R"({"blocks":"2"})")), ErrorKind::InvalidJson);
}

TEST_CASE("read_json_file") {
  const std::string path = "qtower_json_io_test.json";
  {
    std::ofstream out(path);
    out << matrix_to_json(hadamard()).dump(2);
  }
  CHECK_CLOSE(matrix_from_json(read_json_file(path)), hadamard(), 0.0);
  std::remove(path.c_str());
  CHECK_THROWS_KIND(read_json_file("does/not/exist.json"), ErrorKind::InvalidJson);
}
