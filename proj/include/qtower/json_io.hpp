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

#include <json.hpp>

#include "qtower/channels.hpp"
#include "qtower/cstarsplit.hpp"

namespace qtower {

using Json = nlohmann::json;

/// {"rows": n, "cols": m, "data": [[[re, im], ...], ...]}
Json matrix_to_json(const ComplexMatrix& m);

/// Throws InvalidJson on ragged rows, missing fields or non-numeric entries.
ComplexMatrix matrix_from_json(const Json& j);

/// {"in": n, "out": m, "kraus": [<matrix>, ...]}
Json channel_to_json(const KrausChannel& k);
KrausChannel channel_from_json(const Json& j);

/// {"in": n, "out": m, "choi": <matrix>}
Json choi_to_json(const ChoiMatrix& c);

/// {"blocks": [n1, ...]}
Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

/// Throws InvalidJson with the nlohmann diagnostic on malformed text.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace qtower
