// Copyright 2026 The FOQCS Authors
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
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "foqcs/baseline.hpp"
#include "foqcs/block_encoding.hpp"
#include "foqcs/circuit.hpp"
#include "foqcs/dicke.hpp"
#include "foqcs/encoder.hpp"
#include "foqcs/pauli.hpp"

namespace foqcs {

using json = nlohmann::json;

// All *_from_json functions throw ParseError on malformed input and
// DomainError on well-formed but invalid values.

json pauli_sum_to_json(const PauliSum& h);
PauliSum pauli_sum_from_json(const json& j);

json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const json& j);

json layout_to_json(const Circuit& c);
/// Circuit JSON plus normalization, layout and postselect pattern.
json block_encoding_to_json(const BlockEncoding& be);
BlockEncoding block_encoding_from_json(const json& j);

json heisenberg_to_json(const HeisenbergParams& p);
HeisenbergParams heisenberg_from_json(const json& j);
json spin_glass_to_json(const SpinGlassParams& p);
SpinGlassParams spin_glass_from_json(const json& j);

struct PrepRequest {
  std::string kind;  // d1, d1u, d2k, d2ku, d1d, d1du, d2kd, d2kdu
  int n = 2;
  int k = 0;
  std::optional<AmplitudeList> alphas;
};

PrepRequest prep_request_from_json(const json& j);
json prep_request_to_json(const PrepRequest& r);
Circuit build_prep(const PrepRequest& r);
/// Closed-form target state of a preparation request.
std::map<std::uint64_t, Complex> expected_prep_state(const PrepRequest& r);

/// Parses a whole file; throws ParseError when it cannot be read or parsed.
json read_json_file(const std::string& path);

}  // namespace foqcs
