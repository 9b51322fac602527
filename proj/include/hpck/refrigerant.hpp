// Copyright 2026 The hpck Authors
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

#include <array>
#include <string_view>

namespace hpck {

enum class RefrigerantId { R134a, R152a, R450A, R513A, R1234yf, R1234ze_E };

inline constexpr std::array<RefrigerantId, 6> kAllRefrigerants = {
    RefrigerantId::R134a,  RefrigerantId::R152a,   RefrigerantId::R450A,
    RefrigerantId::R513A,  RefrigerantId::R1234yf, RefrigerantId::R1234ze_E,
};

// Canonical spelling, e.g. "R1234ze(E)". Also the data file stem.
std::string_view to_string(RefrigerantId id) noexcept;

// Accepts the canonical spelling, case-insensitive. Throws UnknownRefrigerant.
RefrigerantId parse_refrigerant(std::string_view name);

}  // namespace hpck
