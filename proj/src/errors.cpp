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

#include "hpck/errors.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "hpck/refrigerant.hpp"

namespace hpck {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::Ok: return "Ok";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::UnknownRefrigerant: return "UnknownRefrigerant";
    case Errc::MissingData: return "MissingData";
    case Errc::MalformedData: return "MalformedData";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::SubSaturation: return "SubSaturation";
    case Errc::WetCompression: return "WetCompression";
    case Errc::NonPhysical: return "NonPhysical";
    case Errc::OutOfEnvelope: return "OutOfEnvelope";
    case Errc::InvalidCycle: return "InvalidCycle";
    case Errc::DegenerateCarnot: return "DegenerateCarnot";
    case Errc::InvalidOverride: return "InvalidOverride";
    case Errc::ConventionMismatch: return "ConventionMismatch";
    case Errc::NegativeDestruction: return "NegativeDestruction";
    case Errc::ZeroTotal: return "ZeroTotal";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::ZeroBaseline: return "ZeroBaseline";
    case Errc::MissingBaseline: return "MissingBaseline";
    case Errc::ParseError: return "ParseError";
    case Errc::SchemaError: return "SchemaError";
    case Errc::IncompleteResults: return "IncompleteResults";
    case Errc::IoError: return "IoError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_data_error(Errc code) noexcept {
  return code == Errc::MissingData || code == Errc::MalformedData ||
         code == Errc::InvariantViolation;
}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

std::string_view to_string(RefrigerantId id) noexcept {
  switch (id) {
    case RefrigerantId::R134a: return "R134a";
    case RefrigerantId::R152a: return "R152a";
    case RefrigerantId::R450A: return "R450A";
    case RefrigerantId::R513A: return "R513A";
    case RefrigerantId::R1234yf: return "R1234yf";
    case RefrigerantId::R1234ze_E: return "R1234ze(E)";
  }
  return "?";
}

RefrigerantId parse_refrigerant(std::string_view name) {
  auto same = [](std::string_view a, std::string_view b) {
    return a.size() == b.size() &&
           std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
             return std::tolower(static_cast<unsigned char>(x)) ==
                    std::tolower(static_cast<unsigned char>(y));
           });
  };
  for (auto id : kAllRefrigerants)
    if (same(name, to_string(id))) return id;
  fail(Errc::UnknownRefrigerant, "unknown refrigerant '" + std::string(name) + "'");
}

}  // namespace hpck
