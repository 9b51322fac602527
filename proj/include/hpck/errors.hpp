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

#include <stdexcept>
#include <string>

namespace hpck {

// Values are part of the C API (hpck_status) and must not be renumbered.
enum class Errc : int {
  Ok = 0,
  InvalidArgument = 1,
  UnknownRefrigerant = 2,
  MissingData = 3,
  MalformedData = 4,
  InvariantViolation = 5,
  OutOfRange = 6,
  SubSaturation = 7,
  WetCompression = 8,
  NonPhysical = 9,
  OutOfEnvelope = 10,
  InvalidCycle = 11,
  DegenerateCarnot = 12,
  InvalidOverride = 13,
  ConventionMismatch = 14,
  NegativeDestruction = 15,
  ZeroTotal = 16,
  ZeroDenominator = 17,
  ZeroBaseline = 18,
  MissingBaseline = 19,
  ParseError = 20,
  SchemaError = 21,
  IncompleteResults = 22,
  IoError = 23,
  Internal = 99,
};

const char* errc_name(Errc code) noexcept;

// True for problems with the property/metadata files rather than with the
// request itself.
bool is_data_error(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace hpck
