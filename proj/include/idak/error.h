// Copyright 2026 The IDAK Authors
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
#include <string_view>

namespace idak {

enum class ErrorCode {
  kMalformedElement,
  kParameterSearchFailed,
  kInvalidParams,
  kHashFailure,
  kInvalidIdentity,
  kInvalidFlow,
  kRejectedPoint,
  kInvalidEphemeral,
  kDegenerateExponent,
  kStaleOracle,
  kNoKey,
  kNoSuchPrincipal,
  kNoSuchOracle,
  kNotTestable,
  kTestRefused,
  kDecode,
};

// Stable kebab-case name, used in CLI diagnostics and scenario logs.
std::string_view ErrorName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ErrorName(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

#define IDAK_ENFORCE(cond, code, msg)          \
  do {                                         \
    if (!(cond)) {                             \
      throw ::idak::Error((code), (msg));      \
    }                                          \
  } while (0)

}  // namespace idak
