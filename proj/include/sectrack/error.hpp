// Copyright 2026 The sectrack Authors. All rights reserved.
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

#ifndef SECTRACK_ERROR_HPP_
#define SECTRACK_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace sectrack {

enum class ErrorCode {
  constraint_violation,  // precondition on an argument not met
  empty_region,          // operation needs a non-Empty region
  no_preimage,           // value is not a realizable quantizer output
  kind_mismatch,         // belief transition applied to the wrong object kind
  config_invalid,        // scenario config failed validation
  io_error,              // file read/write failure
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace sectrack

#endif  // SECTRACK_ERROR_HPP_
