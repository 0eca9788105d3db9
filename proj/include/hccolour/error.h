// Copyright 2026 The hccolour Authors
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

#ifndef HCCOLOUR_ERROR_H_
#define HCCOLOUR_ERROR_H_

#include <stdexcept>
#include <string>

namespace hccolour {

enum class ErrorKind {
  kInput,       // malformed or out-of-range arguments
  kIo,          // file or parse failures
  kDomain,      // argument outside a function's domain
  kNumeric,     // iteration failed to converge
  kSize,        // instance above a configured cutoff or budget
  kHypothesis,  // a theorem's hypothesis does not hold for the input
  kState,       // object not in the state an operation requires
  kGiveUp,      // randomized search exhausted its budget
  kInternal,    // violated invariant of the implementation
};

const char* ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void Fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace hccolour

#endif  // HCCOLOUR_ERROR_H_
