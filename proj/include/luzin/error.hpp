// Copyright 2026 The luzin Authors
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

namespace luzin {

// Failure categories. The C API maps each one onto a status code.
enum class ErrorKind {
  kInvalidArgument,
  kDomain,
  kParse,
  kValidation,
  kConstruction,
  kConfiguration,
  kIo,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error DomainError(const std::string& what) {
  return Error(ErrorKind::kDomain, what);
}
inline Error InvalidArgument(const std::string& what) {
  return Error(ErrorKind::kInvalidArgument, what);
}
inline Error ParseError(const std::string& what) {
  return Error(ErrorKind::kParse, what);
}

}  // namespace luzin
