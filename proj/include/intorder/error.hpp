// Copyright 2026 The intorder Authors
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

#ifndef INTORDER_ERROR_HPP
#define INTORDER_ERROR_HPP

#include <stdexcept>
#include <string>

namespace intorder {

/// Failure categories. The numeric values double as CLI exit codes and as
/// the C API status codes.
enum class ErrorKind : int {
  Internal = 1,
  InvalidArgument = 2,
  Io = 3,
  Parse = 4,
  Degenerate = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace intorder

#endif  // INTORDER_ERROR_HPP
