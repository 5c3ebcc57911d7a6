// Copyright 2026 The sdim Authors
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

namespace sdim {

enum class ErrorKind {
  kOutOfRange,
  kSelfLoop,
  kDuplicateEdge,
  kMalformed,
  kDisconnected,
  kTooLarge,
  kInvalidParameter,
  kInvalidArgument,
  kInternalInconsistency,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type. Input problems and
// broken preconditions use the first eight kinds; kInternalInconsistency means
// a computed answer failed its own certificate check.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  // Message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }
  bool is_input_error() const noexcept {
    return kind_ != ErrorKind::kInternalInconsistency;
  }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace sdim
