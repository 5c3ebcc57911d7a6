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

#include "sdim/error.hpp"

namespace sdim {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kOutOfRange: return "out-of-range";
    case ErrorKind::kSelfLoop: return "self-loop";
    case ErrorKind::kDuplicateEdge: return "duplicate-edge";
    case ErrorKind::kMalformed: return "malformed";
    case ErrorKind::kDisconnected: return "disconnected";
    case ErrorKind::kTooLarge: return "too-large";
    case ErrorKind::kInvalidParameter: return "invalid-parameter";
    case ErrorKind::kInvalidArgument: return "invalid-argument";
    case ErrorKind::kInternalInconsistency: return "internal-inconsistency";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      detail_(message) {}

}  // namespace sdim
