// Copyright 2026 The qshor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSHOR_ERROR_H
#define QSHOR_ERROR_H

#include <stdexcept>
#include <string>

namespace qshor {

enum class ErrorCode {
    InvalidArgument = 1,
    Capacity = 2,
    Precondition = 3,
    Io = 4,
};

/// Base of every exception thrown by the library. The code is what the C API
/// hands back to callers.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message) : std::runtime_error(message), code_(code) {
    }
    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string &message) : Error(ErrorCode::InvalidArgument, message) {
    }
};

struct CapacityError : Error {
    explicit CapacityError(const std::string &message) : Error(ErrorCode::Capacity, message) {
    }
};

struct PreconditionError : Error {
    explicit PreconditionError(const std::string &message) : Error(ErrorCode::Precondition, message) {
    }
};

struct IoError : Error {
    explicit IoError(const std::string &message) : Error(ErrorCode::Io, message) {
    }
};

}  // namespace qshor

#endif
