// Copyright 2026 The qlr Authors
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

#ifndef QLR_ERROR_H_
#define QLR_ERROR_H_

#include <stdexcept>
#include <string>

namespace qlr {

/// Failure categories. Values are stable: the C API and the CLI exit codes
/// are derived from them.
enum class ErrorCode {
    kInvalidArgument = 1,
    kParse = 2,
    kConditioning = 3,
    kPostselection = 4,
    kDimension = 5,
    kNotUnitary = 6,
    kNotHermitian = 7,
    kIo = 8,
    kInternal = 9,
};

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

const char *error_code_name(ErrorCode code) noexcept;

}  // namespace qlr

#endif  // QLR_ERROR_H_
