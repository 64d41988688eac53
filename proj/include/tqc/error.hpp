// Copyright 2026 The tqc Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tqc {

enum class ErrorCode {
    NotHermitian,
    NoConvergence,
    BadDimension,
    DimensionMismatch,
    InvalidParams,
    OutOfRange,
    NegativeEigenvalue,
    OptimizerFailure,
    ZeroStartVector,
    LengthMismatch,
    ConfigError,
    IoError,
};

constexpr std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::BadDimension: return "BadDimension";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::NegativeEigenvalue: return "NegativeEigenvalue";
        case ErrorCode::OptimizerFailure: return "OptimizerFailure";
        case ErrorCode::ZeroStartVector: return "ZeroStartVector";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

    /// True for failures of the numerics rather than of the caller's input.
    bool is_numerical() const noexcept {
        return code_ == ErrorCode::NoConvergence || code_ == ErrorCode::NegativeEigenvalue ||
               code_ == ErrorCode::OptimizerFailure;
    }

   private:
    ErrorCode code_;
};

}  // namespace tqc
