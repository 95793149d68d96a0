// Copyright 2026 The srmkit Authors
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

#include "srmkit/error.hpp"

namespace srmkit {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::NotHermitian:
        return "NotHermitian";
    case ErrorKind::NotPSD:
        return "NotPSD";
    case ErrorKind::ConvergenceFailure:
        return "ConvergenceFailure";
    case ErrorKind::GramSingular:
        return "GramSingular";
    case ErrorKind::SingularFactor:
        return "SingularFactor";
    case ErrorKind::NotBlockDiagonal:
        return "NotBlockDiagonal";
    case ErrorKind::ReducibleBlock:
        return "ReducibleBlock";
    case ErrorKind::InvalidFactorization:
        return "InvalidFactorization";
    case ErrorKind::InvalidPrior:
        return "InvalidPrior";
    case ErrorKind::DomainError:
        return "DomainError";
    case ErrorKind::NoRoot:
        return "NoRoot";
    case ErrorKind::CrossCheckMismatch:
        return "CrossCheckMismatch";
    case ErrorKind::InvalidArgument:
        return "InvalidArgument";
    case ErrorKind::ParseError:
        return "ParseError";
    }
    return "Unknown";
}

bool is_numerical(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::NotHermitian:
    case ErrorKind::NotPSD:
    case ErrorKind::ConvergenceFailure:
    case ErrorKind::GramSingular:
    case ErrorKind::SingularFactor:
    case ErrorKind::NotBlockDiagonal:
    case ErrorKind::ReducibleBlock:
    case ErrorKind::InvalidFactorization:
    case ErrorKind::NoRoot:
    case ErrorKind::CrossCheckMismatch:
        return true;
    default:
        return false;
    }
}

} // namespace srmkit
