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

/**
 * @file
 * Error type shared by every srmkit module.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace srmkit {

enum class ErrorKind {
    NotHermitian,
    NotPSD,
    ConvergenceFailure,
    GramSingular,
    SingularFactor,
    NotBlockDiagonal,
    ReducibleBlock,
    InvalidFactorization,
    InvalidPrior,
    DomainError,
    NoRoot,
    CrossCheckMismatch,
    InvalidArgument,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// True for the kinds caused by bad numerical input rather than bad
/// configuration (GramSingular, NoRoot, ConvergenceFailure, ...).
bool is_numerical(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

} // namespace srmkit
