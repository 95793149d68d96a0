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
 * Line-oriented Gram file format for the `check` command:
 *
 *     # comment
 *     n 2
 *     priors 0.3 0.7
 *     inner 0 1 0.5 0.0        # i < j, real and imaginary part of <g_i|g_j>
 *     blocks 0,1               # optional partition, sets separated by spaces
 *
 * The diagonal overlaps are 1, the lower triangle is the conjugate of the
 * upper one and pairs without an `inner` line are orthogonal.
 */

#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "srmkit/constellations.hpp"
#include "srmkit/srm.hpp"

namespace srmkit {

struct GramFile {
    Constellation constellation;
    std::optional<IndexBlocks> blocks;
};

/// Throws ParseError ("line N: ...") for malformed input; the assembled
/// constellation may still raise InvalidPrior / InvalidArgument.
GramFile parse_gram_file(std::istream &in);
GramFile parse_gram_text(std::string_view text);

struct CheckReport {
    ComplexMatrix gram;
    SrmResult srm;
    ChannelStats stats;
    std::optional<OptimalityVerdict> block_verdict;
    OptimalityVerdict factor_verdict;
    OptimalityVerdict oracle_verdict;
};

/// SRM of the file's constellation with every applicable optimality test.
/// A factor with a vanishing diagonal entry is reported as a failed factor
/// test rather than an error.
CheckReport run_check(const GramFile &file, const Tolerances &tol = {});

std::string format_check_text(const CheckReport &report);
std::string format_check_json(const CheckReport &report);

} // namespace srmkit
