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
 * Tabular datasets behind the figure and sweep commands, and their CSV /
 * JSON serialization.
 *
 * Numbers are written with 12 significant digits ("%.12g"); the JSON form
 * carries the same rounded values, so both encodings hold identical rows.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "srmkit/linalg.hpp"

namespace srmkit {

/// Inclusive linear grid on the mean photon number |alpha|^2.
struct PhotonGrid {
    double start = 0.1;
    double stop = 10.0;
    std::size_t count = 100;

    /// Parses "start:stop:count". Throws InvalidArgument on malformed text,
    /// negative values, stop < start or count == 0.
    static PhotonGrid parse(std::string_view text);
    [[nodiscard]] std::vector<double> values() const;
};

/// Empty cells serialize as "" in CSV and null in JSON.
using Cell = std::variant<std::monostate, double, std::int64_t, std::string>;

struct Dataset {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

std::string format_number(double value);
std::string to_csv(const Dataset &data);
std::string to_json(const Dataset &data);

/// Parses a comma-separated list of angles; each entry is a number or a
/// multiple/fraction of pi ("pi/8", "3pi/8", "0.5*pi").
std::vector<double> parse_angle_list(std::string_view text);
std::vector<std::size_t> parse_size_list(std::string_view text);

std::vector<double> default_fig1_deltas();

/// Double BPSK with |alpha| = |beta|, p = 1/4: columns alpha_sq, delta, pc,
/// pe, degenerate. Closed-form Pc, cross-checked against fast_srm on every
/// non-degenerate row (CrossCheckMismatch beyond tol.recon).
Dataset fig1_dataset(const PhotonGrid &grid, const std::vector<double> &deltas, const Tolerances &tol = {});

/// 4-PAM with the SRM-optimal prior: columns alpha_sq, p_star, pc, pe,
/// status. Rows whose optimization fails keep status no_root / singular /
/// uncertified and empty numeric cells; the run continues.
Dataset pam4_dataset(const PhotonGrid &grid, const Tolerances &tol = {});

/// PPM vs double PPM: columns alpha_sq, m, scheme, pe, mutual_info_bits,
/// ordered by m, then scheme (ppm, double_ppm), then grid index.
Dataset ppm_dataset(const PhotonGrid &grid, const std::vector<std::size_t> &ms, const Tolerances &tol = {});

enum class SweepScheme { Psk, Ppm, DoublePpm, DoubleBpsk, Pam4 };

SweepScheme parse_scheme(std::string_view name);
std::string_view to_string(SweepScheme scheme) noexcept;

struct SweepConfig {
    SweepScheme scheme = SweepScheme::Psk;
    PhotonGrid grid;
    std::vector<std::size_t> ms{4};   ///< psk, ppm, double_ppm
    std::vector<double> deltas{0.0};  ///< double_bpsk
    std::optional<double> prior;      ///< double_bpsk (default 1/4), pam4 (default: optimized)
};

/// Generic pipeline sweep (fast_srm, channel_stats, oracle verdict):
/// columns scheme, m, delta, p, alpha_sq, pc, pe, mutual_info_bits,
/// srm_optimal, status.
Dataset sweep_dataset(const SweepConfig &config, const Tolerances &tol = {});

} // namespace srmkit
