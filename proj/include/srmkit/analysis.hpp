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
 * Closed-form results for the coherent-state case studies (double BPSK,
 * 4-PAM, PPM, double PPM) and the numerical prior optimization for 4-PAM.
 *
 * Each closed form is independent of the generic srm / fast_srm pipeline
 * and is used to cross-check it. Amplitudes are the real pulse amplitude
 * alpha, so the mean photon number is alpha^2. Logarithms are base 2.
 */

#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "srmkit/linalg.hpp"
#include "srmkit/srm.hpp"

namespace srmkit {

/// A closed-form value together with a flag for the degenerate inputs
/// (alpha = 0, delta = 0) where the states are linearly dependent and the
/// pipeline raises GramSingular.
struct FlaggedValue {
    double value = 0.0;
    bool degenerate = false;
};

struct DoubleBpskOverlaps {
    Complex chi;       ///< <alpha|beta>
    Complex xi;        ///< <alpha|-beta>
    double eta_alpha;  ///< <alpha|-alpha>
    double eta_beta;   ///< <beta|-beta>
};

DoubleBpskOverlaps double_bpsk_overlaps(Complex alpha, Complex beta);

/// Diagonals of Sigma_11 and Sigma_22 for double BPSK with prior p on
/// |+-alpha>, from the closed-form square root of each 2x2 D_j:
/// D^{1/2} = (D + sqrt(det D) I) / sqrt(tr D + 2 sqrt(det D)).
struct DoubleBpskSigma {
    std::array<double, 2> sigma11{};
    std::array<double, 2> sigma22{};
    double g1 = 0.0; ///< Tr(Sigma_11) / 2
    double g2 = 0.0; ///< Tr(Sigma_22) / 2
};

DoubleBpskSigma double_bpsk_sigma(Complex alpha, Complex beta, double p);

/// Pc of double BPSK with beta = alpha e^{i delta} and p = q = 1/4.
/// Requires alpha >= 0 and delta in [0, pi/2]; flagged degenerate at
/// alpha = 0 or delta = 0.
FlaggedValue pc_double_bpsk_equal_amp(double alpha, double delta);

struct PriorSearch {
    double lower = 1e-6;        ///< bracket [lower, 1/2 - lower]
    double tol_root = 1e-12;    ///< bisection stops when the bracket is this narrow
    std::size_t max_iterations = 200;
};

struct PriorOptimum {
    double p_star = 0.0;
    double gap = 0.0;         ///< g1(p*) - g2(p*) from the closed form
    std::size_t iterations = 0;
    OptimalityVerdict certificate; ///< oracle verdict on the SRM at p*
};

/// Prior p of |+-alpha> that makes the SRM optimal for 4-PAM
/// {+-alpha, +-3 alpha}: the root of g1(p) - g2(p) found by bisection.
/// Throws NoRoot (with the bracket scan) when g1 - g2 does not change sign.
PriorOptimum optimize_prior_4pam(double alpha, const PriorSearch &search = {},
                                 const Tolerances &tol = {});

/// g1(p) - g2(p) for 4-PAM with amplitude alpha.
double pam4_trace_gap(double alpha, double p);

struct PpmClosedForm {
    double c0 = 0.0; ///< diagonal of G^{1/2}
    double c1 = 0.0; ///< common off-diagonal of G^{1/2}
    double pc = 0.0; ///< m c0^2
    bool degenerate = false;
};

PpmClosedForm ppm_closed_form(std::size_t m, double alpha);
/// Same, parameterized by the overlap chi = e^{-alpha^2} in [0, 1].
PpmClosedForm ppm_closed_form_chi(std::size_t m, double chi);

struct DoublePpmClosedForm {
    double nu0 = 0.0, nu1 = 0.0; ///< Sigma_0 = diag(nu0, nu1, ..., nu1)
    double xi0 = 0.0, xi1 = 0.0; ///< Sigma_1 = diag(xi0, xi1, ..., xi1)
    double r0 = 0.0;             ///< diagonal of R = (G^{1/2})_11
    double t0 = 0.0;             ///< diagonal of T = (G^{1/2})_12
    double r_off = 0.0;          ///< common off-diagonal of R and T
    double pc = 0.0;             ///< 2 m r0^2
    bool degenerate = false;
};

DoublePpmClosedForm double_ppm_closed_form(std::size_t m, double alpha);
DoublePpmClosedForm double_ppm_closed_form_chi(std::size_t m, double chi);

/// Mutual information of the PPM / double PPM channel under the SRM, in bits.
double mutual_info_ppm(std::size_t m, double alpha);
double mutual_info_double_ppm(std::size_t m, double alpha);

/// One point of a performance curve against the mean photon number.
struct SweepPoint {
    double photon_number = 0.0; ///< |alpha|^2
    double parameter = 0.0;     ///< delta, m or p, depending on the scheme
    double pc = 0.0;
    double pe = 0.0;
    std::optional<double> mutual_info_bits;
};

} // namespace srmkit
