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

#include "srmkit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "srmkit/constellations.hpp"
#include "srmkit/error.hpp"

namespace srmkit {

namespace {

void require_alpha(double alpha) {
    if (!std::isfinite(alpha) || alpha < 0.0) {
        throw Error(ErrorKind::DomainError, "amplitude must be finite and non-negative");
    }
}

void require_slots(std::size_t m) {
    if (m < 2) {
        throw Error(ErrorKind::DomainError, "PPM needs m >= 2");
    }
}

double require_chi(double chi) {
    if (!std::isfinite(chi) || chi < 0.0 || chi > 1.0) {
        throw Error(ErrorKind::DomainError, "overlap chi must lie in [0, 1]");
    }
    return chi;
}

double sqrt0(double x) { return std::sqrt(std::max(x, 0.0)); }

// x log2 x with 0 log 0 = 0.
double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

struct Sqrt2x2Diag {
    double first = 0.0;
    double second = 0.0;
};

// Diagonal of the principal square root of [[a, c], [conj(c), b]].
Sqrt2x2Diag sqrt2x2_diagonal(double a, double b, Complex c) {
    const double root_det = sqrt0(a * b - std::norm(c));
    const double den = sqrt0(a + b + 2.0 * root_det);
    if (den == 0.0) {
        return {};
    }
    return {(a + root_det) / den, (b + root_det) / den};
}

} // namespace

DoubleBpskOverlaps double_bpsk_overlaps(Complex alpha, Complex beta) {
    return {coherent_inner(alpha, beta), coherent_inner(alpha, -beta), coherent_inner(alpha, -alpha).real(),
            coherent_inner(beta, -beta).real()};
}

DoubleBpskSigma double_bpsk_sigma(Complex alpha, Complex beta, double p) {
    if (!(p > 0.0 && p < 0.5)) {
        throw Error(ErrorKind::InvalidPrior, "double BPSK prior p must lie in (0, 1/2)");
    }
    const double q = 0.5 - p;
    const DoubleBpskOverlaps ov = double_bpsk_overlaps(alpha, beta);
    const double cross = std::sqrt(p * q);
    DoubleBpskSigma out;
    // j = 0 uses the (+) signs; j = 1 flips eta_alpha, eta_beta and xi.
    for (int j = 0; j < 2; ++j) {
        const double sign = j == 0 ? 1.0 : -1.0;
        const Sqrt2x2Diag d = sqrt2x2_diagonal(p * (1.0 + sign * ov.eta_alpha), q * (1.0 + sign * ov.eta_beta),
                                               cross * (ov.chi + sign * ov.xi));
        out.sigma11[static_cast<std::size_t>(j)] = d.first;
        out.sigma22[static_cast<std::size_t>(j)] = d.second;
    }
    out.g1 = 0.5 * (out.sigma11[0] + out.sigma11[1]);
    out.g2 = 0.5 * (out.sigma22[0] + out.sigma22[1]);
    return out;
}

FlaggedValue pc_double_bpsk_equal_amp(double alpha, double delta) {
    require_alpha(alpha);
    if (!std::isfinite(delta) || delta < 0.0 || delta > std::numbers::pi / 2.0 + 1e-12) {
        throw Error(ErrorKind::DomainError, "delta must lie in [0, pi/2]");
    }
    const double a2 = alpha * alpha;
    const Complex rot = std::polar(1.0, delta);
    const Complex chi = std::exp(-a2 * (1.0 - rot));
    const Complex xi = std::exp(-a2 * (1.0 + rot));
    const double eta = std::exp(-2.0 * a2);
    const double plus = std::abs(chi + xi);
    const double minus = std::abs(chi - xi);
    const double s =
        sqrt0(1.0 + eta + plus) + sqrt0(1.0 + eta - plus) + sqrt0(1.0 - eta + minus) + sqrt0(1.0 - eta - minus);
    return {s * s / 16.0, alpha == 0.0 || delta == 0.0};
}

double pam4_trace_gap(double alpha, double p) {
    const DoubleBpskSigma sigma = double_bpsk_sigma(alpha, 3.0 * alpha, p);
    return sigma.g1 - sigma.g2;
}

PriorOptimum optimize_prior_4pam(double alpha, const PriorSearch &search, const Tolerances &tol) {
    require_alpha(alpha);
    if (alpha == 0.0) {
        throw Error(ErrorKind::DomainError, "4-PAM prior optimization needs alpha > 0");
    }
    if (!(search.lower > 0.0 && search.lower < 0.25)) {
        throw Error(ErrorKind::InvalidArgument, "prior bracket offset must lie in (0, 1/4)");
    }
    double lo = search.lower;
    double hi = 0.5 - search.lower;
    double h_lo = pam4_trace_gap(alpha, lo);
    const double h_hi = pam4_trace_gap(alpha, hi);
    if (!(std::signbit(h_lo) != std::signbit(h_hi)) || !std::isfinite(h_lo) || !std::isfinite(h_hi)) {
        std::string scan;
        for (int k = 0; k <= 8; ++k) {
            const double p = lo + (hi - lo) * k / 8.0;
            char buf[64];
            std::snprintf(buf, sizeof buf, " g1-g2(%.4g)=%.4g", p, pam4_trace_gap(alpha, p));
            scan += buf;
        }
        throw Error(ErrorKind::NoRoot, "g1 - g2 has no sign change on the bracket:" + scan);
    }

    PriorOptimum out;
    while (hi - lo > search.tol_root && out.iterations < search.max_iterations) {
        const double mid = 0.5 * (lo + hi);
        const double h_mid = pam4_trace_gap(alpha, mid);
        if (h_mid == 0.0) {
            lo = hi = mid;
            break;
        }
        if (std::signbit(h_mid) == std::signbit(h_lo)) {
            lo = mid;
            h_lo = h_mid;
        } else {
            hi = mid;
        }
        ++out.iterations;
    }
    out.p_star = 0.5 * (lo + hi);
    out.gap = pam4_trace_gap(alpha, out.p_star);

    const GusEnsemble pam = make_double_bpsk(alpha, 3.0 * alpha, out.p_star);
    const ComplexMatrix gram = pam.gram();
    out.certificate = verify_optimality_oracle(gram, srm(gram, tol).factor, tol);
    return out;
}

PpmClosedForm ppm_closed_form(std::size_t m, double alpha) {
    require_alpha(alpha);
    return ppm_closed_form_chi(m, std::exp(-alpha * alpha));
}

PpmClosedForm ppm_closed_form_chi(std::size_t m, double chi) {
    require_slots(m);
    require_chi(chi);
    const double md = static_cast<double>(m);
    const double a = std::sqrt(1.0 + (md - 1.0) * chi);
    const double b = std::sqrt(1.0 - chi);
    const double scale = 1.0 / (md * std::sqrt(md));
    PpmClosedForm out;
    out.c0 = scale * (a + (md - 1.0) * b);
    out.c1 = scale * (a - b);
    out.pc = md * out.c0 * out.c0;
    out.degenerate = chi == 1.0;
    return out;
}

DoublePpmClosedForm double_ppm_closed_form(std::size_t m, double alpha) {
    require_alpha(alpha);
    return double_ppm_closed_form_chi(m, std::exp(-alpha * alpha));
}

DoublePpmClosedForm double_ppm_closed_form_chi(std::size_t m, double chi) {
    require_slots(m);
    require_chi(chi);
    const double md = static_cast<double>(m);
    const double a = std::sqrt(1.0 + chi * chi + 2.0 * (md - 1.0) * chi);
    const double b = std::sqrt(1.0 - chi * chi);
    const double k = 1.0 / std::sqrt(8.0 * md);
    const double l = 1.0 / (2.0 * md * std::sqrt(2.0 * md));
    DoublePpmClosedForm out;
    out.nu0 = k * (a + b);
    out.nu1 = k * (1.0 - chi + b);
    out.xi0 = k * (a - b);
    out.xi1 = k * (1.0 - chi - b);
    out.r0 = l * (a + (md - 1.0) * (1.0 - chi) + md * b);
    out.t0 = l * (a + (md - 1.0) * (1.0 - chi) - md * b);
    out.r_off = l * (a - (1.0 - chi));
    out.pc = 2.0 * md * out.r0 * out.r0;
    out.degenerate = chi == 1.0;
    return out;
}

double mutual_info_ppm(std::size_t m, double alpha) {
    const PpmClosedForm cf = ppm_closed_form(m, alpha);
    const double md = static_cast<double>(m);
    const double info =
        2.0 * std::log2(md) + md * xlog2x(cf.c0 * cf.c0) + md * (md - 1.0) * xlog2x(cf.c1 * cf.c1);
    return std::max(info, 0.0);
}

double mutual_info_double_ppm(std::size_t m, double alpha) {
    const DoublePpmClosedForm cf = double_ppm_closed_form(m, alpha);
    const double md = static_cast<double>(m);
    const double info = 2.0 * std::log2(2.0 * md) + 2.0 * md * xlog2x(cf.r0 * cf.r0) +
                        2.0 * md * xlog2x(cf.t0 * cf.t0) + 4.0 * (md - 1.0) * md * xlog2x(cf.r_off * cf.r_off);
    return std::max(info, 0.0);
}

} // namespace srmkit
