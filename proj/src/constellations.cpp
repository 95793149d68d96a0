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

#include "srmkit/constellations.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

#include "srmkit/error.hpp"

namespace srmkit {

namespace {

constexpr double kPriorSumTol = 1e-12;
constexpr double kOverlapTol = 1e-12;

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(std::to_string(i));
    }
    return out;
}

// Requires positive priors with scale * sum(priors) == 1.
void validate_priors(const std::vector<double> &priors, double scale, const char *what) {
    if (priors.empty()) {
        throw Error(ErrorKind::InvalidPrior, std::string(what) + " are empty");
    }
    for (double q : priors) {
        if (!std::isfinite(q) || q <= 0.0) {
            throw Error(ErrorKind::InvalidPrior, std::string(what) + " must be positive and finite");
        }
    }
    const double sum = std::accumulate(priors.begin(), priors.end(), 0.0);
    if (std::abs(scale * sum - 1.0) > kPriorSumTol) {
        throw Error(ErrorKind::InvalidPrior, std::string(what) + " sum to " + std::to_string(sum) +
                                                 ", expected " + std::to_string(1.0 / scale));
    }
}

void require_amplitude(double alpha) {
    if (!std::isfinite(alpha) || alpha < 0.0) {
        throw Error(ErrorKind::DomainError, "pulse amplitude must be finite and non-negative");
    }
}

// PPM family: constellation h carries amplitude amps[h] in slot i of state (h, i),
// vacuum in the other slots; S cyclically shifts the slots.
BaseOverlapRule ppm_base_overlap(std::vector<Complex> amps) {
    return [amps = std::move(amps)](std::size_t h, std::size_t k, std::size_t shift) {
        if (shift == 0) {
            return coherent_inner(amps[h], amps[k]);
        }
        return coherent_inner(amps[h], 0.0) * coherent_inner(0.0, amps[k]);
    };
}

} // namespace

Constellation::Constellation(std::vector<double> priors, const OverlapRule &overlap,
                             std::vector<std::string> labels)
    : Constellation(
          priors,
          [&] {
              const auto n = static_cast<Eigen::Index>(priors.size());
              ComplexMatrix o(n, n);
              for (Eigen::Index i = 0; i < n; ++i) {
                  for (Eigen::Index j = 0; j < n; ++j) {
                      o(i, j) = overlap(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
                  }
              }
              return o;
          }(),
          std::move(labels)) {}

Constellation::Constellation(std::vector<double> priors, const ComplexMatrix &overlaps,
                             std::vector<std::string> labels)
    : priors_(std::move(priors)), labels_(std::move(labels)) {
    validate_priors(priors_, 1.0, "constellation priors");
    const auto n = static_cast<Eigen::Index>(priors_.size());
    if (overlaps.rows() != n || overlaps.cols() != n) {
        throw Error(ErrorKind::InvalidArgument, "overlap matrix does not match the number of priors");
    }
    if (!overlaps.allFinite()) {
        throw Error(ErrorKind::InvalidArgument, "overlap matrix has non-finite entries");
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::abs(overlaps(i, i) - 1.0) > kOverlapTol) {
            throw Error(ErrorKind::InvalidArgument, "state " + std::to_string(i) + " is not unit-norm");
        }
    }
    if (hermitian_defect(overlaps) > kOverlapTol) {
        throw Error(ErrorKind::InvalidArgument, "overlaps are not conjugate-symmetric");
    }
    overlaps_ = 0.5 * (overlaps + overlaps.adjoint());
    overlaps_.diagonal().setOnes();
    if (labels_.empty()) {
        labels_ = default_labels(priors_.size());
    } else if (labels_.size() != priors_.size()) {
        throw Error(ErrorKind::InvalidArgument, "label count does not match the number of states");
    }
}

Complex Constellation::overlap(std::size_t i, std::size_t j) const {
    return overlaps_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
}

ComplexMatrix weighted_gram(const Constellation &c) {
    const auto n = static_cast<Eigen::Index>(c.size());
    RealVector w(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        w(i) = std::sqrt(c.priors()[static_cast<std::size_t>(i)]);
    }
    const ComplexVector wc = w.cast<Complex>();
    return wc.asDiagonal() * c.overlaps() * wc.asDiagonal();
}

GusEnsemble::GusEnsemble(std::size_t s, std::size_t m, std::vector<double> constellation_priors,
                         Constellation base)
    : s_(s), m_(m), priors_(std::move(constellation_priors)), base_(std::move(base)) {
    if (s_ == 0 || m_ == 0) {
        throw Error(ErrorKind::InvalidArgument, "ensemble needs s >= 1 and m >= 1");
    }
    if (priors_.size() != s_) {
        throw Error(ErrorKind::InvalidPrior, "expected one prior per constellation");
    }
    validate_priors(priors_, static_cast<double>(m_), "constellation priors");
    if (base_.size() != s_ * m_) {
        throw Error(ErrorKind::InvalidArgument, "base constellation must hold s*m states");
    }
    for (std::size_t k = 0; k < s_; ++k) {
        for (std::size_t i = 0; i < m_; ++i) {
            if (std::abs(base_.priors()[flat_index(k, i)] - priors_[k]) > kPriorSumTol) {
                throw Error(ErrorKind::InvalidPrior, "state prior differs from its constellation prior");
            }
        }
    }
    for (std::size_t h = 0; h < s_; ++h) {
        for (std::size_t k = 0; k < s_; ++k) {
            if (!is_circulant(gram_block(h, k), Tolerances{}.recon)) {
                throw Error(ErrorKind::InvalidArgument, "Gram block (" + std::to_string(h) + "," +
                                                            std::to_string(k) + ") is not circulant");
            }
        }
    }
}

ComplexMatrix GusEnsemble::gram_block(std::size_t h, std::size_t k) const {
    const auto m = static_cast<Eigen::Index>(m_);
    const ComplexMatrix block =
        base_.overlaps().block(static_cast<Eigen::Index>(h) * m, static_cast<Eigen::Index>(k) * m, m, m);
    return std::sqrt(priors_[h] * priors_[k]) * block;
}

Complex coherent_inner(Complex alpha, Complex beta) {
    return std::exp(-(std::norm(alpha) + std::norm(beta)) / 2.0 + std::conj(alpha) * beta);
}

GusEnsemble make_gus_from_base(std::size_t s, std::size_t m, const BaseOverlapRule &base_overlap,
                               std::vector<double> constellation_priors, std::vector<std::string> labels) {
    if (s == 0 || m == 0) {
        throw Error(ErrorKind::InvalidArgument, "ensemble needs s >= 1 and m >= 1");
    }
    if (constellation_priors.size() != s) {
        throw Error(ErrorKind::InvalidPrior, "expected one prior per constellation");
    }
    std::vector<double> state_priors;
    state_priors.reserve(s * m);
    for (double q : constellation_priors) {
        state_priors.insert(state_priors.end(), m, q);
    }
    auto overlap = [&](std::size_t a, std::size_t b) {
        const std::size_t h = a / m, i = a % m;
        const std::size_t k = b / m, j = b % m;
        return base_overlap(h, k, (j + m - i) % m);
    };
    if (labels.empty()) {
        for (std::size_t k = 0; k < s; ++k) {
            for (std::size_t i = 0; i < m; ++i) {
                labels.push_back(std::to_string(k) + ":" + std::to_string(i));
            }
        }
    }
    Constellation base(std::move(state_priors), overlap, std::move(labels));
    return GusEnsemble(s, m, std::move(constellation_priors), std::move(base));
}

GusEnsemble make_psk(std::size_t m, Complex alpha) {
    if (m == 0) {
        throw Error(ErrorKind::InvalidArgument, "PSK order must be positive");
    }
    auto rule = [m, alpha](std::size_t, std::size_t, std::size_t shift) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(shift) / static_cast<double>(m);
        return coherent_inner(alpha, alpha * std::polar(1.0, angle));
    };
    return make_gus_from_base(1, m, rule, {1.0 / static_cast<double>(m)});
}

GusEnsemble make_double_bpsk(Complex alpha, Complex beta, double p) {
    if (!(p > 0.0 && p < 0.5)) {
        throw Error(ErrorKind::InvalidPrior, "double BPSK prior p must lie in (0, 1/2)");
    }
    const std::array<Complex, 2> amps{alpha, beta};
    // S = exp(i pi a^dag a): S|a> = |-a>
    auto rule = [amps](std::size_t h, std::size_t k, std::size_t shift) {
        return coherent_inner(amps[h], shift == 0 ? amps[k] : -amps[k]);
    };
    return make_gus_from_base(2, 2, rule, {p, 0.5 - p}, {"+alpha", "-alpha", "+beta", "-beta"});
}

Constellation make_ppm(std::size_t m, double alpha) { return make_ppm_ensemble(m, alpha).base(); }

GusEnsemble make_ppm_ensemble(std::size_t m, double alpha) {
    if (m < 2) {
        throw Error(ErrorKind::InvalidArgument, "PPM needs at least two slots");
    }
    require_amplitude(alpha);
    return make_gus_from_base(1, m, ppm_base_overlap({alpha}), {1.0 / static_cast<double>(m)});
}

GusEnsemble make_double_ppm(std::size_t m, double alpha) {
    if (m < 2) {
        throw Error(ErrorKind::InvalidArgument, "PPM needs at least two slots");
    }
    require_amplitude(alpha);
    const double q = 1.0 / (2.0 * static_cast<double>(m));
    return make_gus_from_base(2, m, ppm_base_overlap({alpha, -alpha}), {q, q});
}

} // namespace srmkit
