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
 * Weighted pure-state constellations described only by their priors and
 * pairwise overlaps, plus builders for the coherent-state schemes (PSK,
 * double BPSK / 4-PAM, PPM, double PPM).
 *
 * States are never stored as Fock-space vectors. Every quantity the rest of
 * the library computes is a function of the weighted Gram matrix
 * G_ij = sqrt(q_i q_j) <gamma_i|gamma_j>.
 */

#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "srmkit/linalg.hpp"

namespace srmkit {

/// <gamma_i|gamma_j> for unit-norm states.
using OverlapRule = std::function<Complex(std::size_t i, std::size_t j)>;

/// <gamma_h0| S^shift |gamma_k0> for the reference states of a symmetric ensemble.
using BaseOverlapRule = std::function<Complex(std::size_t h, std::size_t k, std::size_t shift)>;

class Constellation {
  public:
    /// Evaluates the rule for every pair. Throws InvalidPrior for priors that
    /// are not positive or do not sum to one within 1e-12, and
    /// InvalidArgument for overlaps that are not unit-diagonal Hermitian.
    Constellation(std::vector<double> priors, const OverlapRule &overlap,
                  std::vector<std::string> labels = {});
    Constellation(std::vector<double> priors, const ComplexMatrix &overlaps,
                  std::vector<std::string> labels = {});

    [[nodiscard]] std::size_t size() const noexcept { return priors_.size(); }
    [[nodiscard]] const std::vector<double> &priors() const noexcept { return priors_; }
    [[nodiscard]] const std::vector<std::string> &labels() const noexcept { return labels_; }
    [[nodiscard]] const ComplexMatrix &overlaps() const noexcept { return overlaps_; }
    [[nodiscard]] Complex overlap(std::size_t i, std::size_t j) const;

  private:
    std::vector<double> priors_;
    ComplexMatrix overlaps_;
    std::vector<std::string> labels_;
};

/// G_ij = sqrt(q_i q_j) <gamma_i|gamma_j>; Hermitian with unit trace.
ComplexMatrix weighted_gram(const Constellation &c);

/// s constellations of m states each, |gamma_ki> = S^i |gamma_k0>, ordered
/// (1,0)...(1,m-1), ..., (s,0)...(s,m-1). State (k, i) has flat index k*m + i.
class GusEnsemble {
  public:
    /// Throws InvalidPrior unless m * sum(constellation_priors) == 1 within
    /// 1e-12 and the base priors replicate them; InvalidArgument when a Gram
    /// block is not circulant.
    GusEnsemble(std::size_t s, std::size_t m, std::vector<double> constellation_priors,
                Constellation base);

    [[nodiscard]] std::size_t s() const noexcept { return s_; }
    [[nodiscard]] std::size_t m() const noexcept { return m_; }
    [[nodiscard]] const std::vector<double> &constellation_priors() const noexcept { return priors_; }
    [[nodiscard]] const Constellation &base() const noexcept { return base_; }
    [[nodiscard]] std::size_t flat_index(std::size_t k, std::size_t i) const noexcept { return k * m_ + i; }
    [[nodiscard]] ComplexMatrix gram() const { return weighted_gram(base_); }
    /// The m x m block G_hk of the weighted Gram matrix.
    [[nodiscard]] ComplexMatrix gram_block(std::size_t h, std::size_t k) const;

  private:
    std::size_t s_;
    std::size_t m_;
    std::vector<double> priors_;
    Constellation base_;
};

/// <alpha|beta> = exp(-(|alpha|^2 + |beta|^2)/2 + conj(alpha) beta).
Complex coherent_inner(Complex alpha, Complex beta);

GusEnsemble make_gus_from_base(std::size_t s, std::size_t m, const BaseOverlapRule &base_overlap,
                               std::vector<double> constellation_priors,
                               std::vector<std::string> labels = {});

/// Equiprobable m-PSK {alpha e^{i 2 pi k / m}} as a single symmetric constellation.
GusEnsemble make_psk(std::size_t m, Complex alpha);

/// States |+-alpha> with prior p each and |+-beta> with prior 1/2 - p each.
/// Throws InvalidPrior unless 0 < p < 1/2.
GusEnsemble make_double_bpsk(Complex alpha, Complex beta, double p);

/// Equiprobable m-slot PPM with pulse amplitude alpha; overlap e^{-alpha^2}
/// between distinct states.
Constellation make_ppm(std::size_t m, double alpha);

/// make_ppm as a single-constellation symmetric ensemble.
GusEnsemble make_ppm_ensemble(std::size_t m, double alpha);

/// PPM with pulses alpha (first constellation) and -alpha (second), all 2m
/// states equiprobable.
GusEnsemble make_double_ppm(std::size_t m, double alpha);

} // namespace srmkit
