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
 * Fast SRM for s constellations sharing one cyclic symmetry.
 *
 * Every m x m block G_hk of the Gram matrix is circulant, so all blocks are
 * diagonalized by the same Fourier matrix: G = F_s Lambda F_s^H with diagonal
 * blocks Lambda_hk. Regrouping the spectral indices as (j, k) turns Lambda
 * into m independent s x s matrices D_j, (D_j)_hk = Lambda_hk[j]; the square
 * root of G is then m small square roots followed by inverse DFTs.
 *
 * The regrouping permutation is never materialized; the spectrum is kept as
 * s*s vectors of length m and D_j is read off on demand.
 */

#pragma once

#include <cstddef>
#include <vector>

#include "srmkit/constellations.hpp"
#include "srmkit/linalg.hpp"
#include "srmkit/srm.hpp"

namespace srmkit {

class BlockSpectrum {
  public:
    /// `blocks[h * s + k]` holds the diagonal of Lambda_hk (length m).
    BlockSpectrum(std::size_t s, std::size_t m, std::vector<ComplexVector> blocks);

    [[nodiscard]] std::size_t s() const noexcept { return s_; }
    [[nodiscard]] std::size_t m() const noexcept { return m_; }
    [[nodiscard]] const ComplexVector &block(std::size_t h, std::size_t k) const { return blocks_[h * s_ + k]; }

    /// (D_j)_hk = Lambda_hk[j].
    [[nodiscard]] ComplexMatrix d_block(std::size_t j) const;

    /// The sm x sm matrix Lambda with diagonal m x m blocks.
    [[nodiscard]] ComplexMatrix assemble() const;

    /// F_s Lambda F_s^H, assembled block by block through inverse DFTs.
    [[nodiscard]] ComplexMatrix to_dense() const;

  private:
    std::size_t s_;
    std::size_t m_;
    std::vector<ComplexVector> blocks_;
};

struct TraceCriterion {
    std::vector<double> g; ///< g_h = Tr(Sigma_hh) / m, the diagonal of (G^{1/2})_hh
    double spread = 0.0;   ///< max_h g_h - min_h g_h
    bool equal = false;    ///< spread <= tol.cond: the SRM is optimal
    double pc_if_optimal = 0.0; ///< m s g^2 with g the mean of g_h
};

struct FastSrmResult {
    SrmResult result;
    std::vector<double> g;
};

/// Lambda_hk[j] is the j-th DFT coefficient of the first row of G_hk.
BlockSpectrum block_diagonalize(const GusEnsemble &ensemble);

/// Sigma = Lambda^{1/2} via the principal square root of every D_j.
/// Throws NotPSD when some D_j has an eigenvalue below -tol.psd.
BlockSpectrum block_sqrt(const BlockSpectrum &spectrum, const Tolerances &tol = {});

TraceCriterion trace_criterion(const BlockSpectrum &sqrt_spectrum, const Tolerances &tol = {});

/// Same SrmResult as srm(ensemble.gram()) without a dense eigensolve.
/// Throws GramSingular when the smallest eigenvalue of any D_j is below tol.psd.
FastSrmResult fast_srm(const GusEnsemble &ensemble, const Tolerances &tol = {});

/// Position of Lambda's row (k, j) (constellation k, frequency j) after
/// regrouping by frequency: j * s + k.
constexpr std::size_t regrouped_index(std::size_t k, std::size_t j, std::size_t s) noexcept { return j * s + k; }

/// D = Pi Lambda Pi^T for a dense sm x sm matrix in constellation-major order.
ComplexMatrix regroup_by_frequency(const ComplexMatrix &lambda, std::size_t s, std::size_t m);

/// Inverse of regroup_by_frequency.
ComplexMatrix regroup_by_constellation(const ComplexMatrix &d, std::size_t s, std::size_t m);

} // namespace srmkit
