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
 * Square-root measurement (SRM) of a weighted Gram matrix and the
 * optimality tests that apply to it.
 *
 * A measurement for linearly independent pure states is a factorization
 * G = X^H X; X_ki is the amplitude of weighted state i on measurement
 * vector k, so p(i, j) = |X_ij|^2 and Pc = sum_i |X_ii|^2. The SRM is the
 * factorization X = G^{1/2}.
 */

#pragma once

#include <cstddef>
#include <limits>
#include <string_view>
#include <string>
#include <vector>

#include "srmkit/linalg.hpp"

namespace srmkit {

struct SrmResult {
    ComplexMatrix factor;         ///< X = G^{1/2}
    RealMatrix joint;             ///< p(i, j) = |X_ij|^2
    RealVector per_state_correct; ///< p(i, i)
    double pc = 0.0;
};

enum class OptimalityMethod {
    FactorConditions,  ///< pairwise conditions on X plus Y = X X_d^H positive definite
    BlockSqrtDiagonal, ///< equal diagonal of each block's square root
    Oracle,            ///< Y - W_r >= 0 for every r, checked directly
};

std::string_view to_string(OptimalityMethod method) noexcept;

struct OptimalityVerdict {
    bool optimal = false;
    OptimalityMethod method = OptimalityMethod::Oracle;
    /// A decisive eigenvalue fell inside [-tol.psd, tol.psd]; the verdict
    /// is then optimal but on the semidefinite boundary.
    bool boundary = false;
    /// Smallest eigenvalue of Y (factor conditions) or of all Y - W_r
    /// (oracle). NaN when the eigenvalue test was not reached.
    double min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
    /// Largest residual among the equality conditions that were evaluated.
    double max_residual = 0.0;
    /// Populated whenever optimal is false, and for boundary cases.
    std::string witness;
};

using IndexBlocks = std::vector<std::vector<std::size_t>>;

struct ChannelStats {
    RealMatrix joint;
    RealVector input_marginals;
    RealVector output_marginals;
    double mutual_info_bits = 0.0;
};

/// Throws GramSingular when the smallest eigenvalue of G is below tol.psd
/// (weighted states not linearly independent) and InvalidArgument when the
/// trace differs from one by more than 1e-10.
SrmResult srm(const ComplexMatrix &gram, const Tolerances &tol = {});

/// Probabilities of the measurement whose cross-Gram is `factor`.
SrmResult result_from_factor(ComplexMatrix factor);

/// Necessary and sufficient conditions on a factor X of G:
/// X_ii conj(X_ji) == X_ij conj(X_jj) for all i, j, and Y = X X_d^H
/// positive definite. Throws SingularFactor when some |X_ii| <= tol.cond.
OptimalityVerdict check_factor_conditions(const ComplexMatrix &factor, const Tolerances &tol = {});

/// For G block diagonal over `blocks` (a partition of the indices), the SRM
/// is optimal iff the square root of each block has a constant diagonal.
/// Throws NotBlockDiagonal when a cross-block entry exceeds tol.cond and
/// ReducibleBlock when a block's support graph is disconnected.
OptimalityVerdict check_block_sqrt_diagonal(const ComplexMatrix &gram, const IndexBlocks &blocks,
                                            const Tolerances &tol = {});

/// Ground-truth optimality certificate for any factorization G = X^H X. In
/// the measurement basis Y_jk = X_jk conj(X_kk) and (W_r)_jk = X_jr
/// conj(X_kr); X is optimal iff Y is Hermitian and every Y - W_r is PSD.
/// Throws InvalidFactorization when X^H X differs from G by more than tol.recon.
OptimalityVerdict verify_optimality_oracle(const ComplexMatrix &gram, const ComplexMatrix &factor,
                                           const Tolerances &tol = {});

/// Connected components of the support graph {(i, j) : |G_ij| > tol}, each
/// sorted, ordered by smallest index. The finest partition
/// check_block_sqrt_diagonal accepts.
IndexBlocks support_components(const ComplexMatrix &gram, double tol);

/// Joint and marginal laws of the classical channel induced by the
/// measurement, and its mutual information in bits (0 log 0 = 0).
ChannelStats channel_stats(const SrmResult &result);

} // namespace srmkit
