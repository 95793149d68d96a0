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

#include "srmkit/gus.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "srmkit/error.hpp"

namespace srmkit {

namespace {

void require_dims(const ComplexMatrix &a, std::size_t s, std::size_t m) {
    const auto n = static_cast<Eigen::Index>(s * m);
    if (a.rows() != n || a.cols() != n) {
        throw Error(ErrorKind::InvalidArgument, "matrix is not sm x sm");
    }
}

} // namespace

BlockSpectrum::BlockSpectrum(std::size_t s, std::size_t m, std::vector<ComplexVector> blocks)
    : s_(s), m_(m), blocks_(std::move(blocks)) {
    if (s_ == 0 || m_ == 0 || blocks_.size() != s_ * s_) {
        throw Error(ErrorKind::InvalidArgument, "block spectrum needs s*s blocks with s, m >= 1");
    }
    for (const auto &b : blocks_) {
        if (static_cast<std::size_t>(b.size()) != m_) {
            throw Error(ErrorKind::InvalidArgument, "block spectrum entries must have length m");
        }
    }
}

ComplexMatrix BlockSpectrum::d_block(std::size_t j) const {
    const auto s = static_cast<Eigen::Index>(s_);
    ComplexMatrix d(s, s);
    for (std::size_t h = 0; h < s_; ++h) {
        for (std::size_t k = 0; k < s_; ++k) {
            d(static_cast<Eigen::Index>(h), static_cast<Eigen::Index>(k)) = block(h, k)(static_cast<Eigen::Index>(j));
        }
    }
    return d;
}

ComplexMatrix BlockSpectrum::assemble() const {
    const auto m = static_cast<Eigen::Index>(m_);
    const auto n = static_cast<Eigen::Index>(s_ * m_);
    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    for (std::size_t h = 0; h < s_; ++h) {
        for (std::size_t k = 0; k < s_; ++k) {
            out.block(static_cast<Eigen::Index>(h) * m, static_cast<Eigen::Index>(k) * m, m, m).diagonal() =
                block(h, k);
        }
    }
    return out;
}

ComplexMatrix BlockSpectrum::to_dense() const {
    const auto m = static_cast<Eigen::Index>(m_);
    const auto n = static_cast<Eigen::Index>(s_ * m_);
    ComplexMatrix out(n, n);
    for (std::size_t h = 0; h < s_; ++h) {
        for (std::size_t k = 0; k < s_; ++k) {
            out.block(static_cast<Eigen::Index>(h) * m, static_cast<Eigen::Index>(k) * m, m, m) =
                circulant_from_eigenvalues(block(h, k)).dense();
        }
    }
    return out;
}

BlockSpectrum block_diagonalize(const GusEnsemble &ensemble) {
    const std::size_t s = ensemble.s();
    std::vector<ComplexVector> blocks;
    blocks.reserve(s * s);
    for (std::size_t h = 0; h < s; ++h) {
        for (std::size_t k = 0; k < s; ++k) {
            const ComplexVector first_row = ensemble.gram_block(h, k).row(0).transpose();
            blocks.push_back(circulant_eigenvalues(CirculantSpec(first_row)));
        }
    }
    return {s, ensemble.m(), std::move(blocks)};
}

BlockSpectrum block_sqrt(const BlockSpectrum &spectrum, const Tolerances &tol) {
    const std::size_t s = spectrum.s();
    const std::size_t m = spectrum.m();
    std::vector<ComplexVector> blocks(s * s, ComplexVector(static_cast<Eigen::Index>(m)));
    // The m square roots are independent of each other.
    for (std::size_t j = 0; j < m; ++j) {
        const ComplexMatrix root = principal_sqrt(spectrum.d_block(j), tol);
        for (std::size_t h = 0; h < s; ++h) {
            for (std::size_t k = 0; k < s; ++k) {
                blocks[h * s + k](static_cast<Eigen::Index>(j)) =
                    root(static_cast<Eigen::Index>(h), static_cast<Eigen::Index>(k));
            }
        }
    }
    return {s, m, std::move(blocks)};
}

TraceCriterion trace_criterion(const BlockSpectrum &sqrt_spectrum, const Tolerances &tol) {
    const std::size_t s = sqrt_spectrum.s();
    const auto m = static_cast<double>(sqrt_spectrum.m());
    TraceCriterion out;
    out.g.reserve(s);
    for (std::size_t h = 0; h < s; ++h) {
        out.g.push_back(sqrt_spectrum.block(h, h).real().sum() / m);
    }
    const auto [lo, hi] = std::minmax_element(out.g.begin(), out.g.end());
    out.spread = *hi - *lo;
    out.equal = out.spread <= tol.cond;
    const double g = std::accumulate(out.g.begin(), out.g.end(), 0.0) / static_cast<double>(s);
    out.pc_if_optimal = m * static_cast<double>(s) * g * g;
    return out;
}

FastSrmResult fast_srm(const GusEnsemble &ensemble, const Tolerances &tol) {
    const BlockSpectrum spectrum = block_diagonalize(ensemble);
    for (std::size_t j = 0; j < spectrum.m(); ++j) {
        const double min_eig = hermitian_eig(spectrum.d_block(j), tol).eigenvalues(0);
        if (min_eig < tol.psd) {
            throw Error(ErrorKind::GramSingular, "spectral block " + std::to_string(j) +
                                                     " has eigenvalue " + std::to_string(min_eig));
        }
    }
    const BlockSpectrum root = block_sqrt(spectrum, tol);
    ComplexMatrix x = root.to_dense();
    x = 0.5 * (x + x.adjoint()).eval();
    return {result_from_factor(std::move(x)), trace_criterion(root, tol).g};
}

ComplexMatrix regroup_by_frequency(const ComplexMatrix &lambda, std::size_t s, std::size_t m) {
    require_dims(lambda, s, m);
    ComplexMatrix d(lambda.rows(), lambda.cols());
    for (std::size_t h = 0; h < s; ++h) {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t k = 0; k < s; ++k) {
                for (std::size_t j = 0; j < m; ++j) {
                    d(static_cast<Eigen::Index>(regrouped_index(h, i, s)),
                      static_cast<Eigen::Index>(regrouped_index(k, j, s))) =
                        lambda(static_cast<Eigen::Index>(h * m + i), static_cast<Eigen::Index>(k * m + j));
                }
            }
        }
    }
    return d;
}

ComplexMatrix regroup_by_constellation(const ComplexMatrix &d, std::size_t s, std::size_t m) {
    require_dims(d, s, m);
    ComplexMatrix lambda(d.rows(), d.cols());
    for (std::size_t h = 0; h < s; ++h) {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t k = 0; k < s; ++k) {
                for (std::size_t j = 0; j < m; ++j) {
                    lambda(static_cast<Eigen::Index>(h * m + i), static_cast<Eigen::Index>(k * m + j)) =
                        d(static_cast<Eigen::Index>(regrouped_index(h, i, s)),
                          static_cast<Eigen::Index>(regrouped_index(k, j, s)));
                }
            }
        }
    }
    return lambda;
}

} // namespace srmkit
