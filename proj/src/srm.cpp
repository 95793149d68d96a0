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

#include "srmkit/srm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "srmkit/error.hpp"

namespace srmkit {

namespace {

constexpr double kTraceTol = 1e-10;

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string pair_text(Eigen::Index i, Eigen::Index j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

double min_eigenvalue_of(const ComplexMatrix &h) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (h + h.adjoint()), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::ConvergenceFailure, "Hermitian eigensolver did not converge");
    }
    return solver.eigenvalues()(0);
}

// Y_jk = X_jk conj(X_kk).
ComplexMatrix lagrange_operator(const ComplexMatrix &x) {
    return x * x.diagonal().conjugate().asDiagonal();
}

} // namespace

std::string_view to_string(OptimalityMethod method) noexcept {
    switch (method) {
    case OptimalityMethod::FactorConditions:
        return "factor_conditions";
    case OptimalityMethod::BlockSqrtDiagonal:
        return "block_sqrt_diagonal";
    case OptimalityMethod::Oracle:
        return "oracle";
    }
    return "unknown";
}

SrmResult result_from_factor(ComplexMatrix factor) {
    require_square_finite(factor, "factor");
    SrmResult out;
    out.joint = factor.cwiseAbs2();
    out.per_state_correct = out.joint.diagonal();
    out.pc = out.per_state_correct.sum();
    out.factor = std::move(factor);
    return out;
}

SrmResult srm(const ComplexMatrix &gram, const Tolerances &tol) {
    const HermitianEig eig = hermitian_eig(gram, tol);
    const double trace = gram.trace().real();
    if (std::abs(trace - 1.0) > kTraceTol) {
        throw Error(ErrorKind::InvalidArgument, "weighted Gram matrix has trace " + fmt_double(trace));
    }
    const double min_eig = eig.eigenvalues(0);
    if (min_eig < tol.psd) {
        throw Error(ErrorKind::GramSingular,
                    "smallest Gram eigenvalue " + fmt_double(min_eig) + "; states are not linearly independent");
    }
    const ComplexMatrix root = eig.eigenvectors *
                               eig.eigenvalues.cwiseSqrt().cast<Complex>().asDiagonal() *
                               eig.eigenvectors.adjoint();
    return result_from_factor(0.5 * (root + root.adjoint()));
}

OptimalityVerdict check_factor_conditions(const ComplexMatrix &factor, const Tolerances &tol) {
    require_square_finite(factor, "factor");
    const Eigen::Index n = factor.rows();
    OptimalityVerdict v;
    v.method = OptimalityMethod::FactorConditions;

    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::abs(factor(i, i)) <= tol.cond) {
            throw Error(ErrorKind::SingularFactor, "diagonal entry " + std::to_string(i) + " vanishes");
        }
    }

    Eigen::Index worst_i = 0, worst_j = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const double r =
                std::abs(factor(i, i) * std::conj(factor(j, i)) - factor(i, j) * std::conj(factor(j, j)));
            if (r > v.max_residual) {
                v.max_residual = r;
                worst_i = i;
                worst_j = j;
            }
        }
    }
    if (v.max_residual > tol.cond) {
        v.witness = "pair condition fails at " + pair_text(worst_i, worst_j) + ", residual " +
                    fmt_double(v.max_residual);
        return v;
    }

    v.min_eigenvalue = min_eigenvalue_of(lagrange_operator(factor));
    if (v.min_eigenvalue < -tol.psd) {
        v.witness = "Y = X X_d^H not positive definite, min eigenvalue " + fmt_double(v.min_eigenvalue);
        return v;
    }
    v.optimal = true;
    if (v.min_eigenvalue <= tol.psd) {
        v.boundary = true;
        v.witness = "boundary: min eigenvalue of Y is " + fmt_double(v.min_eigenvalue);
    }
    return v;
}

IndexBlocks support_components(const ComplexMatrix &gram, double tol) {
    require_square_finite(gram, "Gram matrix");
    const auto n = static_cast<std::size_t>(gram.rows());
    std::vector<std::size_t> component(n, n);
    IndexBlocks out;
    for (std::size_t seed = 0; seed < n; ++seed) {
        if (component[seed] != n) {
            continue;
        }
        std::vector<std::size_t> members{seed};
        component[seed] = out.size();
        for (std::size_t head = 0; head < members.size(); ++head) {
            const std::size_t a = members[head];
            for (std::size_t b = 0; b < n; ++b) {
                if (component[b] == n &&
                    std::abs(gram(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b))) > tol) {
                    component[b] = out.size();
                    members.push_back(b);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

OptimalityVerdict check_block_sqrt_diagonal(const ComplexMatrix &gram, const IndexBlocks &blocks,
                                            const Tolerances &tol) {
    require_square_finite(gram, "Gram matrix");
    const auto n = static_cast<std::size_t>(gram.rows());

    std::vector<std::size_t> owner(n, blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) {
            throw Error(ErrorKind::InvalidArgument, "empty index block");
        }
        for (std::size_t idx : blocks[b]) {
            if (idx >= n || owner[idx] != blocks.size()) {
                throw Error(ErrorKind::InvalidArgument, "blocks must partition the state indices");
            }
            owner[idx] = b;
        }
    }
    if (std::find(owner.begin(), owner.end(), blocks.size()) != owner.end()) {
        throw Error(ErrorKind::InvalidArgument, "blocks must cover every state index");
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double a = std::abs(gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
            if (owner[i] != owner[j] && a > tol.cond) {
                throw Error(ErrorKind::NotBlockDiagonal,
                            "entry " + pair_text(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) +
                                " couples two blocks");
            }
        }
    }

    OptimalityVerdict v;
    v.method = OptimalityMethod::BlockSqrtDiagonal;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto &idx = blocks[b];
        const auto k = static_cast<Eigen::Index>(idx.size());
        ComplexMatrix sub(k, k);
        for (Eigen::Index r = 0; r < k; ++r) {
            for (Eigen::Index c = 0; c < k; ++c) {
                sub(r, c) = gram(static_cast<Eigen::Index>(idx[static_cast<std::size_t>(r)]),
                                 static_cast<Eigen::Index>(idx[static_cast<std::size_t>(c)]));
            }
        }
        if (support_components(sub, tol.cond).size() != 1) {
            throw Error(ErrorKind::ReducibleBlock, "block " + std::to_string(b) + " is reducible");
        }
        const RealVector diag = principal_sqrt(sub, tol).diagonal().real();
        const double spread = diag.maxCoeff() - diag.minCoeff();
        if (spread > v.max_residual) {
            v.max_residual = spread;
            if (spread > tol.cond) {
                v.witness = "block " + std::to_string(b) + " square root diagonal spread " + fmt_double(spread);
            }
        }
    }
    v.optimal = v.max_residual <= tol.cond;
    return v;
}

OptimalityVerdict verify_optimality_oracle(const ComplexMatrix &gram, const ComplexMatrix &factor,
                                           const Tolerances &tol) {
    require_square_finite(gram, "Gram matrix");
    require_square_finite(factor, "factor");
    if (gram.rows() != factor.rows()) {
        throw Error(ErrorKind::InvalidFactorization, "factor and Gram matrix differ in size");
    }
    const double recon = max_abs(factor.adjoint() * factor - gram);
    if (recon > tol.recon) {
        throw Error(ErrorKind::InvalidFactorization, "X^H X differs from G by " + fmt_double(recon));
    }

    OptimalityVerdict v;
    v.method = OptimalityMethod::Oracle;
    const ComplexMatrix y = lagrange_operator(factor);
    v.max_residual = hermitian_defect(y);
    if (v.max_residual > tol.cond) {
        v.witness = "Y is not Hermitian, defect " + fmt_double(v.max_residual);
        return v;
    }

    const Eigen::Index n = factor.rows();
    Eigen::Index worst_r = 0;
    v.min_eigenvalue = std::numeric_limits<double>::infinity();
    for (Eigen::Index r = 0; r < n; ++r) {
        const ComplexMatrix w = factor.col(r) * factor.col(r).adjoint();
        const double e = min_eigenvalue_of(y - w);
        if (e < v.min_eigenvalue) {
            v.min_eigenvalue = e;
            worst_r = r;
        }
    }
    if (v.min_eigenvalue < -tol.psd) {
        v.witness = "Y - W_" + std::to_string(worst_r) + " has eigenvalue " + fmt_double(v.min_eigenvalue);
        return v;
    }
    v.optimal = true;
    // Each Y - W_r is singular by construction, so the boundary is judged on Y itself.
    const double y_min = min_eigenvalue_of(y);
    if (y_min <= tol.psd) {
        v.boundary = true;
        v.witness = "boundary: min eigenvalue of Y is " + fmt_double(y_min);
    }
    return v;
}

ChannelStats channel_stats(const SrmResult &result) {
    ChannelStats out;
    out.joint = result.joint;
    out.input_marginals = out.joint.rowwise().sum();
    out.output_marginals = out.joint.colwise().sum().transpose();
    double info = 0.0;
    for (Eigen::Index i = 0; i < out.joint.rows(); ++i) {
        for (Eigen::Index j = 0; j < out.joint.cols(); ++j) {
            const double p = out.joint(i, j);
            if (p > 0.0) {
                info += p * std::log2(p / (out.input_marginals(i) * out.output_marginals(j)));
            }
        }
    }
    out.mutual_info_bits = std::max(info, 0.0);
    return out;
}

} // namespace srmkit
