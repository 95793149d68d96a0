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

#include "srmkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "srmkit/error.hpp"

namespace srmkit {

namespace {

void require_hermitian(const ComplexMatrix &m, double tol_herm, const char *what) {
    require_square_finite(m, what);
    const double defect = hermitian_defect(m);
    if (defect > tol_herm) {
        throw Error(ErrorKind::NotHermitian,
                    std::string(what) + " deviates from Hermitian by " + std::to_string(defect));
    }
}

// exp(i 2 pi k / m) with the exponent reduced mod m so large products stay exact.
Complex unit_root(std::size_t k, std::size_t m) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k % m) / static_cast<double>(m);
    return {std::cos(angle), std::sin(angle)};
}

} // namespace

double max_abs(const ComplexMatrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermitian_defect(const ComplexMatrix &m) { return max_abs(m - m.adjoint()); }

void require_square_finite(const ComplexMatrix &m, const char *what) {
    if (m.rows() == 0 || m.rows() != m.cols()) {
        throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be a non-empty square matrix");
    }
    if (!m.allFinite()) {
        throw Error(ErrorKind::InvalidArgument, std::string(what) + " has non-finite entries");
    }
}

HermitianEig hermitian_eig(const ComplexMatrix &m, const Tolerances &tol) {
    require_hermitian(m, tol.herm, "hermitian_eig input");
    // Symmetrize so the solver sees an exactly Hermitian matrix.
    const ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::ConvergenceFailure, "Hermitian eigensolver did not converge");
    }
    HermitianEig out{solver.eigenvalues(), solver.eigenvectors()};
    const ComplexMatrix recon =
        out.eigenvectors * out.eigenvalues.cast<Complex>().asDiagonal() * out.eigenvectors.adjoint();
    const double residual = max_abs(recon - m);
    if (residual > tol.recon * std::max(1.0, max_abs(m))) {
        throw Error(ErrorKind::ConvergenceFailure,
                    "eigendecomposition residual " + std::to_string(residual) + " exceeds tolerance");
    }
    return out;
}

ComplexMatrix principal_sqrt(const ComplexMatrix &m, const Tolerances &tol) {
    const HermitianEig eig = hermitian_eig(m, tol);
    const double min_eig = eig.eigenvalues.size() ? eig.eigenvalues(0) : 0.0;
    if (min_eig < -tol.psd) {
        throw Error(ErrorKind::NotPSD, "minimum eigenvalue " + std::to_string(min_eig));
    }
    RealVector roots = eig.eigenvalues.cwiseMax(0.0).cwiseSqrt();
    ComplexMatrix r = eig.eigenvectors * roots.cast<Complex>().asDiagonal() * eig.eigenvectors.adjoint();
    return 0.5 * (r + r.adjoint());
}

PsdReport is_psd(const ComplexMatrix &m, double tol, double tol_herm) {
    require_hermitian(m, tol_herm, "is_psd input");
    const ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::ConvergenceFailure, "Hermitian eigensolver did not converge");
    }
    const double min_eig = solver.eigenvalues()(0);
    return {min_eig >= -tol, min_eig};
}

CirculantSpec::CirculantSpec(ComplexVector first_row) : first_row_(std::move(first_row)) {
    if (first_row_.size() == 0) {
        throw Error(ErrorKind::InvalidArgument, "circulant first row is empty");
    }
    if (!first_row_.allFinite()) {
        throw Error(ErrorKind::InvalidArgument, "circulant first row has non-finite entries");
    }
}

Complex CirculantSpec::at(std::size_t i, std::size_t j) const {
    const std::size_t m = size();
    return first_row_((j + m - i % m) % m);
}

ComplexMatrix CirculantSpec::dense() const {
    const auto m = static_cast<Eigen::Index>(size());
    ComplexMatrix out(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
            out(i, j) = at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        }
    }
    return out;
}

ComplexVector circulant_eigenvalues(const CirculantSpec &spec) {
    const std::size_t m = spec.size();
    ComplexVector lambda = ComplexVector::Zero(static_cast<Eigen::Index>(m));
    for (std::size_t k = 0; k < m; ++k) {
        Complex acc{0.0, 0.0};
        for (std::size_t r = 0; r < m; ++r) {
            acc += spec.first_row()(static_cast<Eigen::Index>(r)) * unit_root(k * r, m);
        }
        lambda(static_cast<Eigen::Index>(k)) = acc;
    }
    return lambda;
}

CirculantSpec circulant_from_eigenvalues(const ComplexVector &eigenvalues) {
    const auto m = static_cast<std::size_t>(eigenvalues.size());
    if (m == 0) {
        throw Error(ErrorKind::InvalidArgument, "empty eigenvalue vector");
    }
    ComplexVector row(static_cast<Eigen::Index>(m));
    for (std::size_t r = 0; r < m; ++r) {
        Complex acc{0.0, 0.0};
        for (std::size_t k = 0; k < m; ++k) {
            acc += eigenvalues(static_cast<Eigen::Index>(k)) * std::conj(unit_root(k * r, m));
        }
        row(static_cast<Eigen::Index>(r)) = acc / static_cast<double>(m);
    }
    return CirculantSpec(std::move(row));
}

ComplexMatrix fourier_matrix(std::size_t m) {
    if (m == 0) {
        throw Error(ErrorKind::InvalidArgument, "Fourier matrix order must be positive");
    }
    const auto n = static_cast<Eigen::Index>(m);
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    ComplexMatrix f(n, n);
    for (std::size_t h = 0; h < m; ++h) {
        for (std::size_t k = 0; k < m; ++k) {
            f(static_cast<Eigen::Index>(h), static_cast<Eigen::Index>(k)) = scale * unit_root(h * k, m);
        }
    }
    return f;
}

bool is_circulant(const ComplexMatrix &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    const Eigen::Index n = m.rows();
    for (Eigen::Index i = 1; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (std::abs(m(i, j) - m(0, (j - i + n) % n)) > tol) {
                return false;
            }
        }
    }
    return true;
}

} // namespace srmkit
