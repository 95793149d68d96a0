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
 * Dense complex linear algebra used by the measurement code: Hermitian
 * eigendecomposition, principal square roots, PSD certification and
 * circulant matrices diagonalized by the discrete Fourier transform.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace srmkit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Absolute max-norm tolerances shared by all modules.
struct Tolerances {
    double herm = 1e-10;  ///< ||M - M^H||_max for Hermitian inputs
    double psd = 1e-10;   ///< eigenvalues in [-psd, 0] count as zero
    double recon = 1e-8;  ///< reconstruction / factorization residuals
    double cond = 1e-9;   ///< equality-type optimality conditions
};

struct HermitianEig {
    RealVector eigenvalues;     // ascending
    ComplexMatrix eigenvectors; // orthonormal columns
};

struct PsdReport {
    bool psd = false;
    double min_eigenvalue = 0.0;
};

/// Largest absolute entry.
double max_abs(const ComplexMatrix &m);

/// ||M - M^H||_max.
double hermitian_defect(const ComplexMatrix &m);

/// Throws InvalidArgument for a non-square or non-finite matrix.
void require_square_finite(const ComplexMatrix &m, const char *what);

HermitianEig hermitian_eig(const ComplexMatrix &m, const Tolerances &tol = {});

/// Unique Hermitian PSD R with R*R = M. Eigenvalues in [-tol.psd, 0] are
/// clamped to zero; anything more negative raises NotPSD.
ComplexMatrix principal_sqrt(const ComplexMatrix &m, const Tolerances &tol = {});

PsdReport is_psd(const ComplexMatrix &m, double tol, double tol_herm = Tolerances{}.herm);

/// A circulant matrix, stored by its first row: G_ij = c_{(j-i) mod m}.
class CirculantSpec {
  public:
    CirculantSpec() = default;
    explicit CirculantSpec(ComplexVector first_row);

    [[nodiscard]] std::size_t size() const noexcept {
        return static_cast<std::size_t>(first_row_.size());
    }
    [[nodiscard]] const ComplexVector &first_row() const noexcept { return first_row_; }
    [[nodiscard]] Complex at(std::size_t i, std::size_t j) const;
    [[nodiscard]] ComplexMatrix dense() const;

  private:
    ComplexVector first_row_;
};

/// lambda_k = sum_r c_r exp(+i 2 pi k r / m); the eigenvalue paired with the
/// k-th column of fourier_matrix(m).
ComplexVector circulant_eigenvalues(const CirculantSpec &spec);

/// Inverse of circulant_eigenvalues: c_r = (1/m) sum_k lambda_k exp(-i 2 pi k r / m).
CirculantSpec circulant_from_eigenvalues(const ComplexVector &eigenvalues);

/// Unitary F_hk = exp(i 2 pi k h / m) / sqrt(m).
ComplexMatrix fourier_matrix(std::size_t m);

/// True when every row of m is the cyclic shift of the previous one within tol.
bool is_circulant(const ComplexMatrix &m, double tol);

} // namespace srmkit
