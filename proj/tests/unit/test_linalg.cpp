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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "srmkit/error.hpp"
#include "srmkit/linalg.hpp"
#include "support/oracles.hpp"

using namespace srmkit;
using Catch::Matchers::WithinAbs;

namespace {

ComplexMatrix binary_gram(double chi) {
    ComplexMatrix g(2, 2);
    g << 0.5, 0.5 * chi, 0.5 * chi, 0.5;
    return g;
}

ComplexVector vec(std::initializer_list<Complex> xs) {
    ComplexVector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (auto x : xs) {
        v(i++) = x;
    }
    return v;
}

} // namespace

TEST_CASE("hermitian_eig on identity, diagonal and binary Gram", "[linalg]") {
    auto e = hermitian_eig(ComplexMatrix::Identity(3, 3));
    for (int i = 0; i < 3; ++i) {
        CHECK_THAT(e.eigenvalues(i), WithinAbs(1.0, 1e-14));
    }
    CHECK(max_abs(e.eigenvectors * e.eigenvectors.adjoint() - ComplexMatrix::Identity(3, 3)) < 1e-12);

    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = 5.0;
    d(1, 1) = 2.0;
    e = hermitian_eig(d);
    CHECK_THAT(e.eigenvalues(0), WithinAbs(2.0, 1e-14));
    CHECK_THAT(e.eigenvalues(1), WithinAbs(5.0, 1e-14));

    e = hermitian_eig(binary_gram(0.5));
    CHECK_THAT(e.eigenvalues(0), WithinAbs(0.25, 1e-14));
    CHECK_THAT(e.eigenvalues(1), WithinAbs(0.75, 1e-14));
}

TEST_CASE("hermitian_eig rejects non-Hermitian and non-finite input", "[linalg]") {
    ComplexMatrix m(2, 2);
    m << 1.0, 0.5, 0.2, 1.0;
    try {
        hermitian_eig(m);
        FAIL("expected NotHermitian");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::NotHermitian);
    }
    m(0, 1) = std::nan("");
    CHECK_THROWS_AS(hermitian_eig(m), Error);
    CHECK_THROWS_AS(hermitian_eig(ComplexMatrix(2, 3)), Error);
}

TEST_CASE("hermitian_eig eigenvectors are unitary and reconstruct", "[linalg][property]") {
    std::mt19937_64 rng(11);
    for (Eigen::Index n : {1, 2, 5, 16, 64}) {
        const ComplexMatrix a = srmkit_test::random_complex(rng, n, n);
        const ComplexMatrix h = 0.5 * (a + a.adjoint());
        const auto e = hermitian_eig(h);
        const auto id = ComplexMatrix::Identity(n, n);
        CHECK(max_abs(e.eigenvectors.adjoint() * e.eigenvectors - id) < 1e-8);
        const ComplexMatrix rec = e.eigenvectors * e.eigenvalues.cast<Complex>().asDiagonal() * e.eigenvectors.adjoint();
        CHECK(max_abs(rec - h) < 1e-8);
        for (Eigen::Index i = 1; i < n; ++i) {
            CHECK(e.eigenvalues(i - 1) <= e.eigenvalues(i));
        }
    }
}

TEST_CASE("principal_sqrt examples", "[linalg]") {
    CHECK(max_abs(principal_sqrt(ComplexMatrix::Identity(4, 4)) - ComplexMatrix::Identity(4, 4)) < 1e-14);

    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = 4.0;
    d(1, 1) = 9.0;
    const ComplexMatrix r = principal_sqrt(d);
    CHECK_THAT(r(0, 0).real(), WithinAbs(2.0, 1e-14));
    CHECK_THAT(r(1, 1).real(), WithinAbs(3.0, 1e-14));
    CHECK(std::abs(r(0, 1)) < 1e-14);

    const double chi = 0.3;
    const ComplexMatrix x = principal_sqrt(binary_gram(chi)) * std::sqrt(2.0);
    const double a = x(0, 0).real();
    const double b = x(0, 1).real();
    CHECK_THAT(x(1, 1).real(), WithinAbs(a, 1e-14));
    CHECK_THAT(x(1, 0).real(), WithinAbs(b, 1e-14));
    CHECK_THAT(a * a + b * b, WithinAbs(1.0, 1e-14));
    CHECK_THAT(2 * a * b, WithinAbs(chi, 1e-14));
}

TEST_CASE("principal_sqrt clamps tiny negative eigenvalues and rejects larger ones", "[linalg]") {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -5e-11;
    const ComplexMatrix r = principal_sqrt(m);
    CHECK(std::abs(r(1, 1)) == 0.0);

    m(1, 1) = -1e-6;
    try {
        principal_sqrt(m);
        FAIL("expected NotPSD");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::NotPSD);
    }
}

TEST_CASE("principal_sqrt squares back for random PSD matrices", "[linalg][property]") {
    std::mt19937_64 rng(12);
    for (Eigen::Index n : {1, 3, 8, 32, 64}) {
        const ComplexMatrix a = srmkit_test::random_complex(rng, n, n);
        const ComplexMatrix p = a.adjoint() * a / static_cast<double>(n);
        const ComplexMatrix r = principal_sqrt(p);
        CHECK(hermitian_defect(r) < 1e-12);
        CHECK(max_abs(r * r - p) < 1e-8);
        CHECK(is_psd(r, 1e-10).psd);
    }
}

TEST_CASE("principal_sqrt matches the Denman-Beavers iteration", "[linalg][oracle]") {
    std::mt19937_64 rng(13);
    for (Eigen::Index n : {2, 4, 8, 16}) {
        const ComplexMatrix g = srmkit_test::random_gram(rng, n);
        CHECK(max_abs(principal_sqrt(g) - srmkit_test::db_sqrt(g)) < 1e-10);
    }
}

TEST_CASE("is_psd examples", "[linalg]") {
    auto r = is_psd(ComplexMatrix::Identity(2, 2), 1e-10);
    CHECK(r.psd);
    CHECK_THAT(r.min_eigenvalue, WithinAbs(1.0, 1e-14));

    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = -0.5;
    r = is_psd(d, 1e-10);
    CHECK_FALSE(r.psd);
    CHECK_THAT(r.min_eigenvalue, WithinAbs(-0.5, 1e-14));

    ComplexMatrix m(2, 2);
    m << 1.0, 2.0, 2.0, 1.0;
    r = is_psd(m, 1e-10);
    CHECK_FALSE(r.psd);
    CHECK_THAT(r.min_eigenvalue, WithinAbs(-1.0, 1e-14));

    m << 1.0, 2.0, 0.0, 1.0;
    CHECK_THROWS_AS(is_psd(m, 1e-10), Error);
}

TEST_CASE("circulant_eigenvalues examples", "[linalg]") {
    auto ev = circulant_eigenvalues(CirculantSpec(vec({1.0, 0.0, 0.0})));
    for (auto l : ev) {
        CHECK(std::abs(l - Complex(1.0)) < 1e-15);
    }

    ev = circulant_eigenvalues(CirculantSpec(vec({1.0, 0.2, 0.2})));
    CHECK(std::abs(ev(0) - Complex(1.4)) < 1e-14);
    CHECK(std::abs(ev(1) - Complex(0.8)) < 1e-14);
    CHECK(std::abs(ev(2) - Complex(0.8)) < 1e-14);

    const Complex c0(0.7, 0.1), c1(-0.2, 0.4);
    ev = circulant_eigenvalues(CirculantSpec(vec({c0, c1})));
    CHECK(std::abs(ev(0) - (c0 + c1)) < 1e-15);
    CHECK(std::abs(ev(1) - (c0 - c1)) < 1e-15);
}

TEST_CASE("circulant_eigenvalues uses the positive-exponent convention", "[linalg]") {
    const ComplexVector row = vec({0.0, 1.0, 0.0, 0.0});
    const auto ev = circulant_eigenvalues(CirculantSpec(row));
    CHECK(std::abs(ev(1) - Complex(0.0, 1.0)) < 1e-15);
}

TEST_CASE("circulant_from_eigenvalues examples", "[linalg]") {
    auto row = circulant_from_eigenvalues(vec({1.0, 1.0, 1.0})).first_row();
    CHECK(std::abs(row(0) - Complex(1.0)) < 1e-15);
    CHECK(std::abs(row(1)) < 1e-15);
    CHECK(std::abs(row(2)) < 1e-15);

    row = circulant_from_eigenvalues(vec({1.4, 0.8, 0.8})).first_row();
    CHECK(std::abs(row(0) - Complex(1.0)) < 1e-14);
    CHECK(std::abs(row(1) - Complex(0.2)) < 1e-14);
    CHECK(std::abs(row(2) - Complex(0.2)) < 1e-14);

    row = circulant_from_eigenvalues(vec({2.5, 2.5})).first_row();
    CHECK(std::abs(row(0) - Complex(2.5)) < 1e-15);
    CHECK(std::abs(row(1)) < 1e-15);
}

TEST_CASE("circulant spectra round-trip and diagonalize the dense matrix", "[linalg][property]") {
    std::mt19937_64 rng(14);
    for (Eigen::Index m : {1, 2, 3, 7, 16}) {
        const ComplexVector row = srmkit_test::random_complex(rng, m, 1).col(0);
        const CirculantSpec spec(row);
        const ComplexVector ev = circulant_eigenvalues(spec);
        CHECK((circulant_from_eigenvalues(ev).first_row() - row).cwiseAbs().maxCoeff() < 1e-12);

        const ComplexMatrix f = fourier_matrix(static_cast<std::size_t>(m));
        const ComplexMatrix dense = spec.dense();
        CHECK(max_abs(f * ev.asDiagonal() * f.adjoint() - dense) < 1e-12);
        CHECK(is_circulant(dense, 1e-14));
        for (Eigen::Index i = 0; i < m; ++i) {
            for (Eigen::Index j = 0; j < m; ++j) {
                CHECK(dense(i, j) == row((j - i + m) % m));
            }
        }
    }
}

TEST_CASE("principal_sqrt of a circulant is circulant", "[linalg][property]") {
    std::mt19937_64 rng(15);
    for (std::size_t m : {2u, 5u, 8u, 13u}) {
        const ComplexMatrix g = srmkit_test::random_circulant_gram(rng, m);
        const ComplexVector ev = circulant_eigenvalues(CirculantSpec(g.row(0).transpose()));
        const ComplexMatrix via_spectrum = circulant_from_eigenvalues(ev.cwiseSqrt()).dense();
        CHECK(max_abs(principal_sqrt(g) - via_spectrum) < 1e-8);
    }
}

TEST_CASE("fourier_matrix examples", "[linalg]") {
    auto f = fourier_matrix(1);
    CHECK(f.rows() == 1);
    CHECK(std::abs(f(0, 0) - Complex(1.0)) < 1e-15);

    f = fourier_matrix(2);
    const double h = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(f(0, 0) - h) < 1e-15);
    CHECK(std::abs(f(0, 1) - h) < 1e-15);
    CHECK(std::abs(f(1, 0) - h) < 1e-15);
    CHECK(std::abs(f(1, 1) + h) < 1e-15);

    f = fourier_matrix(5);
    CHECK(max_abs(f * f.adjoint() - ComplexMatrix::Identity(5, 5)) < 1e-8);
    CHECK(std::abs(f(1, 1) - std::polar(1.0 / std::sqrt(5.0), 2.0 * std::numbers::pi / 5.0)) < 1e-15);

    CHECK_THROWS_AS(fourier_matrix(0), Error);
}
