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
#include <functional>
#include <random>

#include "srmkit/constellations.hpp"
#include "srmkit/error.hpp"
#include "srmkit/srm.hpp"
#include "support/oracles.hpp"

using namespace srmkit;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

ComplexMatrix binary_gram(double q0, double q1, Complex chi) {
    ComplexMatrix g(2, 2);
    const double w = std::sqrt(q0 * q1);
    g << q0, w * chi, w * std::conj(chi), q1;
    return g;
}

ErrorKind kind_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    FAIL("no srmkit::Error thrown");
    return ErrorKind::InvalidArgument;
}

void check_invariants(const SrmResult &r, const ComplexMatrix &g) {
    CHECK_THAT(r.joint.sum(), WithinAbs(1.0, 1e-10));
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
        CHECK_THAT(r.joint.row(i).sum(), WithinAbs(g(i, i).real(), 1e-10));
    }
    CHECK_THAT(r.per_state_correct.sum(), WithinAbs(r.pc, 1e-15));
    CHECK(max_abs(r.factor.adjoint() * r.factor - g) < 1e-8);
}

} // namespace

TEST_CASE("srm examples", "[srm]") {
    SECTION("BPSK with overlap exp(-2)") {
        const ComplexMatrix g = binary_gram(0.5, 0.5, std::exp(-2.0));
        const auto r = srm(g);
        CHECK_THAT(r.pc, WithinAbs(0.99539992963041129, 1e-12));
        CHECK_THAT(r.pc, WithinAbs(srmkit_test::helstrom(0.5, 0.5, std::exp(-2.0)), 1e-12));
        check_invariants(r, g);
    }
    SECTION("orthogonal states") {
        const ComplexMatrix g = ComplexMatrix::Identity(6, 6) / 6.0;
        const auto r = srm(g);
        CHECK_THAT(r.pc, WithinAbs(1.0, 1e-14));
        check_invariants(r, g);
    }
    SECTION("PPM m=3, alpha=1") {
        const ComplexMatrix g = weighted_gram(make_ppm(3, 1.0));
        const auto r = srm(g);
        CHECK_THAT(r.pc, WithinAbs(0.93935007362710141, 1e-12));
        CHECK_THAT(r.pc, WithinAbs(srmkit_test::db_pc(g), 1e-12));
        const double chi = std::exp(-1.0);
        const double closed = std::pow(std::sqrt(1 + 2 * chi) + 2 * std::sqrt(1 - chi), 2) / 9.0;
        CHECK_THAT(r.pc, WithinAbs(closed, 1e-12));
        check_invariants(r, g);
    }
    SECTION("binary priors (0.3, 0.7), overlap 0.5") {
        const ComplexMatrix g = binary_gram(0.3, 0.7, 0.5);
        const auto r = srm(g);
        CHECK_THAT(r.factor(0, 0).real(), WithinAbs(0.52031846575806873, 1e-12));
        CHECK_THAT(r.factor(1, 1).real(), WithinAbs(0.81898187147752575, 1e-12));
        CHECK_THAT(r.factor(0, 1).real(), WithinAbs(0.17108095800283986, 1e-12));
        CHECK_THAT(r.pc, WithinAbs(0.94146261161766104, 1e-12));
        CHECK(r.pc < srmkit_test::helstrom(0.3, 0.7, 0.5));
        check_invariants(r, g);
    }
}

TEST_CASE("srm preconditions", "[srm]") {
    CHECK(kind_of([] { srm(binary_gram(0.5, 0.5, 1.0)); }) == ErrorKind::GramSingular);
    CHECK(kind_of([] { srm(ComplexMatrix::Identity(2, 2)); }) == ErrorKind::InvalidArgument);
    ComplexMatrix g = binary_gram(0.5, 0.5, 0.2);
    g(0, 1) = 0.3;
    CHECK(kind_of([&] { srm(g); }) == ErrorKind::NotHermitian);
}

TEST_CASE("srm satisfies the Helstrom bound for binary equiprobable states", "[srm][oracle]") {
    for (int k = 0; k <= 9; ++k) {
        const double chi = 0.1 * k;
        const auto r = srm(binary_gram(0.5, 0.5, chi));
        CHECK_THAT(r.pc, WithinAbs(srmkit_test::helstrom(0.5, 0.5, chi), 1e-10));
    }
    const Complex chi = std::polar(0.6, 1.1);
    CHECK_THAT(srm(binary_gram(0.5, 0.5, chi)).pc, WithinAbs(srmkit_test::helstrom(0.5, 0.5, chi), 1e-10));
}

TEST_CASE("srm factor agrees with the Denman-Beavers root", "[srm][oracle][property]") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 30; ++t) {
        const Eigen::Index n = 1 + t % 8;
        const ComplexMatrix g = srmkit_test::random_gram(rng, n);
        const auto r = srm(g);
        CHECK(max_abs(r.factor - srmkit_test::db_sqrt(g)) < 1e-10);
        check_invariants(r, g);
    }
}

TEST_CASE("joint matrix is symmetric for real symmetric Grams", "[srm][property]") {
    for (std::size_t m : {2u, 4u, 9u}) {
        const auto r = srm(weighted_gram(make_ppm(m, 0.8)));
        CHECK((r.joint - r.joint.transpose()).cwiseAbs().maxCoeff() < 1e-15);
    }
}

TEST_CASE("check_factor_conditions examples", "[srm]") {
    SECTION("circulant Gram") {
        const auto v = check_factor_conditions(srm(make_psk(5, 0.9).gram()).factor);
        CHECK(v.optimal);
        CHECK(v.method == OptimalityMethod::FactorConditions);
        CHECK(v.min_eigenvalue > 0.0);
    }
    SECTION("identity") {
        const auto v = check_factor_conditions(ComplexMatrix::Identity(3, 3));
        CHECK(v.optimal);
        CHECK_FALSE(v.boundary);
    }
    SECTION("binary priors (0.3, 0.7)") {
        const auto v = check_factor_conditions(srm(binary_gram(0.3, 0.7, 0.5)).factor);
        CHECK_FALSE(v.optimal);
        CHECK_THAT(v.witness, ContainsSubstring("pair condition") && ContainsSubstring("(0,1)"));
        CHECK(std::isnan(v.min_eigenvalue));
    }
    SECTION("vanishing diagonal") {
        ComplexMatrix x = ComplexMatrix::Identity(2, 2);
        x(1, 1) = 0.0;
        CHECK(kind_of([&] { check_factor_conditions(x); }) == ErrorKind::SingularFactor);
    }
    SECTION("pair conditions hold but Y is indefinite") {
        ComplexMatrix x(2, 2);
        x << 1.0, 2.0, 2.0, 1.0;
        const auto v = check_factor_conditions(x);
        CHECK_FALSE(v.optimal);
        CHECK_THAT(v.min_eigenvalue, WithinAbs(-1.0, 1e-14));
        CHECK_THAT(v.witness, ContainsSubstring("min eigenvalue"));
    }
}

TEST_CASE("check_block_sqrt_diagonal examples", "[srm]") {
    SECTION("single circulant block") {
        const ComplexMatrix g = make_psk(6, 0.7).gram();
        CHECK(check_block_sqrt_diagonal(g, {{0, 1, 2, 3, 4, 5}}).optimal);
    }
    SECTION("binary equiprobable, common diagonal a / sqrt 2") {
        const double chi = 0.5;
        const auto v = check_block_sqrt_diagonal(binary_gram(0.5, 0.5, chi), {{0, 1}});
        CHECK(v.optimal);
        const ComplexMatrix x = principal_sqrt(binary_gram(0.5, 0.5, chi));
        const double a = 0.5 * (std::sqrt(1 + chi) + std::sqrt(1 - chi));
        CHECK_THAT(x(0, 0).real(), WithinAbs(a / std::sqrt(2.0), 1e-14));
    }
    SECTION("two singleton blocks") {
        ComplexMatrix g = ComplexMatrix::Zero(2, 2);
        g(0, 0) = 0.4;
        g(1, 1) = 0.6;
        const auto v = check_block_sqrt_diagonal(g, {{0}, {1}});
        CHECK(v.optimal);
        CHECK(v.method == OptimalityMethod::BlockSqrtDiagonal);
    }
    SECTION("unequal diagonal") {
        const auto v = check_block_sqrt_diagonal(binary_gram(0.3, 0.7, 0.5), {{0, 1}});
        CHECK_FALSE(v.optimal);
        CHECK_THAT(v.witness, ContainsSubstring("block 0"));
    }
    SECTION("partition errors") {
        const ComplexMatrix g = binary_gram(0.5, 0.5, 0.3);
        CHECK(kind_of([&] { check_block_sqrt_diagonal(g, {{0}, {1}}); }) == ErrorKind::NotBlockDiagonal);
        ComplexMatrix d = ComplexMatrix::Identity(3, 3) / 3.0;
        CHECK(kind_of([&] { check_block_sqrt_diagonal(d, {{0, 1}, {2}}); }) == ErrorKind::ReducibleBlock);
        CHECK(kind_of([&] { check_block_sqrt_diagonal(d, {{0, 1}}); }) == ErrorKind::InvalidArgument);
        CHECK(kind_of([&] { check_block_sqrt_diagonal(d, {{0, 1}, {1, 2}}); }) == ErrorKind::InvalidArgument);
    }
}

TEST_CASE("verify_optimality_oracle examples", "[srm]") {
    SECTION("QPSK alpha=1") {
        const ComplexMatrix g = make_psk(4, 1.0).gram();
        const auto v = verify_optimality_oracle(g, srm(g).factor);
        CHECK(v.optimal);
        CHECK(v.method == OptimalityMethod::Oracle);
        CHECK(v.min_eigenvalue >= -1e-10);
    }
    SECTION("binary priors (0.3, 0.7)") {
        const ComplexMatrix g = binary_gram(0.3, 0.7, 0.5);
        const auto v = verify_optimality_oracle(g, srm(g).factor);
        CHECK_FALSE(v.optimal);
        CHECK_FALSE(v.witness.empty());
    }
    SECTION("identity") {
        const ComplexMatrix id = ComplexMatrix::Identity(3, 3);
        CHECK(verify_optimality_oracle(id, id).optimal);
    }
    SECTION("factor does not reproduce the Gram matrix") {
        const ComplexMatrix g = binary_gram(0.5, 0.5, 0.2);
        CHECK(kind_of([&] { verify_optimality_oracle(g, ComplexMatrix::Identity(2, 2)); }) ==
              ErrorKind::InvalidFactorization);
    }
    SECTION("Helstrom factor is optimal where the SRM is not") {
        // Optimal binary measurement for priors (0.3, 0.7): the rotation that
        // attains the Helstrom bound, written in Gram coordinates.
        const double q0 = 0.3, q1 = 0.7, chi = 0.5;
        const ComplexMatrix g = binary_gram(q0, q1, chi);
        const ComplexMatrix sq = srm(g).factor;
        const double s00 = sq(0, 0).real(), s01 = sq(0, 1).real(), s11 = sq(1, 1).real();
        const double th = 0.5 * std::atan2(s01 * (s11 - s00), 0.5 * (s00 * s00 + s11 * s11 - 2 * s01 * s01));
        ComplexMatrix u(2, 2);
        u << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
        const ComplexMatrix x = u * sq;
        CHECK_THAT(x.diagonal().cwiseAbs2().sum(), WithinAbs(srmkit_test::helstrom(q0, q1, chi), 1e-12));
        const auto v = verify_optimality_oracle(g, x);
        CHECK(v.optimal);
    }
}

TEST_CASE("support_components", "[srm]") {
    ComplexMatrix g = ComplexMatrix::Zero(4, 4);
    g(0, 0) = g(1, 1) = g(2, 2) = g(3, 3) = 0.25;
    g(0, 2) = g(2, 0) = 0.1;
    const auto blocks = support_components(g, 1e-9);
    REQUIRE(blocks.size() == 3);
    CHECK(blocks[0] == std::vector<std::size_t>{0, 2});
    CHECK(blocks[1] == std::vector<std::size_t>{1});
    CHECK(blocks[2] == std::vector<std::size_t>{3});
}

TEST_CASE("verdicts agree with the oracle on random Grams", "[srm][property]") {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 60; ++t) {
        const Eigen::Index n = 2 + t % 7;
        ComplexMatrix g;
        switch (t % 4) {
        case 0:
            g = srmkit_test::random_gram(rng, n);
            break;
        case 1:
            g = srmkit_test::random_equal_diag_gram(rng, n);
            break;
        case 2:
            g = srmkit_test::random_circulant_gram(rng, static_cast<std::size_t>(n));
            break;
        default:
            g = srmkit_test::random_block_gram(
                rng, {srmkit_test::random_equal_diag_gram(rng, 2), srmkit_test::random_gram(rng, n - 1)},
                t % 8 == 3);
            break;
        }
        const auto r = srm(g);
        const auto oracle = verify_optimality_oracle(g, r.factor);
        const auto factor = check_factor_conditions(r.factor);
        const auto block = check_block_sqrt_diagonal(g, support_components(g, 1e-9));
        CHECK(factor.optimal == oracle.optimal);
        CHECK(block.optimal == oracle.optimal);
        if (t % 4 == 1 || t % 4 == 2) {
            CHECK(oracle.optimal);
        }
        if (t % 4 == 0) {
            CHECK_FALSE(oracle.optimal);
        }
    }
}

TEST_CASE("channel_stats examples", "[srm]") {
    SECTION("orthogonal equiprobable states") {
        for (Eigen::Index m : {2, 4, 16}) {
            const auto s = channel_stats(srm(ComplexMatrix::Identity(m, m) / static_cast<double>(m)));
            CHECK_THAT(s.mutual_info_bits, WithinAbs(std::log2(static_cast<double>(m)), 1e-12));
        }
    }
    SECTION("BPSK with overlap exp(-2)") {
        const auto r = srm(binary_gram(0.5, 0.5, std::exp(-2.0)));
        const auto s = channel_stats(r);
        CHECK_THAT(s.mutual_info_bits, WithinAbs(0.95766325214450402, 1e-12));
        CHECK_THAT(s.mutual_info_bits, WithinAbs(srmkit_test::brute_mutual_info(r.factor), 1e-12));
        CHECK(s.mutual_info_bits <= 1.0);
        CHECK_THAT(s.input_marginals(0), WithinAbs(0.5, 1e-14));
        CHECK_THAT(s.output_marginals.sum(), WithinAbs(1.0, 1e-14));
    }
    SECTION("single state") {
        const auto s = channel_stats(srm(ComplexMatrix::Identity(1, 1)));
        CHECK(s.mutual_info_bits == 0.0);
    }
    SECTION("zero joint entries contribute nothing") {
        const auto s = channel_stats(srm(ComplexMatrix::Identity(3, 3) / 3.0));
        CHECK(std::isfinite(s.mutual_info_bits));
    }
}

TEST_CASE("channel_stats matches brute force on random Grams", "[srm][oracle][property]") {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 20; ++t) {
        const auto r = srm(srmkit_test::random_gram(rng, 2 + t % 6));
        const double info = channel_stats(r).mutual_info_bits;
        CHECK_THAT(info, WithinAbs(srmkit_test::brute_mutual_info(r.factor), 1e-12));
        CHECK(info >= 0.0);
        CHECK(info <= std::log2(static_cast<double>(r.factor.rows())) + 1e-12);
    }
}
