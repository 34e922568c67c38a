// Copyright 2026 The qcoh Authors
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

#include <catch2/catch_amalgamated.hpp>

#include "qcoh/measures.hpp"
#include "qcoh/state_json.hpp"
#include "qcoh/theorems.hpp"
#include "test_support.hpp"

using namespace qt;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

TEST_CASE("validate accepts and rejects", "[state]") {
    SECTION("maximally mixed accepted") {
        const Mat4 m = 0.25 * Mat4::identity();
        REQUIRE(diff(validate(m).matrix(), m) == 0.0);
    }
    SECTION("negative eigenvalue rejected") {
        const Mat4 m{0.5, 0, 0, 0, 0, 0.6, 0, 0, 0, 0, 0.0, 0, 0, 0, 0, -0.1};
        REQUIRE_THROWS_AS(validate(m), not_psd_error);
    }
    SECTION("non-Hermitian rejected") {
        Mat4 m = 0.25 * Mat4::identity();
        m(0, 1) = cplx(0.0, 0.1);
        REQUIRE_THROWS_AS(validate(m), non_hermitian_error);
    }
    SECTION("trace far from one rejected") {
        const Mat4 m = 0.5 * Mat4::identity();
        REQUIRE_THROWS_AS(validate(m), trace_error);
    }
    SECTION("trace within 1e-6 renormalized") {
        const double q = 0.25 * (1.0 + 2e-7);
        const Mat4 m{q, 0, 0, 0, 0, q, 0, 0, 0, 0, q, 0, 0, 0, 0, q};
        const auto rho = validate(m);
        REQUIRE_THAT(rho.matrix().trace().real(), WithinAbs(1.0, 1e-14));
    }
    SECTION("exc p = 0.5 accepted, rank two") {
        const auto rho = validate(exc(0.5).matrix());
        const auto l = spectral(rho).lambdas;
        REQUIRE_THAT(l[2], WithinAbs(0.0, 1e-12));
        REQUIRE_THAT(l[3], WithinAbs(0.0, 1e-12));
        // oracle: the only non-trivial 3x3 block has vanishing determinant
        for (int k = 0; k <= 20; ++k) {
            REQUIRE_THAT(std::abs(det3_block(exc(k / 20.0).matrix())), WithinAbs(0.0, 1e-15));
        }
    }
    SECTION("eigensolver-level negatives are clamped and renormalized") {
        // rank-deficient family matrices keep validating on a dense grid
        for (int k = 0; k <= 100; ++k) {
            const double p = k / 100.0;
            REQUIRE_NOTHROW(validate(mnms(p).matrix()));
            REQUIRE_NOTHROW(validate(mems(p).matrix()));
            REQUIRE_NOTHROW(validate(exc(p).matrix()));
            REQUIRE_NOTHROW(validate(werner(p).matrix()));
            REQUIRE_NOTHROW(validate(pure_schmidt(p).matrix()));
            REQUIRE_NOTHROW(validate(gen_werner(p, 0.3).matrix()));
        }
    }
}

TEST_CASE("spectral decompositions of known states", "[state]") {
    SECTION("mems gamma = 1/3") {
        // 2x2 block {{1/3, 1/6}, {1/6, 1/3}} has eigenvalues 1/2 and 1/6
        const auto l = spectral(mems(1.0 / 3.0)).lambdas;
        REQUIRE_THAT(l[0], WithinAbs(0.5, 1e-14));
        REQUIRE_THAT(l[1], WithinAbs(1.0 / 3.0, 1e-14));
        REQUIRE_THAT(l[2], WithinAbs(1.0 / 6.0, 1e-14));
        REQUIRE_THAT(l[3], WithinAbs(0.0, 1e-14));
        // cross-check: d2_max from these eigenvalues equals the curve
        // gamma^2/4 + (1/3 + gamma/2)^2 at gamma = 1/3
        const auto bs = bounds(l);
        REQUIRE_THAT(bs.d2_max, WithinAbs(10.0 / 36.0, 1e-12));
    }
    SECTION("werner p = 0.6") {
        const auto l = spectral(werner(0.6)).lambdas;
        REQUIRE_THAT(l[0], WithinAbs(0.7, 1e-14));
        REQUIRE_THAT(l[1], WithinAbs(0.1, 1e-14));
    }
    SECTION("pure Bell state") {
        const auto l = spectral(pure_schmidt(inv_sqrt2())).lambdas;
        REQUIRE_THAT(l[0], WithinAbs(1.0, 1e-14));
        REQUIRE_THAT(l[1], WithinAbs(0.0, 1e-14));
    }
    SECTION("reconstruction on random states") {
        for (int k = 0; k < 100; ++k) {
            const auto rho = random_density(400 + k, 1 + (k % 4));
            const auto sd = spectral(rho);
            Mat4 rec;
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) {
                    cplx v = 0.0;
                    for (std::size_t c = 0; c < 4; ++c)
                        v += sd.eigenvectors(i, c) * sd.lambdas[c] *
                             std::conj(sd.eigenvectors(j, c));
                    rec(i, j) = v;
                }
            REQUIRE(diff(rec, rho.matrix()) <= 1e-10);
            REQUIRE(std::is_sorted(sd.lambdas.rbegin(), sd.lambdas.rend()));
            REQUIRE(sd.lambdas[3] >= 0.0);
            REQUIRE_THAT(sd.lambdas[0] + sd.lambdas[1] + sd.lambdas[2] + sd.lambdas[3],
                         WithinAbs(1.0, 1e-10));
        }
    }
}

TEST_CASE("apply_unitary", "[state]") {
    SECTION("identity leaves the state untouched") {
        const auto rho = werner(0.3);
        REQUIRE(diff(apply_unitary(rho, Mat4::identity()).matrix(), rho.matrix()) == 0.0);
    }
    SECTION("rejects non-unitary matrices") {
        REQUIRE_THROWS_AS(apply_unitary(werner(0.3), 0.5 * Mat4::identity()),
                          not_unitary_error);
    }
    SECTION("M V' sends mnms to a Bell-diagonal state") {
        const auto rho = mnms(0.5);
        const Mat4 u = bell_basis_matrix() * adjoint(spectral(rho).eigenvectors);
        const auto out = apply_unitary(rho, u);
        const auto c = coherence(out);
        // the numeric conjugation carries sqrt(rounding) noise in D
        REQUIRE(c.d_a <= 1e-7);
        REQUIRE(c.d_b <= 1e-7);
        REQUIRE(max_offdiag(out.matrix()) > 0.1);  // genuinely Bell-diagonal, not diagonal
    }
    SECTION("purity preserved under random unitaries") {
        Rng rng(55);
        const auto rho = random_density(77, 3);
        for (int k = 0; k < 100; ++k) {
            const auto out = apply_unitary(rho, haar_unitary(rng));
            REQUIRE_THAT(purity(out), WithinAbs(purity(rho), 1e-12));
        }
    }
    SECTION("spectrum preserved for random state-unitary pairs") {
        Rng rng(56);
        for (int k = 0; k < 1000; ++k) {
            const auto rho = random_density(9000 + k, 1 + (k % 4));
            const auto out = apply_unitary(rho, haar_unitary(rng));
            const auto l1 = spectral(rho).lambdas;
            const auto l2 = spectral(out).lambdas;
            for (int i = 0; i < 4; ++i) REQUIRE_THAT(l1[i], WithinAbs(l2[i], 1e-10));
        }
    }
}

TEST_CASE("family constructors", "[state]") {
    SECTION("mnms") {
        REQUIRE(diff(mnms(1.0).matrix(), phi_plus()) < 1e-15);
        REQUIRE_THAT(purity(mnms(0.5)), WithinAbs(0.625, 1e-15));
        const Mat4 expect{0.5, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0.5};
        REQUIRE(diff(mnms(0.0).matrix(), expect) == 0.0);
    }
    SECTION("mnms spectral form") {
        for (int k = 0; k <= 10; ++k) {
            const double eps = k / 10.0;
            const Mat4 mix = 0.5 * (1.0 + eps) * phi_plus() + 0.5 * (1.0 - eps) * phi_minus();
            REQUIRE(diff(mnms(eps).matrix(), mix) <= 1e-12);
        }
    }
    SECTION("mems purity branches") {
        REQUIRE_THAT(purity(mems(1.0 / 3.0)), WithinAbs(7.0 / 18.0, 1e-15));
        REQUIRE_THAT(purity(mems(0.8)), WithinAbs(0.68, 1e-15));
    }
    SECTION("mems branches agree at gamma = 2/3") {
        const double g = 2.0 / 3.0;
        Mat4 second;
        second(0, 0) = 0.5 * g;
        second(1, 1) = 1.0 - g;
        second(3, 3) = 0.5 * g;
        second(0, 3) = 0.5 * g;
        second(3, 0) = 0.5 * g;
        REQUIRE(diff(mems(g).matrix(), second) <= 1e-15);
    }
    SECTION("exc") {
        REQUIRE_THAT(purity(exc(0.0)), WithinAbs(1.0, 1e-15));
        REQUIRE_THAT(purity(exc(0.5)), WithinAbs(0.625, 1e-15));
        // rank two: lambda_{1,2} = (1 +- sqrt(2P - 1)) / 2
        const auto l = spectral(exc(0.5)).lambdas;
        REQUIRE_THAT(l[0], WithinAbs(0.75, 1e-12));
        REQUIRE_THAT(l[1], WithinAbs(0.25, 1e-12));
        REQUIRE_THAT(l[2], WithinAbs(0.0, 1e-12));
        REQUIRE_THAT(l[3], WithinAbs(0.0, 1e-12));
        // the +-ip entries
        REQUIRE(exc(0.5).matrix()(1, 2) == cplx(0.0, 0.25));
        REQUIRE(exc(0.5).matrix()(2, 1) == cplx(0.0, -0.25));
    }
    SECTION("werner") {
        REQUIRE(diff(werner(0.0).matrix(), 0.25 * Mat4::identity()) == 0.0);
        REQUIRE(diff(werner(1.0).matrix(), phi_plus()) < 1e-15);
        REQUIRE_THAT(purity(werner(0.6)), WithinAbs(0.52, 1e-15));
    }
    SECTION("gen_werner reduces to werner at k1 = 1/sqrt(2)") {
        for (int k = 0; k <= 10; ++k) {
            const double p = k / 10.0;
            REQUIRE(diff(gen_werner(p, inv_sqrt2()).matrix(), werner(p).matrix()) <= 1e-15);
        }
    }
    SECTION("gen_werner at p = 1 is the pure Schmidt state") {
        REQUIRE(diff(gen_werner(1.0, 0.3).matrix(), pure_schmidt(0.3).matrix()) <= 1e-15);
    }
    SECTION("pure_schmidt endpoints") {
        REQUIRE(diff(pure_schmidt(1.0).matrix(), outer<4>({1.0, 0, 0, 0})) == 0.0);
        REQUIRE(diff(pure_schmidt(inv_sqrt2()).matrix(), phi_plus()) < 1e-15);
    }
    SECTION("domain violations") {
        REQUIRE_THROWS_AS(mnms(-0.01), qcoh::domain_error);
        REQUIRE_THROWS_AS(mems(1.01), qcoh::domain_error);
        REQUIRE_THROWS_AS(exc(std::nan("")), qcoh::domain_error);
        REQUIRE_THROWS_AS(werner(2.0), qcoh::domain_error);
        REQUIRE_THROWS_AS(gen_werner(0.5, -0.2), qcoh::domain_error);
        REQUIRE_THROWS_AS(pure_schmidt(1.5), qcoh::domain_error);
    }
}

TEST_CASE("random_density", "[state]") {
    SECTION("rank one is pure") {
        REQUIRE_THAT(purity(random_density(123, 1)), WithinAbs(1.0, 1e-12));
    }
    SECTION("all ranks validate") {
        for (int rank = 1; rank <= 4; ++rank)
            for (int k = 0; k < 25; ++k)
                REQUIRE_NOTHROW(validate(random_density(600 + k, rank).matrix()));
    }
    SECTION("rejects bad rank") {
        REQUIRE_THROWS_AS(random_density(1, 0), qcoh::domain_error);
        REQUIRE_THROWS_AS(random_density(1, 5), qcoh::domain_error);
    }
    SECTION("deterministic in the seed") {
        const auto a = random_density(12345, 4);
        const auto b = random_density(12345, 4);
        REQUIRE(a.matrix() == b.matrix());
    }
    SECTION("golden pin, seed 12345 rank 4") {
        const auto m = random_density(12345, 4).matrix();
        REQUIRE_THAT(m(0, 0).real(), WithinAbs(0.27541171384345037, 1e-15));
        REQUIRE_THAT(m(0, 1).real(), WithinAbs(-0.073191248469753667, 1e-15));
        REQUIRE_THAT(m(0, 1).imag(), WithinAbs(-0.020714389354939331, 1e-15));
        REQUIRE_THAT(m(2, 3).real(), WithinAbs(0.026810803733217356, 1e-15));
        REQUIRE_THAT(m(2, 3).imag(), WithinAbs(-0.022085218283014116, 1e-15));
    }
}

TEST_CASE("state JSON round trip and rejection", "[state]") {
    SECTION("round trip") {
        const auto rho = random_density(31, 3);
        const auto j = state_to_json(rho);
        const auto back = state_from_json(j);
        REQUIRE(diff(back.matrix(), rho.matrix()) <= 1e-15);
    }
    SECTION("missing rho key") {
        REQUIRE_THROWS_MATCHES(state_from_json(nlohmann::json{{"x", 1}}), parse_error,
                               Catch::Matchers::MessageMatches(ContainsSubstring("rho")));
    }
    SECTION("wrong shape") {
        nlohmann::json j;
        j["rho"] = {{1, 2}, {3, 4}, {5, 6}};
        REQUIRE_THROWS_MATCHES(state_from_json(j), parse_error,
                               Catch::Matchers::MessageMatches(ContainsSubstring("shape")));
    }
    SECTION("entry not a pair") {
        auto j = state_to_json(werner(0.5));
        j["rho"][1][2] = 0.0;
        REQUIRE_THROWS_MATCHES(state_from_json(j), parse_error,
                               Catch::Matchers::MessageMatches(ContainsSubstring("pair")));
    }
    SECTION("non-finite entry") {
        auto j = state_to_json(werner(0.5));
        j["rho"][0][0][0] = "nan";
        REQUIRE_THROWS_AS(state_from_json(j), parse_error);
        auto j2 = state_to_json(werner(0.5));
        j2["rho"][0][0] = {std::numeric_limits<double>::infinity(), 0.0};
        REQUIRE_THROWS_AS(state_from_json(j2), parse_error);
    }
    SECTION("validation failures carry distinct messages") {
        nlohmann::json j;
        j["rho"] = matrix_to_json(0.5 * Mat4::identity());
        REQUIRE_THROWS_AS(state_from_json(j), trace_error);

        Mat4 neg;
        neg(0, 0) = 0.55;
        neg(1, 1) = 0.55;
        neg(2, 2) = 0.0;
        neg(3, 3) = -0.1;
        nlohmann::json j2;
        j2["rho"] = matrix_to_json(neg);
        REQUIRE_THROWS_AS(state_from_json(j2), not_psd_error);
    }
}
