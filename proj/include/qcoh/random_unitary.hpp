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

#ifndef QCOH_RANDOM_UNITARY_HPP
#define QCOH_RANDOM_UNITARY_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>

#include "qcoh/errors.hpp"
#include "qcoh/matrix.hpp"
#include "qcoh/rng.hpp"

namespace qcoh {

/// Haar-distributed random element of U(4): QR orthonormalization of a
/// complex Ginibre matrix. Gram-Schmidt with real positive column norms
/// fixes the R-diagonal phase convention, which makes Q exactly Haar.
/// Two orthogonalization passes keep U'U - I at machine level.
inline Mat4 haar_unitary(Rng& rng) {
    Mat4 q;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            const double re = rng.gauss();
            const double im = rng.gauss();
            q(r, c) = cplx(re, im);
        }

    for (std::size_t j = 0; j < 4; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                cplx proj = 0.0;
                for (std::size_t r = 0; r < 4; ++r) proj += std::conj(q(r, k)) * q(r, j);
                for (std::size_t r = 0; r < 4; ++r) q(r, j) -= proj * q(r, k);
            }
        }
        double nrm = 0.0;
        for (std::size_t r = 0; r < 4; ++r) nrm += std::norm(q(r, j));
        const double inv = 1.0 / std::sqrt(nrm);
        for (std::size_t r = 0; r < 4; ++r) q(r, j) *= inv;
    }
    return q;
}

/// Parameters of the recursive parametrization of U(4):
///
///   U = D(phi) * W_2 * W_3 * W_4,  D = diag(e^{i phi_0}, ..., e^{i phi_3}),
///
/// where W_k acts on the leading k x k block as
///
///   W_k = [[ I - (1 - cos t_k) |a><a| ,  sin t_k |a> ],
///          [     -sin t_k <a|          ,  cos t_k    ]]
///
/// with |a> a unit vector in C^{k-1} written in hyperspherical form from
/// axis_angles/axis_phases. 16 real parameters in total. Ranges: angles
/// (thetas, axis_angles) in [-pi/2, pi/2], phases in [-pi, pi]. The zero
/// vector maps to the identity.
struct JarlskogParams {
    std::array<double, 4> phases{};       // phi_0..phi_3
    std::array<double, 3> thetas{};       // t_2, t_3, t_4
    std::array<double, 3> axis_angles{};  // psi_31; psi_41, psi_42
    std::array<double, 6> axis_phases{};  // d_21; d_31, d_32; d_41, d_42, d_43

    static constexpr std::size_t count = 16;

    /// Uniform over the declared ranges.
    static JarlskogParams random(Rng& rng) {
        JarlskogParams p;
        constexpr double pi = std::numbers::pi;
        for (double& v : p.phases) v = rng.uniform(-pi, pi);
        for (double& v : p.thetas) v = rng.uniform(-pi / 2, pi / 2);
        for (double& v : p.axis_angles) v = rng.uniform(-pi / 2, pi / 2);
        for (double& v : p.axis_phases) v = rng.uniform(-pi, pi);
        return p;
    }

    /// Every parameter uniform in [-delta, delta]; requires
    /// delta <= pi/2 so the result stays within the declared ranges.
    static JarlskogParams random_within(Rng& rng, double delta) {
        if (!(delta >= 0.0) || delta > std::numbers::pi / 2) {
            throw domain_error("JarlskogParams::random_within: delta must be in [0, pi/2]");
        }
        JarlskogParams p;
        for (double& v : p.phases) v = rng.uniform(-delta, delta);
        for (double& v : p.thetas) v = rng.uniform(-delta, delta);
        for (double& v : p.axis_angles) v = rng.uniform(-delta, delta);
        for (double& v : p.axis_phases) v = rng.uniform(-delta, delta);
        return p;
    }

    void check() const {
        constexpr double pi = std::numbers::pi;
        auto in = [](double v, double lo, double hi) { return v >= lo && v <= hi; };
        for (double v : phases)
            if (!in(v, -pi, pi)) throw domain_error("JarlskogParams: phase outside [-pi, pi]");
        for (double v : thetas)
            if (!in(v, -pi / 2, pi / 2))
                throw domain_error("JarlskogParams: theta outside [-pi/2, pi/2]");
        for (double v : axis_angles)
            if (!in(v, -pi / 2, pi / 2))
                throw domain_error("JarlskogParams: axis angle outside [-pi/2, pi/2]");
        for (double v : axis_phases)
            if (!in(v, -pi, pi)) throw domain_error("JarlskogParams: axis phase outside [-pi, pi]");
    }
};

namespace detail {

/// W_k block embedded in a 4x4 identity; axis is the unit vector in
/// C^{k-1}.
template <std::size_t M>
Mat4 jarlskog_block(double theta, const std::array<cplx, M>& axis) {
    static_assert(M >= 1 && M <= 3);
    Mat4 w = Mat4::identity();
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    for (std::size_t i = 0; i < M; ++i) {
        for (std::size_t j = 0; j < M; ++j) {
            const cplx outer = axis[i] * std::conj(axis[j]);
            w(i, j) = (i == j ? 1.0 : 0.0) - (1.0 - c) * outer;
        }
        w(i, M) = s * axis[i];
        w(M, i) = -s * std::conj(axis[i]);
    }
    w(M, M) = c;
    return w;
}

}  // namespace detail

/// Unitary matrix from Jarlskog parameters; zero parameters give the
/// exact identity.
inline Mat4 jarlskog_unitary(const JarlskogParams& p) {
    p.check();

    auto phase = [](double d) { return cplx(std::cos(d), std::sin(d)); };

    const std::array<cplx, 1> a2{phase(p.axis_phases[0])};

    const double c31 = std::cos(p.axis_angles[0]);
    const double s31 = std::sin(p.axis_angles[0]);
    const std::array<cplx, 2> a3{c31 * phase(p.axis_phases[1]), s31 * phase(p.axis_phases[2])};

    const double c41 = std::cos(p.axis_angles[1]);
    const double s41 = std::sin(p.axis_angles[1]);
    const double c42 = std::cos(p.axis_angles[2]);
    const double s42 = std::sin(p.axis_angles[2]);
    const std::array<cplx, 3> a4{c41 * phase(p.axis_phases[3]), s41 * c42 * phase(p.axis_phases[4]),
                                 s41 * s42 * phase(p.axis_phases[5])};

    Mat4 d;
    for (std::size_t i = 0; i < 4; ++i) d(i, i) = phase(p.phases[i]);

    const Mat4 w2 = detail::jarlskog_block<1>(p.thetas[0], a2);
    const Mat4 w3 = detail::jarlskog_block<2>(p.thetas[1], a3);
    const Mat4 w4 = detail::jarlskog_block<3>(p.thetas[2], a4);
    return d * w2 * w3 * w4;
}

}  // namespace qcoh

#endif  // QCOH_RANDOM_UNITARY_HPP
