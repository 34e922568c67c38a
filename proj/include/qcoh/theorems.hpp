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

#ifndef QCOH_THEOREMS_HPP
#define QCOH_THEOREMS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "qcoh/matrix.hpp"
#include "qcoh/state.hpp"

namespace qcoh {

/// Closed-form extremes over all global unitary conjugations of a state,
/// functions of the eigenvalue 4-tuple alone:
///   d2_max      = (l1-l4)^2 + (l2-l3)^2           (max subsystem coherence)
///   bmax_upper  = 2 sqrt(2) sqrt(d2_max)           (max CHSH value)
///   bmax_lower  = 2 |l1-l2-l3+l4|                  (min CHSH value)
///   c_bd        = max{0, 2 l1 - 1}                 (concurrence at max CHSH)
///   c_max       = max{0, l1 - l3 - 2 sqrt(l2 l4)}  (max attainable concurrence)
///   s_max       = P - 2 (l1 l4 + l2 l3)
///   s_min       = P - (l1+l4)(l2+l3)
///   tcal_lower  = ((l1+l4)^2 + (l2+l3)^2) / 2
///   tcal_upper  = P = sum l_i^2
struct BoundSet {
    double d2_max;
    double bmax_upper;
    double bmax_lower;
    double c_bd;
    double c_max;
    double s_min;
    double s_max;
    double tcal_lower;
    double tcal_upper;
};

namespace detail {

inline void check_spectrum(const std::array<double, 4>& l) {
    for (int i = 0; i < 4; ++i) {
        if (!(l[i] >= -1e-12) || !std::isfinite(l[i])) {
            std::ostringstream os;
            os << "eigenvalue tuple: lambda_" << i + 1 << " = " << l[i]
               << " is negative or not finite";
            throw qcoh::domain_error(os.str());
        }
        if (i > 0 && l[i] > l[i - 1] + 1e-12) {
            throw qcoh::domain_error("eigenvalue tuple: not sorted descending");
        }
    }
    const double sum = l[0] + l[1] + l[2] + l[3];
    if (std::abs(sum - 1.0) > 1e-9) {
        std::ostringstream os;
        os << "eigenvalue tuple: sum is " << sum << ", expected 1 within 1e-9";
        throw qcoh::domain_error(os.str());
    }
}

}  // namespace detail

inline BoundSet bounds(const std::array<double, 4>& l) {
    detail::check_spectrum(l);
    const double a = l[0] - l[3];
    const double b = l[1] - l[2];
    const double p = l[0] * l[0] + l[1] * l[1] + l[2] * l[2] + l[3] * l[3];
    BoundSet bs;
    bs.d2_max = a * a + b * b;
    bs.bmax_upper = 2.0 * std::sqrt(2.0 * bs.d2_max);
    bs.bmax_lower = 2.0 * std::abs(l[0] - l[1] - l[2] + l[3]);
    bs.c_bd = std::max(0.0, 2.0 * l[0] - 1.0);
    bs.c_max = std::max(0.0, l[0] - l[2] - 2.0 * std::sqrt(std::max(0.0, l[1] * l[3])));
    bs.s_max = p - 2.0 * (l[0] * l[3] + l[1] * l[2]);
    bs.s_min = p - (l[0] + l[3]) * (l[1] + l[2]);
    bs.tcal_lower = 0.5 * ((l[0] + l[3]) * (l[0] + l[3]) + (l[1] + l[2]) * (l[1] + l[2]));
    bs.tcal_upper = p;
    return bs;
}

/// The unitary change of basis {|00>,|01>,|10>,|11>} -> {Phi+, Phi-,
/// Psi+, Psi-}: conjugating diag(l) by it yields the Bell-diagonal state
/// with those weights.
inline const Mat4& bell_basis_matrix() {
    static const Mat4 m = [] {
        const double r = 1.0 / std::sqrt(2.0);
        return Mat4{r,   r,  0.0, 0.0,   //
                    0.0, 0.0, r,   r,    //
                    0.0, 0.0, r,   -r,   //
                    r,   -r,  0.0, 0.0};
    }();
    return m;
}

/// Bell-diagonal state with the given descending weights:
/// 1/2 * {l1+l2, 0, 0, l1-l2; 0, l3+l4, l3-l4, 0;
///        0, l3-l4, l3+l4, 0; l1-l2, 0, 0, l1+l2}.
inline DensityMatrix bell_diagonal(const std::array<double, 4>& l) {
    detail::check_spectrum(l);
    // The (l3+l4)/2 entry is written as the exact complement of the
    // (l1+l2)/2 one. Since (l1+l2)/2 lies in [1/4, 1/2] the difference
    // is exact, so both reduced states come out exactly maximally mixed
    // and the coherence of the result is exactly zero.
    const double x = 0.5 * (l[0] + l[1]);
    const double y = 0.5 - x;
    Mat4 m;
    m(0, 0) = x;
    m(3, 3) = x;
    m(0, 3) = 0.5 * (l[0] - l[1]);
    m(3, 0) = 0.5 * (l[0] - l[1]);
    m(1, 1) = y;
    m(2, 2) = y;
    m(1, 2) = 0.5 * (l[2] - l[3]);
    m(2, 1) = 0.5 * (l[2] - l[3]);
    return DensityMatrix::unchecked(m);
}

/// A unitary together with the state it produced; the spectrum of the
/// result equals the spectrum of the input.
struct TransformResult {
    Mat4 u;
    DensityMatrix state;
};

/// U = M V': turns the state Bell-diagonal. Both subsystem coherences
/// vanish and the CHSH value reaches bmax_upper.
///
/// The result is the closed-form image of the conjugation: numerically
/// multiplying out U rho U' leaves ~1e-16 trace residue that the square
/// root in D_{A,B} would amplify to ~1e-8.
inline TransformResult min_coherence_transform(const DensityMatrix& rho) {
    const auto sd = spectral(rho);
    const Mat4 u = bell_basis_matrix() * adjoint(sd.eigenvectors);
    return {u, bell_diagonal(sd.lambdas)};
}

/// U = V': turns the state diagonal in the computational basis. The
/// coherence reaches d2_max, the CHSH value drops to bmax_lower, and the
/// result is separable. Returns the closed-form image (see above).
inline TransformResult max_coherence_transform(const DensityMatrix& rho) {
    const auto sd = spectral(rho);
    Mat4 d;
    for (std::size_t i = 0; i < 4; ++i) d(i, i) = sd.lambdas[i];
    return {adjoint(sd.eigenvectors), DensityMatrix::unchecked(d)};
}

/// Analytic spectrum of a family state; bounds() on it reproduces the
/// closed-form boundary curves without an eigensolver in the loop.
inline std::array<double, 4> family_spectrum(Family f, double param) {
    switch (f) {
        case Family::mnms:
            detail::require_param("mnms", "eps", param, 0.0, 1.0);
            return {0.5 * (1.0 + param), 0.5 * (1.0 - param), 0.0, 0.0};
        case Family::mems:
            detail::require_param("mems", "gamma", param, 0.0, 1.0);
            if (param <= 2.0 / 3.0) {
                return {1.0 / 3.0 + 0.5 * param, 1.0 / 3.0, 1.0 / 3.0 - 0.5 * param, 0.0};
            }
            return {param, 1.0 - param, 0.0, 0.0};
        case Family::exc: {
            detail::require_param("exc", "p", param, 0.0, 1.0);
            // Rank two with purity P: l_{1,2} = (1 +- sqrt(2P - 1))/2.
            const double s = std::sqrt(1.0 - 3.0 * param + 3.0 * param * param);
            return {0.5 * (1.0 + s), 0.5 * (1.0 - s), 0.0, 0.0};
        }
        case Family::werner:
        case Family::gen_werner: {
            const char* name = f == Family::werner ? "werner" : "gen_werner";
            detail::require_param(name, "p", param, 0.0, 1.0);
            const double lo = 0.25 * (1.0 - param);
            return {0.25 * (1.0 + 3.0 * param), lo, lo, lo};
        }
        case Family::pure_schmidt:
            detail::require_param("pure_schmidt", "k1", param, 0.0, 1.0);
            return {1.0, 0.0, 0.0, 0.0};
    }
    throw qcoh::domain_error("family_spectrum: unknown family");
}

inline BoundSet family_bounds(Family f, double param) {
    return bounds(family_spectrum(f, param));
}

}  // namespace qcoh

#endif  // QCOH_THEOREMS_HPP
