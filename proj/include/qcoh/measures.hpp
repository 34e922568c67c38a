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

#ifndef QCOH_MEASURES_HPP
#define QCOH_MEASURES_HPP

#include <algorithm>
#include <array>
#include <cmath>

#include "qcoh/matrix.hpp"
#include "qcoh/state.hpp"

namespace qcoh {

/// First-order coherence of the two subsystems:
/// D_{A,B} = sqrt(2 Tr rho_{A,B}^2 - 1), and D^2 = (D_A^2 + D_B^2)/2.
struct Coherences {
    double d_a;
    double d_b;
    double d_sq;
};

struct SParams {
    double s_a;
    double s_b;
    double s_comb;
};

/// Every scalar measure of a state plus the Pauli correlation tensor.
struct CoherenceReport {
    double d_a;
    double d_b;
    double d_sq;
    double purity;
    double bmax;
    double concurrence;
    double tcal;
    double s_a;
    double s_b;
    double s_comb;
    RMat3 t;
};

namespace detail {

template <std::size_t N>
double purity_of(const CMat<N>& m) {
    // Tr m^2 = sum |m_ij|^2 for Hermitian m.
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) s += std::norm(m(i, j));
    return s;
}

inline Coherences coherence_of(const Mat4& m) {
    const Mat2 ra = partial_trace(m, Subsystem::A);
    const Mat2 rb = partial_trace(m, Subsystem::B);
    // The max() guard absorbs rounding noise below the maximally mixed
    // marginal, where 2 Tr r^2 - 1 crosses zero.
    const double da = std::sqrt(std::max(0.0, 2.0 * purity_of(ra) - 1.0));
    const double db = std::sqrt(std::max(0.0, 2.0 * purity_of(rb) - 1.0));
    return {da, db, (da * da + db * db) / 2.0};
}

inline const std::array<Mat4, 9>& pauli_kron_table() {
    static const std::array<Mat4, 9> table = [] {
        std::array<Mat4, 9> t;
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) t[3 * (i - 1) + (j - 1)] = kron2(pauli(i), pauli(j));
        return t;
    }();
    return table;
}

inline RMat3 correlation_tensor_of(const Mat4& m) {
    const auto& table = pauli_kron_table();
    RMat3 t{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const Mat4& k = table[3 * i + j];
            double tr = 0.0;  // Tr[m k] is real for Hermitian m, k
            for (std::size_t a = 0; a < 4; ++a)
                for (std::size_t b = 0; b < 4; ++b) tr += (m(a, b) * k(b, a)).real();
            t[i][j] = tr;
        }
    return t;
}

/// Horodecki criterion: B_max = 2 sqrt(mu_1 + mu_2) with mu_1, mu_2 the
/// two largest eigenvalues of T^t T.
inline double bmax_of_tensor(const RMat3& t) {
    RMat3 g{};
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += t[k][i] * t[k][j];
            g[i][j] = s;
            g[j][i] = s;
        }
    const auto mu = sym_eig3(g);
    return 2.0 * std::sqrt(std::max(0.0, mu[0] + mu[1]));
}

inline double bmax_of(const Mat4& m) { return bmax_of_tensor(correlation_tensor_of(m)); }

inline double tcal_of_tensor(const RMat3& t) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += t[i][j] * t[i][j];
    return 0.25 * (1.0 + s);
}

inline SParams s_params_of(const Coherences& c, double bmax) {
    const double bterm = bmax * bmax / 8.0;  // (B_max / 2 sqrt 2)^2
    return {c.d_a * c.d_a / 2.0 + bterm, c.d_b * c.d_b / 2.0 + bterm,
            (c.d_a * c.d_a + c.d_b * c.d_b) / 4.0 + bterm};
}

inline double concurrence_of(const Mat4& m) {
    // Wootters: C = max{0, sqrt(e1) - sqrt(e2) - sqrt(e3) - sqrt(e4)}
    // with e_i the descending eigenvalues of rho * rho~,
    // rho~ = (sy (x) sy) rho* (sy (x) sy). The product is non-Hermitian;
    // the same spectrum is obtained from the Hermitian PSD matrix
    // sqrt(rho) rho~ sqrt(rho) (AB and BA share eigenvalues), which the
    // Jacobi solver handles.
    const auto eig = hermitian_eig(m);
    Mat4 sq;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            cplx acc = 0.0;
            for (std::size_t k = 0; k < 4; ++k) {
                const double s = std::sqrt(std::max(0.0, eig.values[k]));
                acc += eig.vectors(i, k) * s * std::conj(eig.vectors(j, k));
            }
            sq(i, j) = acc;
        }
    static const Mat4 yy = kron2(sigma_y(), sigma_y());
    const Mat4 flipped = yy * conjugate(m) * yy;
    Mat4 h = sq * flipped * sq;
    for (std::size_t i = 0; i < 4; ++i) {
        h(i, i) = h(i, i).real();
        for (std::size_t j = i + 1; j < 4; ++j) {
            h(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
            h(j, i) = std::conj(h(i, j));
        }
    }
    const auto e = hermitian_eig(h).values;
    // e_i of exact-zero modes come back as ~1e-17 noise, which the square
    // root would amplify to 1e-8; cut them off relative to e_1.
    const double floor = 1e-13 * std::max(0.0, e[0]);
    const auto root = [floor](double v) { return v <= floor ? 0.0 : std::sqrt(v); };
    const double c = root(e[0]) - root(e[1]) - root(e[2]) - root(e[3]);
    return std::max(0.0, c);
}

}  // namespace detail

inline Coherences coherence(const DensityMatrix& rho) {
    return detail::coherence_of(rho.matrix());
}

inline double purity(const DensityMatrix& rho) { return detail::purity_of(rho.matrix()); }

/// t_ij = Tr[rho sigma_i (x) sigma_j], i, j = 1..3.
inline RMat3 correlation_tensor(const DensityMatrix& rho) {
    return detail::correlation_tensor_of(rho.matrix());
}

/// Maximal CHSH value over local measurement settings.
inline double bmax(const DensityMatrix& rho) { return detail::bmax_of(rho.matrix()); }

/// Wootters concurrence.
inline double concurrence(const DensityMatrix& rho) {
    return detail::concurrence_of(rho.matrix());
}

/// T = (1 + sum t_ij^2) / 4.
inline double tcal(const DensityMatrix& rho) {
    return detail::tcal_of_tensor(detail::correlation_tensor_of(rho.matrix()));
}

/// Accessible-coherence parameters: per subsystem
/// S_{A,B} = D_{A,B}^2/2 + (B_max/2 sqrt 2)^2, and the combined
/// S = (D_A^2 + D_B^2)/4 + (B_max/2 sqrt 2)^2. The two conventions do
/// not coincide for mixed states, so all three are exposed.
inline SParams s_params(const DensityMatrix& rho) {
    const auto c = detail::coherence_of(rho.matrix());
    return detail::s_params_of(c, detail::bmax_of(rho.matrix()));
}

inline CoherenceReport report(const DensityMatrix& rho) {
    const Mat4& m = rho.matrix();
    const auto c = detail::coherence_of(m);
    const auto t = detail::correlation_tensor_of(m);
    const double b = detail::bmax_of_tensor(t);
    const auto s = detail::s_params_of(c, b);
    CoherenceReport r;
    r.d_a = c.d_a;
    r.d_b = c.d_b;
    r.d_sq = c.d_sq;
    r.purity = detail::purity_of(m);
    r.bmax = b;
    r.concurrence = detail::concurrence_of(m);
    r.tcal = detail::tcal_of_tensor(t);
    r.s_a = s.s_a;
    r.s_b = s.s_b;
    r.s_comb = s.s_comb;
    r.t = t;
    return r;
}

}  // namespace qcoh

#endif  // QCOH_MEASURES_HPP
