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

#ifndef QCOH_MATRIX_HPP
#define QCOH_MATRIX_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <string>

#include "qcoh/errors.hpp"

namespace qcoh {

using cplx = std::complex<double>;

// Project-wide numerical tolerances. All of them are absolute: every
// quantity in this library is O(1) because states are trace-normalized.
inline constexpr double tol_herm = 1e-10;
inline constexpr double tol_unitary = 1e-10;
inline constexpr double tol_eig = 1e-12;
inline constexpr double tol_psd = 1e-9;
inline constexpr int max_jacobi_sweeps = 64;

/// Dense complex matrix of fixed dimension N (N = 2, 3, 4), row-major.
/// Constructors reject non-finite entries; arithmetic assumes finite
/// operands.
///
/// Index convention, fixed project-wide: the two-qubit computational
/// basis is |i>_A |j>_B -> index 2i+j, i.e. |00>,|01>,|10>,|11>.
template <std::size_t N>
class CMat {
    static_assert(N >= 2 && N <= 4, "only dimensions 2..4 are supported");

public:
    CMat() = default;  // zero matrix

    CMat(std::initializer_list<cplx> entries) {
        if (entries.size() != N * N) {
            throw std::invalid_argument("CMat: expected " + std::to_string(N * N) +
                                        " entries, got " + std::to_string(entries.size()));
        }
        std::size_t k = 0;
        for (const cplx& v : entries) {
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                throw std::invalid_argument("CMat: non-finite entry at position " +
                                            std::to_string(k));
            }
            e_[k++] = v;
        }
    }

    static constexpr std::size_t dim() { return N; }

    static CMat identity() {
        CMat m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }

    cplx& operator()(std::size_t r, std::size_t c) { return e_[r * N + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return e_[r * N + c]; }

    cplx trace() const {
        cplx t = 0.0;
        for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
        return t;
    }

    friend CMat operator*(const CMat& a, const CMat& b) {
        CMat r;
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t k = 0; k < N; ++k) {
                const cplx aik = a(i, k);
                for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
            }
        }
        return r;
    }

    friend CMat operator*(const cplx& s, const CMat& a) {
        CMat r;
        for (std::size_t k = 0; k < N * N; ++k) r.e_[k] = s * a.e_[k];
        return r;
    }

    friend CMat operator*(const CMat& a, const cplx& s) { return s * a; }

    friend CMat operator+(const CMat& a, const CMat& b) {
        CMat r;
        for (std::size_t k = 0; k < N * N; ++k) r.e_[k] = a.e_[k] + b.e_[k];
        return r;
    }

    friend CMat operator-(const CMat& a, const CMat& b) {
        CMat r;
        for (std::size_t k = 0; k < N * N; ++k) r.e_[k] = a.e_[k] - b.e_[k];
        return r;
    }

    friend bool operator==(const CMat& a, const CMat& b) { return a.e_ == b.e_; }

private:
    std::array<cplx, N * N> e_{};
};

using Mat2 = CMat<2>;
using Mat3 = CMat<3>;
using Mat4 = CMat<4>;

/// 3x3 real matrix (the Pauli correlation tensor and its Gram matrix).
using RMat3 = std::array<std::array<double, 3>, 3>;

/// Conjugate transpose.
template <std::size_t N>
CMat<N> adjoint(const CMat<N>& a) {
    CMat<N> r;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj(a(j, i));
    return r;
}

/// Entrywise complex conjugate.
template <std::size_t N>
CMat<N> conjugate(const CMat<N>& a) {
    CMat<N> r;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj(a(i, j));
    return r;
}

/// Max-norm: max |a_ij|.
template <std::size_t N>
double max_norm(const CMat<N>& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) m = std::max(m, std::abs(a(i, j)));
    return m;
}

/// max |a_ij - conj(a_ji)|; zero for exactly Hermitian matrices.
template <std::size_t N>
double hermiticity_error(const CMat<N>& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i; j < N; ++j) m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
    return m;
}

/// max-norm of U'U - I.
template <std::size_t N>
double unitarity_error(const CMat<N>& u) {
    return max_norm(adjoint(u) * u - CMat<N>::identity());
}

/// Pauli matrices, labels fixed project-wide: sigma_1 = x, sigma_2 = y,
/// sigma_3 = z.
inline const Mat2& sigma_x() {
    static const Mat2 m{0.0, 1.0, 1.0, 0.0};
    return m;
}

inline const Mat2& sigma_y() {
    static const Mat2 m{0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0};
    return m;
}

inline const Mat2& sigma_z() {
    static const Mat2 m{1.0, 0.0, 0.0, -1.0};
    return m;
}

inline const Mat2& pauli(int i) {
    switch (i) {
        case 1: return sigma_x();
        case 2: return sigma_y();
        case 3: return sigma_z();
        default: throw std::invalid_argument("pauli: index must be 1, 2 or 3");
    }
}

/// Kronecker product with subsystem A as the slow index:
/// (a (x) b)_{2i+k, 2j+l} = a_ij b_kl.
inline Mat4 kron2(const Mat2& a, const Mat2& b) {
    Mat4 r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return r;
}

enum class Subsystem { A, B };

/// Reduced density matrix: traces out the complementary qubit.
/// Requires a Hermitian input (within tol_herm); preserves the trace.
inline Mat2 partial_trace(const Mat4& rho, Subsystem keep) {
    if (hermiticity_error(rho) > tol_herm) {
        throw non_hermitian_error("partial_trace: input is not Hermitian within tol_herm");
    }
    Mat2 r;
    if (keep == Subsystem::A) {
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                r(i, j) = rho(2 * i, 2 * j) + rho(2 * i + 1, 2 * j + 1);
    } else {
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) r(i, j) = rho(i, j) + rho(2 + i, 2 + j);
    }
    return r;
}

/// Eigendecomposition of a Hermitian matrix: real eigenvalues sorted
/// descending and the unitary matrix whose k-th column is the k-th
/// eigenvector.
template <std::size_t N>
struct HermEig {
    std::array<double, N> values;
    CMat<N> vectors;
};

namespace detail {

/// Frobenius norm of the off-diagonal part.
template <std::size_t N>
double off_norm(const CMat<N>& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

/// One Jacobi rotation zeroing a(p, q). The rotation columns are the
/// eigenvectors of the 2x2 Hermitian pivot block, picked with the
/// cancellation-free branch, so the pivot diagonalizes exactly.
template <std::size_t N>
void jacobi_rotate(CMat<N>& a, CMat<N>& v, std::size_t p, std::size_t q) {
    const cplx b = a(p, q);
    if (std::abs(b) == 0.0) return;

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double half_diff = 0.5 * (app - aqq);
    const double hyp = std::hypot(half_diff, std::abs(b));
    const double mu_hi = 0.5 * (app + aqq) + hyp;
    const double mu_lo = 0.5 * (app + aqq) - hyp;

    // Eigenvector (x, y) of [[app, b], [conj(b), aqq]] for mu_hi.
    cplx x, y;
    if (half_diff >= 0.0) {
        x = cplx(half_diff + hyp, 0.0);
        y = std::conj(b);
    } else {
        x = b;
        y = cplx(-half_diff + hyp, 0.0);
    }
    const double inv_n = 1.0 / std::sqrt(std::norm(x) + std::norm(y));
    x *= inv_n;
    y *= inv_n;
    // Rotation J has columns (x, y) and (-conj(y), conj(x)).

    for (std::size_t k = 0; k < N; ++k) {
        if (k == p || k == q) continue;
        const cplx akp = a(k, p);
        const cplx akq = a(k, q);
        a(k, p) = akp * x + akq * y;
        a(k, q) = -akp * std::conj(y) + akq * std::conj(x);
        a(p, k) = std::conj(a(k, p));
        a(q, k) = std::conj(a(k, q));
    }
    a(p, p) = mu_hi;
    a(q, q) = mu_lo;
    a(p, q) = 0.0;
    a(q, p) = 0.0;

    for (std::size_t k = 0; k < N; ++k) {
        const cplx vkp = v(k, p);
        const cplx vkq = v(k, q);
        v(k, p) = vkp * x + vkq * y;
        v(k, q) = -vkp * std::conj(y) + vkq * std::conj(x);
    }
}

}  // namespace detail

/// Cyclic Jacobi eigensolver for Hermitian matrices of dimension <= 4.
/// Sweeps until the off-diagonal Frobenius norm drops below tol_eig;
/// throws eig_convergence_error after max_jacobi_sweeps.
template <std::size_t N>
HermEig<N> hermitian_eig(const CMat<N>& h) {
    const double herr = hermiticity_error(h);
    if (herr > tol_herm) {
        std::ostringstream os;
        os << "hermitian_eig: input is not Hermitian (max |h - h'| = " << herr << ")";
        throw non_hermitian_error(os.str());
    }

    // Work on the exactly Hermitian part.
    CMat<N> a;
    for (std::size_t i = 0; i < N; ++i) {
        a(i, i) = h(i, i).real();
        for (std::size_t j = i + 1; j < N; ++j) {
            a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
            a(j, i) = std::conj(a(i, j));
        }
    }

    CMat<N> v = CMat<N>::identity();
    int sweep = 0;
    for (; sweep < max_jacobi_sweeps; ++sweep) {
        if (detail::off_norm(a) <= tol_eig) break;
        for (std::size_t p = 0; p < N; ++p)
            for (std::size_t q = p + 1; q < N; ++q) detail::jacobi_rotate(a, v, p, q);
    }
    if (detail::off_norm(a) > tol_eig) {
        throw eig_convergence_error("hermitian_eig: no convergence after " +
                                    std::to_string(max_jacobi_sweeps) + " sweeps");
    }

    std::array<double, N> vals;
    for (std::size_t i = 0; i < N; ++i) vals[i] = a(i, i).real();
    std::array<std::size_t, N> idx;
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&vals](std::size_t l, std::size_t r) { return vals[l] > vals[r]; });

    HermEig<N> out;
    for (std::size_t k = 0; k < N; ++k) {
        out.values[k] = vals[idx[k]];
        for (std::size_t r = 0; r < N; ++r) out.vectors(r, k) = v(r, idx[k]);
    }
    return out;
}

/// Eigenvalues of a 3x3 real symmetric matrix, descending.
inline std::array<double, 3> sym_eig3(const RMat3& s) {
    double asym = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) asym = std::max(asym, std::abs(s[i][j] - s[j][i]));
    if (asym > tol_herm) {
        throw non_hermitian_error("sym_eig3: input is not symmetric within tol_herm");
    }
    Mat3 m;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = 0.5 * (s[i][j] + s[j][i]);
    return hermitian_eig(m).values;
}

}  // namespace qcoh

#endif  // QCOH_MATRIX_HPP
