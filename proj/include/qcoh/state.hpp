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

#ifndef QCOH_STATE_HPP
#define QCOH_STATE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "qcoh/errors.hpp"
#include "qcoh/matrix.hpp"
#include "qcoh/random_unitary.hpp"
#include "qcoh/rng.hpp"

namespace qcoh {

/// Validated two-qubit density matrix: Hermitian, unit trace, positive
/// semidefinite (eigenvalues above -tol_psd are clamped to zero).
/// Immutable after construction.
class DensityMatrix {
public:
    const Mat4& matrix() const { return m_; }

    /// Wraps a matrix the caller guarantees to be a valid state (exact
    /// family constructors, unitary conjugation). External input goes
    /// through validate().
    static DensityMatrix unchecked(const Mat4& m) { return DensityMatrix(m); }

private:
    explicit DensityMatrix(const Mat4& m) : m_(m) {}
    Mat4 m_;
};

/// Checks Hermiticity, trace and positivity; clamps eigenvalues in
/// [-tol_psd, 0) to zero and renormalizes the trace.
inline DensityMatrix validate(const Mat4& m) {
    const double herr = hermiticity_error(m);
    if (herr > tol_herm) {
        std::ostringstream os;
        os << "state is not Hermitian (max |m - m'| = " << herr << ")";
        throw non_hermitian_error(os.str());
    }
    const cplx tr = m.trace();
    if (std::abs(tr - 1.0) > 1e-6) {
        std::ostringstream os;
        os << "state trace is " << tr.real() << ", expected 1 within 1e-6";
        throw trace_error(os.str());
    }

    const auto eig = hermitian_eig(m);
    const double lmin = eig.values[3];
    if (lmin < -tol_psd) {
        std::ostringstream os;
        os << "state is not positive semidefinite (eigenvalue " << lmin << ")";
        throw not_psd_error(os.str());
    }

    if (lmin < 0.0) {
        // Clamp eigensolver-level negatives and rebuild.
        std::array<double, 4> lam;
        double sum = 0.0;
        for (int i = 0; i < 4; ++i) {
            lam[i] = std::max(0.0, eig.values[i]);
            sum += lam[i];
        }
        Mat4 r;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                cplx v = 0.0;
                for (std::size_t k = 0; k < 4; ++k)
                    v += eig.vectors(i, k) * (lam[k] / sum) * std::conj(eig.vectors(j, k));
                r(i, j) = v;
            }
        // Exact Hermitian part (the reconstruction is symmetric only up
        // to rounding).
        for (std::size_t i = 0; i < 4; ++i) {
            r(i, i) = r(i, i).real();
            for (std::size_t j = i + 1; j < 4; ++j) {
                r(i, j) = 0.5 * (r(i, j) + std::conj(r(j, i)));
                r(j, i) = std::conj(r(i, j));
            }
        }
        return DensityMatrix::unchecked(r);
    }

    const double scale = 1.0 / tr.real();
    return DensityMatrix::unchecked(scale == 1.0 ? m : scale * m);
}

/// rho = V diag(lambda) V' with descending eigenvalues. Tiny negative
/// eigenvalues from the solver are clamped to zero.
struct SpectralDecomposition {
    std::array<double, 4> lambdas;
    Mat4 eigenvectors;
};

inline SpectralDecomposition spectral(const DensityMatrix& rho) {
    auto eig = hermitian_eig(rho.matrix());
    SpectralDecomposition sd;
    for (int i = 0; i < 4; ++i) sd.lambdas[i] = std::max(0.0, eig.values[i]);
    sd.eigenvectors = eig.vectors;
    return sd;
}

/// rho' = U rho U'. Requires U unitary within tol_unitary; the spectrum
/// is preserved.
inline DensityMatrix apply_unitary(const DensityMatrix& rho, const Mat4& u) {
    const double uerr = unitarity_error(u);
    if (uerr > tol_unitary) {
        std::ostringstream os;
        os << "apply_unitary: matrix is not unitary (max |U'U - I| = " << uerr << ")";
        throw not_unitary_error(os.str());
    }
    return DensityMatrix::unchecked(u * rho.matrix() * adjoint(u));
}

namespace detail {

inline void require_param(const char* family, const char* name, double v, double lo, double hi) {
    if (!(v >= lo && v <= hi)) {  // also rejects NaN
        std::ostringstream os;
        os << family << ": parameter " << name << " = " << v << " outside [" << lo << ", " << hi
           << "]";
        throw qcoh::domain_error(os.str());
    }
}

}  // namespace detail

/// Maximally nonlocal mixed state, eps in [0, 1]:
/// rows {1/2, 0, 0, eps/2; 0 ...; ...; eps/2, 0, 0, 1/2}.
inline DensityMatrix mnms(double eps) {
    detail::require_param("mnms", "eps", eps, 0.0, 1.0);
    Mat4 m;
    m(0, 0) = 0.5;
    m(3, 3) = 0.5;
    m(0, 3) = 0.5 * eps;
    m(3, 0) = 0.5 * eps;
    return DensityMatrix::unchecked(m);
}

/// Maximally entangled mixed state, gamma in [0, 1]; the two branches
/// coincide at gamma = 2/3 and the first one is used there.
inline DensityMatrix mems(double gamma) {
    detail::require_param("mems", "gamma", gamma, 0.0, 1.0);
    Mat4 m;
    if (gamma <= 2.0 / 3.0) {
        m(0, 0) = 1.0 / 3.0;
        m(1, 1) = 1.0 / 3.0;
        m(3, 3) = 1.0 / 3.0;
    } else {
        m(0, 0) = 0.5 * gamma;
        m(1, 1) = 1.0 - gamma;
        m(3, 3) = 0.5 * gamma;
    }
    m(0, 3) = 0.5 * gamma;
    m(3, 0) = 0.5 * gamma;
    return DensityMatrix::unchecked(m);
}

/// Rank-two example state with complex couplings, p in [0, 1]:
/// 1/2 * {1-p, 0, 1-p, 0; 0, p, ip, 0; 1-p, -ip, 1, 0; 0, 0, 0, 0}.
inline DensityMatrix exc(double p) {
    detail::require_param("exc", "p", p, 0.0, 1.0);
    Mat4 m;
    m(0, 0) = 0.5 * (1.0 - p);
    m(0, 2) = 0.5 * (1.0 - p);
    m(2, 0) = 0.5 * (1.0 - p);
    m(1, 1) = 0.5 * p;
    m(1, 2) = cplx(0.0, 0.5 * p);
    m(2, 1) = cplx(0.0, -0.5 * p);
    m(2, 2) = 0.5;
    return DensityMatrix::unchecked(m);
}

/// Werner state, p in [0, 1]:
/// 1/4 * {1+p, 0, 0, 2p; 0, 1-p, 0, 0; 0, 0, 1-p, 0; 2p, 0, 0, 1+p}.
inline DensityMatrix werner(double p) {
    detail::require_param("werner", "p", p, 0.0, 1.0);
    Mat4 m;
    m(0, 0) = 0.25 * (1.0 + p);
    m(1, 1) = 0.25 * (1.0 - p);
    m(2, 2) = 0.25 * (1.0 - p);
    m(3, 3) = 0.25 * (1.0 + p);
    m(0, 3) = 0.5 * p;
    m(3, 0) = 0.5 * p;
    return DensityMatrix::unchecked(m);
}

/// Projector onto k1|00> + k2|11> with k2 = sqrt(1 - k1^2).
inline DensityMatrix pure_schmidt(double k1) {
    detail::require_param("pure_schmidt", "k1", k1, 0.0, 1.0);
    const double k2 = std::sqrt(std::max(0.0, 1.0 - k1 * k1));
    Mat4 m;
    m(0, 0) = k1 * k1;
    m(0, 3) = k1 * k2;
    m(3, 0) = k1 * k2;
    m(3, 3) = k2 * k2;
    return DensityMatrix::unchecked(m);
}

/// (1-p)/4 * I + p |psi><psi| with |psi> = k1|00> + k2|11>; reduces to
/// werner(p) at k1 = 1/sqrt(2).
inline DensityMatrix gen_werner(double p, double k1) {
    detail::require_param("gen_werner", "p", p, 0.0, 1.0);
    detail::require_param("gen_werner", "k1", k1, 0.0, 1.0);
    const double k2 = std::sqrt(std::max(0.0, 1.0 - k1 * k1));
    Mat4 m;
    for (std::size_t i = 0; i < 4; ++i) m(i, i) = 0.25 * (1.0 - p);
    m(0, 0) += p * k1 * k1;
    m(3, 3) += p * k2 * k2;
    m(0, 3) = p * k1 * k2;
    m(3, 0) = p * k1 * k2;
    return DensityMatrix::unchecked(m);
}

/// The state families provided by this library.
enum class Family { mnms, mems, exc, werner, gen_werner, pure_schmidt };

/// Family constructor dispatch. param2 is only read by gen_werner
/// (the Schmidt coefficient k1, defaulting to 1/sqrt(2)).
inline DensityMatrix make_family(Family f, double param,
                                 double param2 = std::numbers::sqrt2 / 2) {
    switch (f) {
        case Family::mnms: return mnms(param);
        case Family::mems: return mems(param);
        case Family::exc: return exc(param);
        case Family::werner: return werner(param);
        case Family::gen_werner: return gen_werner(param, param2);
        case Family::pure_schmidt: return pure_schmidt(param);
    }
    throw qcoh::domain_error("make_family: unknown family");
}

inline const char* family_name(Family f) {
    switch (f) {
        case Family::mnms: return "mnms";
        case Family::mems: return "mems";
        case Family::exc: return "exc";
        case Family::werner: return "werner";
        case Family::gen_werner: return "gen-werner";
        case Family::pure_schmidt: return "pure-schmidt";
    }
    return "?";
}

/// Random state of the requested rank: Haar-random eigenvectors with
/// eigenvalues drawn uniformly on the rank-dimensional simplex.
/// Deterministic in the seed.
inline DensityMatrix random_density(std::uint64_t seed, int rank) {
    if (rank < 1 || rank > 4) {
        throw qcoh::domain_error("random_density: rank must be in 1..4");
    }
    Rng rng(seed);
    std::array<double, 4> lam{};
    if (rank == 1) {
        lam[0] = 1.0;
    } else {
        double sum = 0.0;
        for (int i = 0; i < rank; ++i) {
            lam[i] = -std::log(1.0 - rng.uniform());
            sum += lam[i];
        }
        for (int i = 0; i < rank; ++i) lam[i] /= sum;
        std::sort(lam.begin(), lam.begin() + rank, std::greater<>());
    }
    const Mat4 v = haar_unitary(rng);
    Mat4 m;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            cplx acc = 0.0;
            for (std::size_t k = 0; k < 4; ++k) acc += v(i, k) * lam[k] * std::conj(v(j, k));
            m(i, j) = acc;
        }
    for (std::size_t i = 0; i < 4; ++i) {
        m(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < 4; ++j) {
            m(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m(j, i) = std::conj(m(i, j));
        }
    }
    return DensityMatrix::unchecked(m);
}

}  // namespace qcoh

#endif  // QCOH_STATE_HPP
