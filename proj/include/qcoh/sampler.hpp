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

#ifndef QCOH_SAMPLER_HPP
#define QCOH_SAMPLER_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <future>
#include <string>
#include <thread>
#include <vector>

#include "qcoh/errors.hpp"
#include "qcoh/matrix.hpp"
#include "qcoh/measures.hpp"
#include "qcoh/random_unitary.hpp"
#include "qcoh/rng.hpp"
#include "qcoh/state.hpp"

namespace qcoh {

enum class Measure { haar, jarlskog };

inline const char* measure_name(Measure m) {
    return m == Measure::haar ? "haar" : "jarlskog";
}

/// Measures of one randomly conjugated state U rho U'.
struct SamplePoint {
    double d_sq;
    double bmax;
    double s_comb;
};

struct ExplorationResult {
    std::vector<SamplePoint> points;
    double observed_d2_max;
    double observed_d2_min;
    double observed_bmax_max;
    double observed_bmax_min;
    std::size_t n_samples;
    std::uint64_t seed;
};

namespace detail {

inline SamplePoint sample_point_of(const Mat4& rho_prime) {
    const auto c = coherence_of(rho_prime);
    const double b = bmax_of(rho_prime);
    return {c.d_sq, b, s_params_of(c, b).s_comb};
}

inline SamplePoint explore_one(const Mat4& rho, std::uint64_t seed, std::uint64_t index,
                               Measure measure) {
    Rng rng(derive_stream(seed, index));
    const Mat4 u = measure == Measure::haar ? haar_unitary(rng)
                                            : jarlskog_unitary(JarlskogParams::random(rng));
    return sample_point_of(u * rho * adjoint(u));
}

}  // namespace detail

/// Monte Carlo sweep of n random global unitaries applied to rho. Each
/// sample index draws from its own stream (see derive_stream), so the
/// result is bit-identical for a fixed (seed, n, measure) regardless of
/// how many threads execute it.
inline ExplorationResult explore(const DensityMatrix& rho, std::size_t n, std::uint64_t seed,
                                 Measure measure, unsigned threads = 1) {
    if (n < 1) throw qcoh::domain_error("explore: n must be >= 1");

    ExplorationResult res;
    res.points.resize(n);
    res.n_samples = n;
    res.seed = seed;
    const Mat4& m = rho.matrix();

    if (threads <= 1 || n < 2 * threads) {
        for (std::size_t i = 0; i < n; ++i)
            res.points[i] = detail::explore_one(m, seed, i, measure);
    } else {
        std::vector<std::future<void>> futs;
        const std::size_t chunk = (n + threads - 1) / threads;
        for (unsigned w = 0; w < threads; ++w) {
            const std::size_t lo = w * chunk;
            const std::size_t hi = std::min(n, lo + chunk);
            if (lo >= hi) break;
            futs.push_back(std::async(std::launch::async, [&, lo, hi] {
                for (std::size_t i = lo; i < hi; ++i)
                    res.points[i] = detail::explore_one(m, seed, i, measure);
            }));
        }
        for (auto& f : futs) f.get();
    }

    res.observed_d2_max = res.points[0].d_sq;
    res.observed_d2_min = res.points[0].d_sq;
    res.observed_bmax_max = res.points[0].bmax;
    res.observed_bmax_min = res.points[0].bmax;
    for (const auto& p : res.points) {
        res.observed_d2_max = std::max(res.observed_d2_max, p.d_sq);
        res.observed_d2_min = std::min(res.observed_d2_min, p.d_sq);
        res.observed_bmax_max = std::max(res.observed_bmax_max, p.bmax);
        res.observed_bmax_min = std::min(res.observed_bmax_min, p.bmax);
    }
    return res;
}

/// Stochastic stationarity probe for a diagonal state: applies n
/// Jarlskog unitaries with all 16 parameters uniform in [-delta, delta]
/// and returns the largest coherence D^2 seen. At a diagonal state with
/// descending entries the coherence is stationary, so the result should
/// not exceed d_sq(rho) + 10 delta^2 (an engineering bound on the
/// quadratic model, not a theoretical constant).
inline double stationarity_check(const DensityMatrix& rho_diag, double delta, std::size_t n,
                                 std::uint64_t seed) {
    const Mat4& m = rho_diag.matrix();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j && std::abs(m(i, j)) > 1e-10) {
                throw qcoh::domain_error("stationarity_check: state is not diagonal within 1e-10");
            }
    if (!(delta >= 0.0)) throw qcoh::domain_error("stationarity_check: delta must be >= 0");

    double best = detail::coherence_of(m).d_sq;
    for (std::size_t i = 0; i < n; ++i) {
        Rng rng(derive_stream(seed, i));
        const Mat4 u = jarlskog_unitary(JarlskogParams::random_within(rng, delta));
        best = std::max(best, detail::coherence_of(u * m * adjoint(u)).d_sq);
    }
    return best;
}

}  // namespace qcoh

#endif  // QCOH_SAMPLER_HPP
