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

#ifndef QCOH_ERRORS_HPP
#define QCOH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qcoh {

/// Base class for all qcoh validation failures.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input matrix is not Hermitian within tol_herm.
class non_hermitian_error : public error {
public:
    using error::error;
};

/// Jacobi eigensolver failed to converge within the sweep budget.
class eig_convergence_error : public error {
public:
    using error::error;
};

/// State has an eigenvalue below -tol_psd.
class not_psd_error : public error {
public:
    using error::error;
};

/// State trace deviates from 1 beyond the pre-normalization tolerance.
class trace_error : public error {
public:
    using error::error;
};

/// Matrix supposed to be unitary fails the U'U = I check.
class not_unitary_error : public error {
public:
    using error::error;
};

/// Parameter outside its documented domain.
class domain_error : public error {
public:
    using error::error;
};

/// Malformed state file (shape, non-finite entries, missing keys).
class parse_error : public error {
public:
    using error::error;
};

}  // namespace qcoh

#endif  // QCOH_ERRORS_HPP
