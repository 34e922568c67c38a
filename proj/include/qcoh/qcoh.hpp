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

#ifndef QCOH_QCOH_HPP
#define QCOH_QCOH_HPP

// Umbrella header for the core library (the CLI and JSON layers pull in
// vendored dependencies and are included separately).

#include "qcoh/errors.hpp"
#include "qcoh/matrix.hpp"
#include "qcoh/measures.hpp"
#include "qcoh/random_unitary.hpp"
#include "qcoh/rng.hpp"
#include "qcoh/sampler.hpp"
#include "qcoh/state.hpp"
#include "qcoh/theorems.hpp"

#endif  // QCOH_QCOH_HPP
