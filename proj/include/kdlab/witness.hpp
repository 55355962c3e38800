// Copyright 2026 The kdlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

#include "kdlab/fragment.hpp"

namespace kdlab {

struct WitnessOptions {
    std::uint64_t seed = 0;
    /// Total number of projected-gradient steps across all directions.
    long budget = 10000;
    /// Step length along the (unit HS norm) direction.
    double step = 0.1;
    int steps_per_direction = 8;
    /// Stop at the first verified witness instead of spending the whole budget.
    bool stop_at_first = false;
    int projection_iterations = 300;
    double projection_tol = 1e-8;
    Tolerances tol = kDefaultTolerances;
};

struct WitnessResult {
    bool found = false;
    /// Best candidate seen (valid whenever steps_used > 0).
    Operator rho;
    Operator W;
    /// Gap reported by conv_membership.
    double gap = 0.0;
    /// Gap recomputed from hs_inner against every family projector.
    double verified_gap = 0.0;
    long steps_used = 0;
    int directions = 0;
};

/// Randomised search for a KD-positive state outside conv(family).
///
/// Directions alternate between pull-backs of random +-1 KD tables and
/// Gaussian Hermitian matrices. Each direction drives a short projected
/// gradient walk from I/|G|; every iterate is made exactly KD-real and mixed
/// with I/|G| just enough to be a KD-positive state before the hull test.
/// Not finding a witness is reported as such, never as a proof of equality.
WitnessResult find_conv_gap_witness(const PureFamilyBasis &basis, const WitnessOptions &options = {});

/// <W, rho> - max_i <W, Pi_i>, evaluated with hs_inner on explicit projectors.
double evaluate_gap(const PureFamilyBasis &basis, const Operator &rho, const Operator &W);

}  // namespace kdlab
