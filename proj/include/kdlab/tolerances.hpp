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

namespace kdlab {

/// Tolerance ladder shared by every module. Each level absorbs the
/// numerical error of the level below it.
struct Tolerances {
    double exact = 1e-12;       // closed-form identities (indicators, pairings)
    double structural = 1e-10;  // unitarity, round trips, Hermiticity
    double positivity = 1e-9;   // PSD, trace and KD-positivity checks
    double membership = 1e-8;   // span / hull reconstruction residuals
    double witness = 1e-6;      // hull-gap witnesses
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace kdlab
