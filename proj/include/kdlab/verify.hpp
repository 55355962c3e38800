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
#include <string>
#include <vector>

#include "kdlab/serialize.hpp"

namespace kdlab {

struct Check {
    std::string name;
    /// Which identity or theorem of the KD framework the check exercises.
    std::string anchor;
    bool passed = false;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct VerificationReport {
    std::string suite;
    GroupPtr group;
    std::uint64_t seed = 0;
    std::size_t family_size = 0;
    /// Sorted by name.
    std::vector<Check> checks;
    /// ISO-8601 UTC; the only field allowed to differ between identical runs.
    std::string timestamp;

    int passed() const;
    int failed() const;
    bool ok() const { return failed() == 0; }
};

struct VerifyOptions {
    std::uint64_t seed = 0;
    /// Random operators/states drawn per sampled check.
    int samples = 100;
    /// Projected-gradient steps for the hull-gap search.
    long witness_budget = 400;
    Tolerances tol = kDefaultTolerances;
};

/// Runs every invariant suite on G. Deterministic for fixed options.
VerificationReport verify_all(const GroupPtr &G, const VerifyOptions &options = {});

Json to_json(const VerificationReport &report);
/// Human-readable table with 6 significant digits.
std::string to_table(const VerificationReport &report);

/// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

}  // namespace kdlab
