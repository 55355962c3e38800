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

#include <string>
#include <vector>

#include "json.hpp"
#include "kdlab/circle.hpp"
#include "kdlab/fragment.hpp"
#include "kdlab/weyl_heisenberg.hpp"
#include "kdlab/witness.hpp"

namespace kdlab {

using Json = nlohmann::json;

// Every reader below throws ParseError on malformed documents.

Json to_json(const FiniteAbelianGroup &G);
GroupPtr group_from_json(const Json &j);

Json to_json(Complex z);
Complex complex_from_json(const Json &j);

Json element_to_json(const FiniteAbelianGroup &G, int g);
/// Accepts a residue tuple or a bare index.
int element_from_json(const FiniteAbelianGroup &G, const Json &j);

Json to_json(const GFunction &psi);
/// A bare array of {"re","im"} objects, or {"group":..., "values":[...]}.
GFunction gfunction_from_json(const GroupPtr &G, const Json &j);
Json to_json(const DualFunction &phi);

Json to_json(const FiniteAbelianGroup &G, const WHElement &a);
WHElement wh_from_json(const FiniteAbelianGroup &G, const Json &j);

/// {"group":{...}, "kernel":[[re, im], ...]} with the kernel in row-major order.
Json to_json(const Operator &A);
/// `G` may be null, in which case the embedded group is used.
Operator operator_from_json(const Json &j, const GroupPtr &G = nullptr);

Json to_json(const PhaseSpaceFunction &F);
PhaseSpaceFunction phase_space_from_json(const Json &j, const GroupPtr &G = nullptr);
/// Columns g, chi, re, im; tuples dash-joined; rows in (g, chi) order.
std::string to_csv(const PhaseSpaceFunction &F);

Json to_json(const FiniteAbelianGroup &G, const Subgroup &H);
Json to_json(const FiniteAbelianGroup &G, const KdPureState &s);
Json to_json(const FiniteAbelianGroup &G, const std::vector<KdPureState> &family);

Json to_json(const KdRealityResult &r);
Json to_json(const KdPositivityResult &r);
Json to_json(const PureFamilyBasis &basis, const MembershipResult &m);
Json to_json(const ProjectionResult &p);
Json to_json(const PureFamilyBasis &basis, const WitnessResult &w, const WitnessOptions &options);

/// {"K":..., "coeffs":[[re, im], ...]} in row-major order.
Json to_json(const BandLimitedOperator &A);
BandLimitedOperator band_limited_from_json(const Json &j);
Json to_json(const CircleSearchReport &r);

/// Parses text as JSON, converting library exceptions to ParseError.
Json parse_json(const std::string &text);

}  // namespace kdlab
