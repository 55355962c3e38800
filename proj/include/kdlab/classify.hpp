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

#include <optional>
#include <vector>

#include "kdlab/operator.hpp"

namespace kdlab {

/// A member of the KD-positive pure family:
///   psi(g') = chi(g') 1_H(g' - g) / sqrt(|H| / |G|).
/// `g_rep` and `chi_rep` are the minimal-index representatives of the cosets
/// g + H and chi H^perp; the global phase is fixed to 1.
struct KdPureState {
    Subgroup H;
    Subgroup H_perp;
    int g_rep = 0;
    int chi_rep = 0;
    GFunction vector;

    Operator projector() const { return Operator::projector(vector); }
};

/// Builds the family member for (H, g, chi), reducing g and chi to their coset
/// representatives first.
KdPureState make_subgroup_state(const GroupPtr &G, const Subgroup &H, int g, int chi);

/// The indicator 1_H(g' - g) 1_{H^perp}(chi' conj(chi)) that the state's KD
/// distribution must equal.
PhaseSpaceFunction expected_kd(const GroupPtr &G, const KdPureState &state);

/// All KD-positive pure states up to phase, ordered by subgroup (as returned
/// by enumerate_subgroups), then g_rep, then chi_rep. Size |G| * #subgroups.
std::vector<KdPureState> enumerate_kd_positive_pure(const GroupPtr &G, int bound = kDefaultSubgroupBound);

/// Index of the family member with |<psi, member>| > 1 - tol, if any.
/// Throws PreconditionError when |psi| is not 1 within tol.
std::optional<std::size_t> recognize_kd_positive_pure(const std::vector<KdPureState> &family,
                                                      const GFunction &psi, double tol);

}  // namespace kdlab
